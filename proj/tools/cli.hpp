#pragma once

#include <iosfwd>

namespace cfgflow {

/// Exit codes: 0 success, 1 validation error, 2 axiom or condition violation
/// reported, 3 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cfgflow
