#pragma once

#include "cfgflow/dag.hpp"
#include "cfgflow/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cfgflow {

/// Graphviz DOT text. Nodes appear in vertex order with the given labels;
/// edges in edge-id order, labeled with their exact weight when a flow is given.
std::string export_dot(const Dag& d, const std::vector<std::string>& labels,
                       const std::optional<RationalVector>& flow = std::nullopt, const std::string& name = "G");

}  // namespace cfgflow
