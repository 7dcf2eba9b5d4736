#include "cfgflow/coalition.hpp"

#include "cfgflow/error.hpp"

#include <algorithm>

namespace cfgflow {

Coalition Coalition::of(std::initializer_list<int> agents) {
  return of(std::span<const int>(agents.begin(), agents.size()));
}

Coalition Coalition::of(std::span<const int> agents) {
  std::uint64_t mask = 0;
  for (int a : agents) {
    if (a < 1 || a > kMaxAgents)
      throw Error(ErrorKind::UnknownAgent, "agent index " + std::to_string(a) + " outside 1.." +
                                               std::to_string(kMaxAgents));
    mask |= std::uint64_t{1} << (a - 1);
  }
  return Coalition(mask);
}

Coalition Coalition::first(int n) {
  if (n < 0 || n > kMaxAgents)
    throw Error(ErrorKind::InvalidArgument, "agent count " + std::to_string(n) + " outside 0.." +
                                                std::to_string(kMaxAgents));
  return Coalition(n == 0 ? 0 : (std::uint64_t{1} << n) - 1);
}

std::vector<int> Coalition::agents() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string to_string(Coalition c) {
  std::string out = "{";
  bool first = true;
  for (int a : c.agents()) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

std::vector<Coalition> power_set(Coalition ground) {
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << ground.size());
  // Gosper-free walk over submasks, then canonical sort.
  const std::uint64_t g = ground.mask();
  std::uint64_t sub = g;
  while (true) {
    out.emplace_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & g;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t m = s.mask(); m != 0; m &= m - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(m) + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace cfgflow
