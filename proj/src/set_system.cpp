#include "cfgflow/set_system.hpp"

#include "cfgflow/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace cfgflow {

std::optional<std::size_t> SetSystem::index_of(Coalition c) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), c);
  if (it == members_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

bool SetSystem::is_power_set() const noexcept {
  return members_.size() == (std::size_t{1} << ground_.size());
}

SetSystem validate_set_system(Coalition ground, std::span<const Coalition> family) {
  if (ground.empty()) throw Error(ErrorKind::EmptyGround, "ground coalition is empty");
  SetSystem s;
  s.ground_ = ground;
  s.members_.assign(family.begin(), family.end());
  for (Coalition c : s.members_) {
    if (!c.subset_of(ground))
      throw Error(ErrorKind::OutOfGround, "feasible coalition " + to_string(c) + " is not a subset of " +
                                              to_string(ground));
  }
  std::sort(s.members_.begin(), s.members_.end());
  s.members_.erase(std::unique(s.members_.begin(), s.members_.end()), s.members_.end());
  if (s.members_.front() != Coalition{})
    throw Error(ErrorKind::NotNormal, "set system over " + to_string(ground) + " lacks the empty coalition");
  if (s.members_.back() != ground)
    throw Error(ErrorKind::NotNormal, "set system over " + to_string(ground) + " lacks its ground coalition");
  return s;
}

SetSystem power_set_system(Coalition ground) {
  const auto all = power_set(ground);
  return validate_set_system(ground, all);
}

CoveringDigraph covering_digraph(SetSystem s) {
  const auto members = s.members();
  std::vector<Edge> edges;
  std::vector<Coalition> covers;
  for (std::size_t i = 0; i < members.size(); ++i) {
    covers.clear();
    // Candidates come in canonical order, so any feasible coalition strictly
    // between members[i] and a candidate has already been seen; the minimal
    // ones among those are exactly the covers found so far.
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!members[i].proper_subset_of(members[j])) continue;
      const bool blocked = std::any_of(covers.begin(), covers.end(),
                                       [&](Coalition c) { return c.proper_subset_of(members[j]); });
      if (blocked) continue;
      covers.push_back(members[j]);
      edges.push_back({i, j});
    }
  }
  CoveringDigraph d;
  d.dag_ = Dag(members.size(), std::move(edges), 0, members.size() - 1);
  d.system_ = std::move(s);
  return d;
}

PathCounts count_paths(const Dag& d) {
  const std::size_t n = d.vertex_count();
  PathCounts out{std::vector<Integer>(n, 0), std::vector<Integer>(n, 0), 0};
  out.from_bottom[d.source()] = 1;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t id : d.out_edges(v)) out.from_bottom[d.edge(id).head] += out.from_bottom[v];
  out.to_top[d.sink()] = 1;
  for (std::size_t v = n; v-- > 0;)
    for (std::size_t id : d.out_edges(v)) out.to_top[v] += out.to_top[d.edge(id).head];
  out.total_maximal = out.from_bottom[d.sink()];
  return out;
}

namespace {

// Shortest and longest source->sink path lengths.
std::pair<std::size_t, std::size_t> path_length_range(const Dag& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> shortest(n, SIZE_MAX), longest(n, 0);
  std::vector<bool> reached(n, false);
  shortest[d.source()] = 0;
  reached[d.source()] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!reached[v]) continue;
    for (std::size_t id : d.out_edges(v)) {
      const std::size_t h = d.edge(id).head;
      shortest[h] = std::min(shortest[h], shortest[v] + 1);
      longest[h] = reached[h] ? std::max(longest[h], longest[v] + 1) : longest[v] + 1;
      reached[h] = true;
    }
  }
  return {shortest[d.sink()], longest[d.sink()]};
}

}  // namespace

Classification classify(const SetSystem& s) {
  const auto members = s.members();
  std::unordered_set<std::uint64_t> feasible;
  for (Coalition c : members) feasible.insert(c.mask());
  auto has = [&](Coalition c) { return feasible.count(c.mask()) != 0; };
  const Coalition ground = s.ground();

  Classification out;
  const CoveringDigraph d = covering_digraph(s);
  const auto [shortest, longest] = path_length_range(d.dag());
  const auto n = static_cast<std::size_t>(ground.size());
  out.is_regular = shortest == n && longest == n;

  auto one_point_extension = [&](Coalition from, Coalition within) {
    for (int i : (within - from).agents())
      if (has(from | Coalition::singleton(i))) return true;
    return false;
  };

  bool intersection_closed = true;
  bool union_stable = true;
  bool accessible_chains = true;
  for (Coalition a : members) {
    for (Coalition b : members) {
      if (!has(a & b)) intersection_closed = false;
      if (a.intersects(b) && !has(a | b)) union_stable = false;
      if (a.proper_subset_of(b) && !one_point_extension(a, b)) accessible_chains = false;
    }
  }
  bool extendable = true;
  for (Coalition a : members)
    if (a != ground && !one_point_extension(a, ground)) extendable = false;

  // Members are normal by construction.
  out.is_convex_geometry = intersection_closed && extendable;
  out.is_augmenting = has(Coalition{}) && union_stable && accessible_chains;
  return out;
}

RationalVector uniform_path_flow(const Dag& d) {
  const PathCounts counts = count_paths(d);
  RationalVector flow(static_cast<Eigen::Index>(d.edge_count()));
  for (std::size_t id = 0; id < d.edge_count(); ++id) {
    const Edge& e = d.edge(id);
    flow[static_cast<Eigen::Index>(id)] =
        Rational(counts.from_bottom[e.tail] * counts.to_top[e.head], counts.total_maximal);
  }
  return flow;
}

}  // namespace cfgflow
