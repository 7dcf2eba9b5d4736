#include "cfgflow/reduction.hpp"

#include "cfgflow/two_step_flow.hpp"

#include <algorithm>

namespace cfgflow {

Coalition union_map(const Profile& p) {
  Coalition u;
  for (Coalition c : p) u = u | c;
  return u;
}

Coalition union_map(const ProductDigraph& pd, std::size_t vertex) {
  Coalition u;
  for (std::size_t q = 0; q < pd.factor_count(); ++q) u = u | pd.part(vertex, q);
  return u;
}

ReachableSystem reachable_system(const ProductDigraph& pd) {
  std::vector<Coalition> image(pd.vertex_count());
  for (std::size_t v = 0; v < pd.vertex_count(); ++v) image[v] = union_map(pd, v);

  ReachableSystem out;
  out.coalitions = validate_set_system(pd.agents(), image);
  out.vertex_image.reserve(image.size());
  for (Coalition c : image) out.vertex_image.push_back(*out.coalitions.index_of(c));

  std::map<Edge, std::size_t> first;
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    const Edge& e = pd.dag().edge(id);
    const Edge star{out.vertex_image[e.tail], out.vertex_image[e.head]};
    if (star.tail != star.head) first.emplace(star, id);
  }
  std::vector<Edge> edges;
  for (const auto& [star, id] : first) {
    edges.push_back(star);
    out.witness.push_back(id);
  }
  out.star = Dag(out.coalitions.size(), std::move(edges), 0, out.coalitions.size() - 1);
  return out;
}

ConditionCheck check_reduction_condition(const ProductDigraph& pd) {
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    const Edge& e = pd.dag().edge(id);
    const Coalition r = union_map(pd, e.tail);
    const Coalition r2 = union_map(pd, e.head);
    if (r == r2 || r2 - r == pd.edge_info(id).movers) continue;
    return {false, id};
  }
  return {};
}

Game lift_game(const ProductDigraph& pd, const CoalitionGame& v0) {
  if (auto it = v0.find(Coalition{}); it != v0.end() && it->second != 0)
    throw Error(ErrorKind::InvalidArgument, "worth of the empty coalition must be 0");
  Game g(static_cast<Eigen::Index>(pd.vertex_count()));
  g[0] = 0;
  for (std::size_t v = 1; v < pd.vertex_count(); ++v) {
    const Coalition u = union_map(pd, v);
    if (u.empty()) {
      g[static_cast<Eigen::Index>(v)] = 0;
      continue;
    }
    auto it = v0.find(u);
    if (it == v0.end()) throw Error(ErrorKind::MissingWorth, "no worth for reachable coalition " + to_string(u));
    g[static_cast<Eigen::Index>(v)] = it->second;
  }
  return g;
}

InducedValue induced_value(const ProductDigraph& pd, const Flow& f, const CoalitionGame& v0) {
  const ConditionCheck cond = check_reduction_condition(pd);
  if (!cond.holds)
    throw Error(ErrorKind::ConditionViolated,
                "edge " + edge_string(pd, *cond.counterexample) + " violates the reduction condition");
  InducedValue out;
  out.pay = flow_method_value(pd, lift_game(pd, v0), f);
  out.system = reachable_system(pd);
  out.star_flow = zeros<Rational>(static_cast<Eigen::Index>(out.system.star.edge_count()));
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    const Edge& e = pd.dag().edge(id);
    const std::size_t a = out.system.vertex_image[e.tail];
    const std::size_t b = out.system.vertex_image[e.head];
    if (a == b) continue;
    out.star_flow[static_cast<Eigen::Index>(*out.system.star.find_edge(a, b))] += f[static_cast<Eigen::Index>(id)];
  }
  return out;
}

}  // namespace cfgflow
