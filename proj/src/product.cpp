#include "cfgflow/product.hpp"

#include "cfgflow/error.hpp"

#include <algorithm>

namespace cfgflow {

ProductDigraph build_product(std::vector<SetSystem> systems, Coalition agents, std::size_t size_cap) {
  const std::size_t m = systems.size();
  if (m < 1 || m > kMaxComponents)
    throw Error(ErrorKind::InvalidArgument, "configuration must have between 1 and " +
                                                std::to_string(kMaxComponents) + " elements");
  Coalition covered;
  for (const SetSystem& s : systems) covered = covered | s.ground();
  if (covered != agents)
    throw Error(ErrorKind::CoverageViolation,
                "union of configuration elements " + to_string(covered) + " differs from N = " + to_string(agents));

  ProductDigraph pd;
  pd.agents_ = agents;
  std::size_t count = 1;
  for (SetSystem& s : systems) {
    pd.stride_.push_back(count);
    if (s.size() > size_cap / count)
      throw Error(ErrorKind::SizeCap, "product digraph exceeds the vertex cap of " + std::to_string(size_cap));
    count *= s.size();
    pd.factors_.push_back(covering_digraph(std::move(s)));
  }

  struct Tagged {
    Edge edge;
    ProductEdge info;
  };
  std::vector<Tagged> tagged;
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t q = 0; q < m; ++q) {
      const CoveringDigraph& f = pd.factors_[q];
      const std::size_t here = pd.coordinate(v, q);
      for (std::size_t fe : f.dag().out_edges(here)) {
        const std::size_t there = f.dag().edge(fe).head;
        const std::size_t head = v + (there - here) * pd.stride_[q];
        tagged.push_back({{v, head}, {q, fe, f.movers(fe)}});
      }
    }
  }
  std::sort(tagged.begin(), tagged.end(), [](const Tagged& a, const Tagged& b) { return a.edge < b.edge; });
  std::vector<Edge> edges;
  edges.reserve(tagged.size());
  pd.meta_.reserve(tagged.size());
  for (const Tagged& t : tagged) {
    edges.push_back(t.edge);
    pd.meta_.push_back(t.info);
  }
  pd.dag_ = Dag(count, std::move(edges), 0, count - 1);
  return pd;
}

ProductDigraph factor_digraph(const SetSystem& s) { return build_product({s}, s.ground()); }

ProductDigraph hypercube(std::size_t m) {
  if (m < 1 || m > kMaxComponents)
    throw Error(ErrorKind::InvalidArgument, "hypercube dimension must be between 1 and " +
                                                std::to_string(kMaxComponents));
  std::vector<SetSystem> systems;
  for (std::size_t q = 0; q < m; ++q) {
    const Coalition c = Coalition::singleton(static_cast<int>(q) + 1);
    const Coalition family[] = {Coalition{}, c};
    systems.push_back(validate_set_system(c, family));
  }
  return build_product(std::move(systems), Coalition::first(static_cast<int>(m)));
}

std::size_t hypercube_edge(const ProductDigraph& cube, IndexSet s, std::size_t q) {
  auto id = cube.dag().find_edge(s.without(q).mask(), s.mask());
  if (!s.contains(q) || !id) throw Error(ErrorKind::InvalidArgument, "no hypercube edge for S=" + to_string(s));
  return *id;
}

Profile ProductDigraph::profile(std::size_t v) const {
  Profile p;
  p.reserve(factors_.size());
  for (std::size_t q = 0; q < factors_.size(); ++q) p.push_back(part(v, q));
  return p;
}

std::size_t ProductDigraph::vertex_from_coordinates(std::span<const std::size_t> coords) const {
  std::size_t v = 0;
  for (std::size_t q = 0; q < factors_.size(); ++q) v += coords[q] * stride_[q];
  return v;
}

std::optional<std::size_t> ProductDigraph::vertex_of(const Profile& p) const {
  if (p.size() != factors_.size()) return std::nullopt;
  std::size_t v = 0;
  for (std::size_t q = 0; q < factors_.size(); ++q) {
    auto idx = factors_[q].system().index_of(p[q]);
    if (!idx) return std::nullopt;
    v += *idx * stride_[q];
  }
  return v;
}

IndexSet ProductDigraph::support(std::size_t v) const {
  IndexSet s;
  for (std::size_t q = 0; q < factors_.size(); ++q)
    if (coordinate(v, q) != 0) s = s.with(q);
  return s;
}

bool ProductDigraph::is_relevant(std::size_t v) const {
  int intermediate = 0;
  for (std::size_t q = 0; q < factors_.size(); ++q) {
    const std::size_t c = coordinate(v, q);
    if (c != 0 && c != factors_[q].system().size() - 1) ++intermediate;
  }
  return intermediate <= 1;
}

std::optional<RelevantForm> ProductDigraph::relevant_form(std::size_t id) const {
  const ProductEdge& info = meta_[id];
  const std::size_t head = dag_.edge(id).head;
  const IndexSet s = support(head);
  for (std::size_t r = 0; r < factors_.size(); ++r) {
    if (r == info.factor) continue;
    const std::size_t c = coordinate(head, r);
    if (c != 0 && c != factors_[r].system().size() - 1) return std::nullopt;
  }
  return RelevantForm{s, info.factor, info.factor_edge};
}

std::size_t ProductDigraph::relevant_vertex(IndexSet s, std::size_t q, std::size_t member) const {
  std::size_t v = 0;
  for (std::size_t r = 0; r < factors_.size(); ++r) {
    std::size_t c = 0;
    if (r == q)
      c = member;
    else if (s.contains(r))
      c = factors_[r].system().size() - 1;
    v += c * stride_[r];
  }
  return v;
}

std::size_t ProductDigraph::relevant_edge(IndexSet s, std::size_t q, std::size_t factor_edge) const {
  const Edge& fe = factors_[q].dag().edge(factor_edge);
  auto id = dag_.find_edge(relevant_vertex(s, q, fe.tail), relevant_vertex(s, q, fe.head));
  if (!s.contains(q) || !id) throw Error(ErrorKind::InvalidArgument, "no relevant edge for S=" + to_string(s));
  return *id;
}

std::size_t ProductDigraph::full_vertex(IndexSet s) const {
  std::size_t v = 0;
  for (std::size_t r = 0; r < factors_.size(); ++r)
    if (s.contains(r)) v += (factors_[r].system().size() - 1) * stride_[r];
  return v;
}

Subdigraph agent_subdigraph(const ProductDigraph& pd, int agent) {
  if (!pd.agents().contains(agent))
    throw Error(ErrorKind::UnknownAgent, "agent " + std::to_string(agent) + " is not in N = " + to_string(pd.agents()));
  Subdigraph sub;
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    if (!pd.edge_info(id).movers.contains(agent)) continue;
    sub.edges.push_back(id);
    sub.vertices.push_back(pd.dag().edge(id).tail);
    sub.vertices.push_back(pd.dag().edge(id).head);
  }
  std::sort(sub.vertices.begin(), sub.vertices.end());
  sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()), sub.vertices.end());
  return sub;
}

std::vector<std::vector<std::size_t>> components(const ProductDigraph& pd, const Subdigraph& sub) {
  std::vector<Edge> edges;
  edges.reserve(sub.edges.size());
  for (std::size_t id : sub.edges) edges.push_back(pd.dag().edge(id));
  return components(sub.vertices, edges);
}

std::vector<std::size_t> relevant_edges(const ProductDigraph& pd) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < pd.edge_count(); ++id)
    if (pd.is_relevant_edge(id)) out.push_back(id);
  return out;
}

}  // namespace cfgflow
