#pragma once

#include "cfgflow/coalition.hpp"
#include "cfgflow/dag.hpp"
#include "cfgflow/set_system.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cfgflow {

inline constexpr std::size_t kMaxComponents = 8;
inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// One feasible coalition per element of the configuration.
using Profile = std::vector<Coalition>;

/// Per-edge metadata of the product digraph.
struct ProductEdge {
  std::size_t factor = 0;       ///< the unique coordinate q that changes (0-based)
  std::size_t factor_edge = 0;  ///< id of (K_q, K'_q) in the factor digraph
  Coalition movers;             ///< K'_q \ K_q
};

/// Canonical description of a relevant edge (K_{S,K_q}, K_{S,K'_q}).
struct RelevantForm {
  IndexSet support;  ///< S = μ(head)
  std::size_t factor = 0;
  std::size_t factor_edge = 0;
};

/// Cartesian product of the covering digraphs of m normal set systems.
///
/// Vertices are profiles addressed by a mixed-radix index over the per-factor
/// member indices, factor 0 being the least significant digit. Vertex 0 is the
/// empty profile and the last vertex is the configuration (P_1, ..., P_m).
class ProductDigraph {
 public:
  std::size_t factor_count() const noexcept { return factors_.size(); }
  const CoveringDigraph& factor(std::size_t q) const { return factors_[q]; }
  Coalition agents() const noexcept { return agents_; }
  /// Length of payoff vectors: the largest agent index of N.
  int agent_count() const noexcept { return agents_.max_agent(); }

  const Dag& dag() const noexcept { return dag_; }
  std::size_t vertex_count() const noexcept { return dag_.vertex_count(); }
  std::size_t edge_count() const noexcept { return dag_.edge_count(); }
  const ProductEdge& edge_info(std::size_t id) const { return meta_[id]; }

  /// Mixed-radix weight of coordinate q.
  std::size_t stride(std::size_t q) const { return stride_[q]; }
  /// Member index of coordinate q of vertex v.
  std::size_t coordinate(std::size_t v, std::size_t q) const { return (v / stride_[q]) % factors_[q].system().size(); }
  Coalition part(std::size_t v, std::size_t q) const { return factors_[q].vertex(coordinate(v, q)); }
  Profile profile(std::size_t v) const;
  std::size_t vertex_from_coordinates(std::span<const std::size_t> coords) const;
  std::optional<std::size_t> vertex_of(const Profile& p) const;

  IndexSet support(std::size_t v) const;
  /// At most one coordinate q has K_q ∉ {∅, P_q}.
  bool is_relevant(std::size_t v) const;
  bool is_relevant_edge(std::size_t id) const {
    return is_relevant(dag_.edge(id).tail) && is_relevant(dag_.edge(id).head);
  }
  /// (S, q, factor edge) when edge `id` has the form (K_{S,K_q}, K_{S,K'_q})
  /// with S = μ(head); nullopt otherwise.
  std::optional<RelevantForm> relevant_form(std::size_t id) const;
  /// The profile K_{S,K_q}: P_r on S \ q, member `member` on q, ∅ elsewhere.
  /// Requires q ∈ S.
  std::size_t relevant_vertex(IndexSet s, std::size_t q, std::size_t member) const;
  /// The edge (K_{S,K_q}, K_{S,K'_q}) for factor edge `factor_edge`.
  std::size_t relevant_edge(IndexSet s, std::size_t q, std::size_t factor_edge) const;
  /// The profile K_S (P_r on S, ∅ elsewhere).
  std::size_t full_vertex(IndexSet s) const;

 private:
  friend ProductDigraph build_product(std::vector<SetSystem> systems, Coalition agents, std::size_t size_cap);
  std::vector<CoveringDigraph> factors_;
  std::vector<std::size_t> stride_;
  Coalition agents_;
  Dag dag_;
  std::vector<ProductEdge> meta_;
};

/// Throws InvalidArgument (m outside 1..8), CoverageViolation (∪ P_q ≠ agents),
/// or SizeCap (Π |F_q| > size_cap).
ProductDigraph build_product(std::vector<SetSystem> systems, Coalition agents,
                             std::size_t size_cap = kDefaultSizeCap);

/// A single set system seen as a product with m = 1 over its own ground.
ProductDigraph factor_digraph(const SetSystem& s);

/// The directed m-hypercube between configuration elements. Component q is
/// represented by agent q + 1, so vertex ids coincide with support masks.
ProductDigraph hypercube(std::size_t m);

/// Edge id of (R_{S\q}, R_S) in hypercube(m).
std::size_t hypercube_edge(const ProductDigraph& cube, IndexSet s, std::size_t q);

struct Subdigraph {
  std::vector<std::size_t> vertices;  ///< ascending
  std::vector<std::size_t> edges;     ///< ascending edge ids
};

/// E^i_F: edges whose movers contain agent i, with their endpoints.
/// Throws UnknownAgent when i ∉ N.
Subdigraph agent_subdigraph(const ProductDigraph& pd, int agent);

/// Weak components of a subdigraph of pd.
std::vector<std::vector<std::size_t>> components(const ProductDigraph& pd, const Subdigraph& sub);

std::vector<std::size_t> relevant_edges(const ProductDigraph& pd);

}  // namespace cfgflow
