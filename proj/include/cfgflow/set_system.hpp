#pragma once

#include "cfgflow/coalition.hpp"
#include "cfgflow/dag.hpp"
#include "cfgflow/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cfgflow {

/// A normal set system: a family of feasible coalitions of `ground` that
/// contains both the empty coalition and `ground`. Members are stored in
/// canonical order, so member 0 is the empty coalition and the last member is
/// the ground coalition.
class SetSystem {
 public:
  Coalition ground() const noexcept { return ground_; }
  std::span<const Coalition> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Coalition& member(std::size_t i) const { return members_[i]; }
  std::optional<std::size_t> index_of(Coalition c) const;
  bool contains(Coalition c) const { return index_of(c).has_value(); }
  /// True when the family is the full power set of the ground coalition.
  bool is_power_set() const noexcept;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  friend SetSystem validate_set_system(Coalition ground, std::span<const Coalition> family);
  Coalition ground_;
  std::vector<Coalition> members_;
};

/// Canonicalizes (deduplicates, sorts) and validates a family.
/// Throws EmptyGround, OutOfGround or NotNormal.
SetSystem validate_set_system(Coalition ground, std::span<const Coalition> family);

/// Full power set of `ground` as a set system.
SetSystem power_set_system(Coalition ground);

/// Hasse diagram of (feasible, ⊆). Vertex i is `system().member(i)`.
class CoveringDigraph {
 public:
  const SetSystem& system() const noexcept { return system_; }
  const Dag& dag() const noexcept { return dag_; }
  Coalition vertex(std::size_t i) const { return system_.member(i); }
  /// Agents entering along edge `id`: head \ tail.
  Coalition movers(std::size_t id) const {
    return vertex(dag_.edge(id).head) - vertex(dag_.edge(id).tail);
  }

 private:
  friend CoveringDigraph covering_digraph(SetSystem s);
  SetSystem system_;
  Dag dag_;
};

CoveringDigraph covering_digraph(SetSystem s);

struct PathCounts {
  std::vector<Integer> from_bottom;  ///< number of paths source -> v
  std::vector<Integer> to_top;       ///< number of paths v -> sink
  Integer total_maximal;             ///< number of paths source -> sink
};

/// Dynamic-programming path counts over the topological vertex order.
PathCounts count_paths(const Dag& d);

struct Classification {
  bool is_regular = false;
  bool is_convex_geometry = false;
  bool is_augmenting = false;
};

Classification classify(const SetSystem& s);

/// Unitary flow giving every maximal path equal weight:
/// from_bottom(tail) * to_top(head) / total_maximal on each edge.
RationalVector uniform_path_flow(const Dag& d);

}  // namespace cfgflow
