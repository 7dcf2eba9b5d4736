#pragma once

#include "cfgflow/game.hpp"

#include <map>
#include <optional>

namespace cfgflow {

/// u(K) = ∪_q K_q.
Coalition union_map(const Profile& p);
Coalition union_map(const ProductDigraph& pd, std::size_t vertex);

/// F⁰ and the digraph Γ* of u-images of product edges with distinct endpoints.
struct ReachableSystem {
  SetSystem coalitions;                    ///< F⁰ over N
  Dag star;                                ///< vertex i is coalitions.member(i)
  std::vector<std::size_t> witness;        ///< per star edge, one product edge mapping onto it
  std::vector<std::size_t> vertex_image;   ///< per product vertex, its index in F⁰
};

ReachableSystem reachable_system(const ProductDigraph& pd);

struct ConditionCheck {
  bool holds = true;
  std::optional<std::size_t> counterexample;  ///< first failing product edge
};

/// Every edge has u(K) = u(K') or u(K') \ u(K) = K'_q \ K_q.
ConditionCheck check_reduction_condition(const ProductDigraph& pd);

using CoalitionGame = std::map<Coalition, Rational>;

/// v*(K) = v0(u(K)). Throws MissingWorth when some u(K) has no worth, and
/// InvalidArgument when v0(∅) ≠ 0.
Game lift_game(const ProductDigraph& pd, const CoalitionGame& v0);

struct InducedValue {
  Payoff pay;
  ReachableSystem system;
  Flow star_flow;  ///< on system.star
};

/// Flow method of the lifted game, plus the flow pushed onto Γ*.
/// Throws ConditionViolated when the reduction condition fails.
InducedValue induced_value(const ProductDigraph& pd, const Flow& f, const CoalitionGame& v0);

}  // namespace cfgflow
