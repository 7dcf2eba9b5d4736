#pragma once

#include "cfgflow/game.hpp"

#include <span>

namespace cfgflow {

/// K_q-upper game on hypercube(m): v(K_S) when q ∉ S, v(K_{S,K_q}) otherwise.
/// Indexed by the support mask. Throws InfeasibleCoalition when K_q ∉ F_q.
Game upper_game(const ProductDigraph& pd, const Game& g, std::size_t q, Coalition k_q);

/// (m-s)!(s-1)!/m! on every edge (R_{S\q}, R_S) of hypercube(m).
Flow shapley_hypercube_flow(std::size_t m);

/// k!(p-k-1)!/p! on every edge (K, K ∪ i) of a Boolean lattice.
/// Throws NotPowerSet.
Flow shapley_lattice_flow(const CoveringDigraph& d);

/// Two-step procedure: hypercube flow method on the upper games, then the
/// factor flow methods on the induced lower games, summed over factors.
Payoff two_step_value(const ProductDigraph& pd, const Game& g, const Flow& cube_flow,
                      std::span<const Flow> factor_flows);

/// Equal weight on maximal paths of a single set system. `worth` is indexed by
/// member of s; the payoff has length s.ground().max_agent().
Payoff shapley_like_value(const SetSystem& s, const RationalVector& worth);

/// Shapley hypercube flow composed with uniform path flows on every factor.
Flow shapley_two_step_flow(const ProductDigraph& pd);

/// Shapley hypercube flow composed with lattice Shapley flows.
/// Throws NotPowerSet.
Flow az_flow(const ProductDigraph& pd);

/// Closed form with coefficients (m-s)!(s-1)!/m! · (p-k-1)!k!/p!.
/// Throws NotPowerSet.
Payoff az_value(const ProductDigraph& pd, const Game& g);

/// Configuration value of a TU game v over 2^N (indexed by mask, v[0] = 0)
/// with configuration `config`. Payoff length is n.
Payoff configuration_value(int n, const RationalVector& v, std::span<const Coalition> config);

}  // namespace cfgflow
