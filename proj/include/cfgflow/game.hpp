#pragma once

#include "cfgflow/flow.hpp"
#include "cfgflow/product.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace cfgflow {

/// Worth of every vertex of a product digraph; entry 0 (∅_M) is zero.
using Game = RationalVector;
/// Payoff of agent i at index i - 1.
using Payoff = RationalVector;

/// Throws DomainMismatch (length) or InvalidArgument (nonzero worth at ∅_M).
void validate_game(const ProductDigraph& pd, const Game& g);

/// 1_K. Throws EmptyProfile for ∅_M.
Game dirac_game(const ProductDigraph& pd, std::size_t vertex);

/// Agents i ∈ N with v(K) = v(K') on every edge of E^i.
Coalition null_agents(const ProductDigraph& pd, const Game& g);

/// Coefficients λ_i(K,K') as an agents × edges matrix (row i - 1).
/// Equal split: Λ(K,K') / |Q| for each mover.
RationalMatrix equal_split_coefficients(const ProductDigraph& pd, const Flow& f);

/// Σ_i λ_i(K,K') per edge: the candidate flow of a marginalist value.
Flow flow_sums(const RationalMatrix& coefficients);

/// Φ = C · (v(K') - v(K)). Throws DomainMismatch on a wrong shape or a
/// nonzero coefficient outside E^i.
Payoff marginalist_value(const ProductDigraph& pd, const Game& g, const RationalMatrix& coefficients);

/// Equal-split flow method. Throws NotUnitary.
Payoff flow_method_value(const ProductDigraph& pd, const Game& g, const Flow& f);

using ValueFunctional = std::function<Payoff(const Game&)>;

struct ValueAudit {
  bool efficiency = true;
  bool null_agent = true;
  bool linearity = true;
  std::vector<std::string> witnesses;
};

/// Efficiency and null-agent checks on every sample game, linearity on
/// consecutive pairs with a few fixed scalars.
ValueAudit audit_value(const ProductDigraph& pd, const ValueFunctional& value, const std::vector<Game>& sample);

/// Uniform rational in [-bound, bound] with denominators up to `denom`.
Rational random_rational(std::mt19937_64& rng, int bound = 9, int denom = 6);
Game random_game(const ProductDigraph& pd, std::mt19937_64& rng);
/// All Dirac games followed by `extra` random games.
std::vector<Game> audit_sample(const ProductDigraph& pd, std::mt19937_64& rng, std::size_t extra = 20);

}  // namespace cfgflow
