#pragma once

#include "cfgflow/flow.hpp"
#include "cfgflow/product.hpp"

#include <optional>
#include <span>
#include <string>

namespace cfgflow {

/// Λ(K_{S,K_q}, K_{S,K'_q}) = Λ^M(R_{S\q}, R_S) · Λ^q(K_q, K'_q); zero elsewhere.
/// cube_flow lives on hypercube(m), factor_flows[q] on pd.factor(q).dag().
/// Throws NotUnitary when an input is not a unitary flow.
Flow compose_two_step_flow(const ProductDigraph& pd, const Flow& cube_flow, std::span<const Flow> factor_flows);

/// Λ^M(R_{S\q}, R_S) = Σ_{(∅,K_q)} Λ(K_{S\q}, K_{S,K_q}).
/// Throws AxiomViolated unless f is unitary and null on non-relevant edges.
Flow extract_hypercube_flow(const ProductDigraph& pd, const Flow& f);

struct FactorFlow {
  Flow flow;
  IndexSet witness;                 ///< S* used for the division
  bool s_star_dependent = false;    ///< another admissible S would give a different result
};

/// Λ^q(e) = Λ(K_{S*,e}) / Λ^M(R_{S*\q}, R_{S*}) with S* the smallest S ∋ q
/// (by size, then mask) carrying nonzero hypercube weight.
/// Throws NoNonzeroWitness.
FactorFlow extract_factor_flow(const ProductDigraph& pd, const Flow& f, std::size_t q);

struct AxiomCheck {
  bool holds = true;
  std::optional<std::size_t> witness;  ///< first offending edge of Γ_F
  std::string detail;
};

AxiomCheck check_null_flow_nonrelevant(const ProductDigraph& pd, const Flow& f);
AxiomCheck check_flow_proportionality(const ProductDigraph& pd, const Flow& f);
/// Both throw NotPowerSet unless every factor is a full power set.
AxiomCheck check_intracoalitional_anonymity(const ProductDigraph& pd, const Flow& f);
AxiomCheck check_coalitional_anonymity(const ProductDigraph& pd, const Flow& f);

/// "(K_1,...,K_m)" with 1-based agents.
std::string profile_string(const ProductDigraph& pd, std::size_t v);
std::string edge_string(const ProductDigraph& pd, std::size_t id);

}  // namespace cfgflow
