#include "cfgflow/two_step_flow.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

namespace cfgflow {

namespace {

void require_power_sets(const ProductDigraph& pd) {
  for (std::size_t q = 0; q < pd.factor_count(); ++q)
    if (!pd.factor(q).system().is_power_set())
      throw Error(ErrorKind::NotPowerSet, "factor " + std::to_string(q + 1) + " is not a full power set");
}

// Nonempty subsets of M containing q, ordered by (size, mask).
std::vector<IndexSet> supports_containing(std::size_t m, std::size_t q) {
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    IndexSet s(mask);
    if (s.contains(q)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Factor-flow extraction without precondition checks.
Flow hypercube_sums(const ProductDigraph& pd, const ProductDigraph& cube, const Flow& f) {
  Flow lm = zeros<Rational>(static_cast<Eigen::Index>(cube.edge_count()));
  for (std::size_t id = 0; id < cube.edge_count(); ++id) {
    const std::size_t q = cube.edge_info(id).factor;
    const IndexSet s(static_cast<std::uint32_t>(cube.dag().edge(id).head));
    const Dag& fd = pd.factor(q).dag();
    for (std::size_t fe : fd.out_edges(fd.source()))
      lm[static_cast<Eigen::Index>(id)] += f[static_cast<Eigen::Index>(pd.relevant_edge(s, q, fe))];
  }
  return lm;
}

}  // namespace

std::string profile_string(const ProductDigraph& pd, std::size_t v) {
  std::string out = "(";
  for (std::size_t q = 0; q < pd.factor_count(); ++q) {
    if (q) out += ",";
    out += to_string(pd.part(v, q));
  }
  return out + ")";
}

std::string edge_string(const ProductDigraph& pd, std::size_t id) {
  const Edge& e = pd.dag().edge(id);
  return "(" + profile_string(pd, e.tail) + "," + profile_string(pd, e.head) + ")";
}

Flow compose_two_step_flow(const ProductDigraph& pd, const Flow& cube_flow, std::span<const Flow> factor_flows) {
  const std::size_t m = pd.factor_count();
  const ProductDigraph cube = hypercube(m);
  if (factor_flows.size() != m)
    throw Error(ErrorKind::DomainMismatch, "expected " + std::to_string(m) + " factor flows");
  require_unitary(cube.dag(), cube_flow, "hypercube flow");
  for (std::size_t q = 0; q < m; ++q)
    require_unitary(pd.factor(q).dag(), factor_flows[q], "factor flow " + std::to_string(q + 1));

  Flow out = zeros<Rational>(static_cast<Eigen::Index>(pd.edge_count()));
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    auto form = pd.relevant_form(id);
    if (!form) continue;
    out[static_cast<Eigen::Index>(id)] =
        cube_flow[static_cast<Eigen::Index>(hypercube_edge(cube, form->support, form->factor))] *
        factor_flows[form->factor][static_cast<Eigen::Index>(form->factor_edge)];
  }
  return out;
}

Flow extract_hypercube_flow(const ProductDigraph& pd, const Flow& f) {
  const auto check = check_flow(pd.dag(), f);
  if (!check.is_unitary) throw Error(ErrorKind::AxiomViolated, "input is not a unitary flow");
  const auto null = check_null_flow_nonrelevant(pd, f);
  if (!null.holds) throw Error(ErrorKind::AxiomViolated, null.detail);
  return hypercube_sums(pd, hypercube(pd.factor_count()), f);
}

FactorFlow extract_factor_flow(const ProductDigraph& pd, const Flow& f, std::size_t q) {
  const std::size_t m = pd.factor_count();
  if (q >= m) throw Error(ErrorKind::InvalidArgument, "factor index out of range");
  if (static_cast<std::size_t>(f.size()) != pd.edge_count())
    throw Error(ErrorKind::DomainMismatch, "flow does not match the product digraph");
  const ProductDigraph cube = hypercube(m);
  const Flow lm = hypercube_sums(pd, cube, f);
  const Dag& fd = pd.factor(q).dag();

  auto ratio = [&](IndexSet s) {
    const Rational denom = lm[static_cast<Eigen::Index>(hypercube_edge(cube, s, q))];
    Flow out(static_cast<Eigen::Index>(fd.edge_count()));
    for (std::size_t fe = 0; fe < fd.edge_count(); ++fe)
      out[static_cast<Eigen::Index>(fe)] = f[static_cast<Eigen::Index>(pd.relevant_edge(s, q, fe))] / denom;
    return out;
  };

  std::optional<FactorFlow> result;
  for (IndexSet s : supports_containing(m, q)) {
    if (lm[static_cast<Eigen::Index>(hypercube_edge(cube, s, q))] == 0) continue;
    if (!result) {
      result = FactorFlow{ratio(s), s, false};
    } else if (!exactly_equal(ratio(s), result->flow)) {
      result->s_star_dependent = true;
      break;
    }
  }
  if (!result)
    throw Error(ErrorKind::NoNonzeroWitness,
                "no S containing factor " + std::to_string(q + 1) + " carries nonzero hypercube flow");
  return *result;
}

AxiomCheck check_null_flow_nonrelevant(const ProductDigraph& pd, const Flow& f) {
  detail::require_edge_domain(pd.dag(), f);
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    if (pd.is_relevant_edge(id) || f[static_cast<Eigen::Index>(id)] == 0) continue;
    return {false, id, "non-relevant edge " + edge_string(pd, id) + " carries " + to_string(f[static_cast<Eigen::Index>(id)])};
  }
  return {};
}

AxiomCheck check_flow_proportionality(const ProductDigraph& pd, const Flow& f) {
  detail::require_edge_domain(pd.dag(), f);
  const std::size_t m = pd.factor_count();
  for (std::size_t q = 0; q < m; ++q) {
    const auto supports = supports_containing(m, q);
    const std::size_t fe_count = pd.factor(q).dag().edge_count();
    // A[S][e]; proportionality says every 2x2 minor vanishes.
    RationalMatrix a(static_cast<Eigen::Index>(supports.size()), static_cast<Eigen::Index>(fe_count));
    std::vector<std::vector<std::size_t>> ids(supports.size(), std::vector<std::size_t>(fe_count));
    for (std::size_t si = 0; si < supports.size(); ++si)
      for (std::size_t fe = 0; fe < fe_count; ++fe) {
        ids[si][fe] = pd.relevant_edge(supports[si], q, fe);
        a(static_cast<Eigen::Index>(si), static_cast<Eigen::Index>(fe)) = f[static_cast<Eigen::Index>(ids[si][fe])];
      }
    for (Eigen::Index s1 = 0; s1 < a.rows(); ++s1)
      for (Eigen::Index s2 = s1 + 1; s2 < a.rows(); ++s2)
        for (Eigen::Index e1 = 0; e1 < a.cols(); ++e1)
          for (Eigen::Index e2 = e1 + 1; e2 < a.cols(); ++e2) {
            if (a(s1, e1) * a(s2, e2) == a(s2, e1) * a(s1, e2)) continue;
            const std::size_t w = ids[static_cast<std::size_t>(s1)][static_cast<std::size_t>(e1)];
            return {false, w,
                    "factor " + std::to_string(q + 1) + ": supports " + to_string(supports[static_cast<std::size_t>(s1)]) +
                        " and " + to_string(supports[static_cast<std::size_t>(s2)]) + " are not proportional at " +
                        edge_string(pd, w)};
          }
  }
  return {};
}

AxiomCheck check_intracoalitional_anonymity(const ProductDigraph& pd, const Flow& f) {
  require_power_sets(pd);
  detail::require_edge_domain(pd.dag(), f);
  // Orbit of an edge under Sym(P_q): (K_{-q}, q, |K_q|).
  std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> first;
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    const std::size_t q = pd.edge_info(id).factor;
    const std::size_t tail = pd.dag().edge(id).tail;
    const std::size_t rest = tail - pd.coordinate(tail, q) * pd.stride(q);
    auto key = std::make_tuple(rest, q, pd.part(tail, q).size());
    auto [it, fresh] = first.emplace(key, id);
    if (fresh || f[static_cast<Eigen::Index>(it->second)] == f[static_cast<Eigen::Index>(id)]) continue;
    return {false, id,
            edge_string(pd, id) + " and " + edge_string(pd, it->second) +
                " differ by a permutation inside factor " + std::to_string(q + 1) + " but carry different flow"};
  }
  return {};
}

AxiomCheck check_coalitional_anonymity(const ProductDigraph& pd, const Flow& f) {
  require_power_sets(pd);
  detail::require_edge_domain(pd.dag(), f);
  const std::size_t m = pd.factor_count();
  const ProductDigraph cube = hypercube(m);
  const Flow lm = hypercube_sums(pd, cube, f);
  std::map<int, std::size_t> first;
  for (std::size_t id = 0; id < cube.edge_count(); ++id) {
    const int s = IndexSet(static_cast<std::uint32_t>(cube.dag().edge(id).head)).size();
    auto [it, fresh] = first.emplace(s, id);
    if (fresh || lm[static_cast<Eigen::Index>(it->second)] == lm[static_cast<Eigen::Index>(id)]) continue;
    const IndexSet head(static_cast<std::uint32_t>(cube.dag().edge(id).head));
    const std::size_t q = cube.edge_info(id).factor;
    const Dag& fd = pd.factor(q).dag();
    const std::size_t w = pd.relevant_edge(head, q, fd.out_edges(fd.source()).front());
    return {false, w,
            "aggregate flow into S=" + to_string(head) + " through factor " + std::to_string(q + 1) + " is " +
                to_string(lm[static_cast<Eigen::Index>(id)]) + ", another support of size " + std::to_string(s) +
                " gets " + to_string(lm[static_cast<Eigen::Index>(it->second)])};
  }
  return {};
}

}  // namespace cfgflow
