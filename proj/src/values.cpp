#include "cfgflow/values.hpp"

#include "cfgflow/two_step_flow.hpp"

namespace cfgflow {

namespace {

void require_power_sets(const ProductDigraph& pd) {
  for (std::size_t q = 0; q < pd.factor_count(); ++q)
    if (!pd.factor(q).system().is_power_set())
      throw Error(ErrorKind::NotPowerSet, "factor " + std::to_string(q + 1) + " is not a full power set");
}

}  // namespace

Game upper_game(const ProductDigraph& pd, const Game& g, std::size_t q, Coalition k_q) {
  validate_game(pd, g);
  const std::size_t m = pd.factor_count();
  if (q >= m) throw Error(ErrorKind::InvalidArgument, "factor index out of range");
  const auto member = pd.factor(q).system().index_of(k_q);
  if (!member)
    throw Error(ErrorKind::InfeasibleCoalition,
                to_string(k_q) + " is not feasible in factor " + std::to_string(q + 1));
  Game up(Eigen::Index{1} << m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const IndexSet s(mask);
    const std::size_t v = s.contains(q) ? pd.relevant_vertex(s, q, *member) : pd.full_vertex(s);
    up[mask] = g[static_cast<Eigen::Index>(v)];
  }
  return up;
}

Flow shapley_hypercube_flow(std::size_t m) {
  const ProductDigraph cube = hypercube(m);
  Flow f(static_cast<Eigen::Index>(cube.edge_count()));
  for (std::size_t id = 0; id < cube.edge_count(); ++id) {
    const auto s = static_cast<unsigned>(IndexSet(static_cast<std::uint32_t>(cube.dag().edge(id).head)).size());
    f[static_cast<Eigen::Index>(id)] = factorial_ratio(static_cast<unsigned>(m) - s, s - 1, static_cast<unsigned>(m));
  }
  return f;
}

Flow shapley_lattice_flow(const CoveringDigraph& d) {
  if (!d.system().is_power_set()) throw Error(ErrorKind::NotPowerSet, "set system is not a full power set");
  const auto p = static_cast<unsigned>(d.system().ground().size());
  Flow f(static_cast<Eigen::Index>(d.dag().edge_count()));
  for (std::size_t id = 0; id < d.dag().edge_count(); ++id) {
    const auto k = static_cast<unsigned>(d.vertex(d.dag().edge(id).tail).size());
    f[static_cast<Eigen::Index>(id)] = factorial_ratio(p - k - 1, k, p);
  }
  return f;
}

Payoff two_step_value(const ProductDigraph& pd, const Game& g, const Flow& cube_flow,
                      std::span<const Flow> factor_flows) {
  validate_game(pd, g);
  const std::size_t m = pd.factor_count();
  if (factor_flows.size() != m)
    throw Error(ErrorKind::DomainMismatch, "expected " + std::to_string(m) + " factor flows");
  const ProductDigraph cube = hypercube(m);
  Payoff pay = zeros<Rational>(pd.agent_count());
  for (std::size_t q = 0; q < m; ++q) {
    const SetSystem& sys = pd.factor(q).system();
    RationalVector lower(static_cast<Eigen::Index>(sys.size()));
    for (std::size_t j = 0; j < sys.size(); ++j)
      lower[static_cast<Eigen::Index>(j)] =
          flow_method_value(cube, upper_game(pd, g, q, sys.member(j)), cube_flow)[static_cast<Eigen::Index>(q)];
    const ProductDigraph fd = factor_digraph(sys);
    const Payoff part = flow_method_value(fd, lower, factor_flows[q]);
    pay.head(part.size()) += part;
  }
  return pay;
}

Payoff shapley_like_value(const SetSystem& s, const RationalVector& worth) {
  if (static_cast<std::size_t>(worth.size()) != s.size())
    throw Error(ErrorKind::DomainMismatch, "lower game must list one worth per feasible coalition");
  if (worth[0] != 0) throw Error(ErrorKind::InvalidArgument, "worth of the empty coalition must be 0");
  const CoveringDigraph d = covering_digraph(s);
  const PathCounts paths = count_paths(d.dag());
  Payoff pay = zeros<Rational>(s.ground().max_agent());
  for (std::size_t id = 0; id < d.dag().edge_count(); ++id) {
    const Edge& e = d.dag().edge(id);
    const Coalition movers = d.movers(id);
    const Rational coef(paths.from_bottom[e.tail] * paths.to_top[e.head],
                        paths.total_maximal * movers.size());
    const Rational term = coef * (worth[static_cast<Eigen::Index>(e.head)] - worth[static_cast<Eigen::Index>(e.tail)]);
    for (int i : movers.agents()) pay[i - 1] += term;
  }
  return pay;
}

Flow shapley_two_step_flow(const ProductDigraph& pd) {
  std::vector<Flow> factors;
  for (std::size_t q = 0; q < pd.factor_count(); ++q) factors.push_back(uniform_path_flow(pd.factor(q).dag()));
  return compose_two_step_flow(pd, shapley_hypercube_flow(pd.factor_count()), factors);
}

Flow az_flow(const ProductDigraph& pd) {
  require_power_sets(pd);
  std::vector<Flow> factors;
  for (std::size_t q = 0; q < pd.factor_count(); ++q) factors.push_back(shapley_lattice_flow(pd.factor(q)));
  return compose_two_step_flow(pd, shapley_hypercube_flow(pd.factor_count()), factors);
}

Payoff az_value(const ProductDigraph& pd, const Game& g) {
  require_power_sets(pd);
  validate_game(pd, g);
  const std::size_t m = pd.factor_count();
  Payoff pay = zeros<Rational>(pd.agent_count());
  for (std::size_t q = 0; q < m; ++q) {
    const SetSystem& sys = pd.factor(q).system();
    const auto p = static_cast<unsigned>(sys.ground().size());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      const IndexSet s(mask);
      if (!s.contains(q)) continue;
      const Rational upper = factorial_ratio(static_cast<unsigned>(m - s.size()), static_cast<unsigned>(s.size() - 1),
                                             static_cast<unsigned>(m));
      for (std::size_t j = 0; j < sys.size(); ++j) {
        const Coalition k = sys.member(j);
        if (k == sys.ground()) continue;
        const Rational coef = upper * factorial_ratio(p - static_cast<unsigned>(k.size()) - 1,
                                                      static_cast<unsigned>(k.size()), p);
        const Rational base = g[static_cast<Eigen::Index>(pd.relevant_vertex(s, q, j))];
        for (int i : (sys.ground() - k).agents()) {
          const std::size_t up = *sys.index_of(k | Coalition::singleton(i));
          pay[i - 1] += coef * (g[static_cast<Eigen::Index>(pd.relevant_vertex(s, q, up))] - base);
        }
      }
    }
  }
  return pay;
}

Payoff configuration_value(int n, const RationalVector& v, std::span<const Coalition> config) {
  if (n < 1 || n > kMaxAgents) throw Error(ErrorKind::InvalidArgument, "agent count out of range");
  if (v.size() != (Eigen::Index{1} << n))
    throw Error(ErrorKind::DomainMismatch, "coalition game must list all 2^n worths");
  if (v[0] != 0) throw Error(ErrorKind::InvalidArgument, "worth of the empty coalition must be 0");
  const std::size_t m = config.size();
  if (m < 1 || m > kMaxComponents) throw Error(ErrorKind::InvalidArgument, "configuration size out of range");
  Coalition covered;
  for (Coalition c : config) covered = covered | c;
  if (covered != Coalition::first(n))
    throw Error(ErrorKind::CoverageViolation, "configuration does not cover 1..n");

  Payoff pay = zeros<Rational>(n);
  for (std::size_t q = 0; q < m; ++q) {
    const Coalition pq = config[q];
    const auto p = static_cast<unsigned>(pq.size());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      const IndexSet s(mask);
      if (!s.contains(q)) continue;
      Coalition others;
      for (std::size_t r = 0; r < m; ++r)
        if (r != q && s.contains(r)) others = others | config[r];
      const Rational upper = factorial_ratio(static_cast<unsigned>(m - s.size()), static_cast<unsigned>(s.size() - 1),
                                             static_cast<unsigned>(m));
      for (int i : (pq - others).agents()) {
        const std::uint64_t rest = (pq - Coalition::singleton(i)).mask();
        // Submasks of P_q \ i.
        for (std::uint64_t k = rest;; k = (k - 1) & rest) {
          const auto ks = static_cast<unsigned>(std::popcount(k));
          const std::uint64_t without = k | others.mask();
          const std::uint64_t with = without | Coalition::singleton(i).mask();
          pay[i - 1] += upper * factorial_ratio(p - ks - 1, ks, p) *
                        (v[static_cast<Eigen::Index>(with)] - v[static_cast<Eigen::Index>(without)]);
          if (k == 0) break;
        }
      }
    }
  }
  return pay;
}

}  // namespace cfgflow
