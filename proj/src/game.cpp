#include "cfgflow/game.hpp"

namespace cfgflow {

void validate_game(const ProductDigraph& pd, const Game& g) {
  if (static_cast<std::size_t>(g.size()) != pd.vertex_count())
    throw Error(ErrorKind::DomainMismatch, "game has " + std::to_string(g.size()) + " worths for " +
                                               std::to_string(pd.vertex_count()) + " profiles");
  if (g[0] != 0) throw Error(ErrorKind::InvalidArgument, "worth of the empty profile must be 0");
}

Game dirac_game(const ProductDigraph& pd, std::size_t vertex) {
  if (vertex == 0) throw Error(ErrorKind::EmptyProfile, "Dirac game of the empty profile is undefined");
  if (vertex >= pd.vertex_count()) throw Error(ErrorKind::InvalidArgument, "profile index out of range");
  Game g = zeros<Rational>(static_cast<Eigen::Index>(pd.vertex_count()));
  g[static_cast<Eigen::Index>(vertex)] = 1;
  return g;
}

Coalition null_agents(const ProductDigraph& pd, const Game& g) {
  validate_game(pd, g);
  Coalition active;
  const Flow inc = edge_increments(pd.dag(), g);
  for (std::size_t id = 0; id < pd.edge_count(); ++id)
    if (inc[static_cast<Eigen::Index>(id)] != 0) active = active | pd.edge_info(id).movers;
  return pd.agents() - active;
}

RationalMatrix equal_split_coefficients(const ProductDigraph& pd, const Flow& f) {
  detail::require_edge_domain(pd.dag(), f);
  RationalMatrix c = RationalMatrix::Constant(pd.agent_count(), static_cast<Eigen::Index>(pd.edge_count()), Rational(0));
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    const Coalition q = pd.edge_info(id).movers;
    const Rational share = f[static_cast<Eigen::Index>(id)] / q.size();
    for (int i : q.agents()) c(i - 1, static_cast<Eigen::Index>(id)) = share;
  }
  return c;
}

Flow flow_sums(const RationalMatrix& coefficients) { return coefficients.colwise().sum().transpose(); }

Payoff marginalist_value(const ProductDigraph& pd, const Game& g, const RationalMatrix& coefficients) {
  validate_game(pd, g);
  if (coefficients.rows() != pd.agent_count() || static_cast<std::size_t>(coefficients.cols()) != pd.edge_count())
    throw Error(ErrorKind::DomainMismatch, "coefficient matrix must be agents x edges");
  for (Eigen::Index id = 0; id < coefficients.cols(); ++id)
    for (Eigen::Index r = 0; r < coefficients.rows(); ++r)
      if (coefficients(r, id) != 0 && !pd.edge_info(static_cast<std::size_t>(id)).movers.contains(static_cast<int>(r) + 1))
        throw Error(ErrorKind::DomainMismatch, "agent " + std::to_string(r + 1) + " has a coefficient on an edge it does not cross");
  return coefficients * edge_increments(pd.dag(), g);
}

Payoff flow_method_value(const ProductDigraph& pd, const Game& g, const Flow& f) {
  validate_game(pd, g);
  require_unitary(pd.dag(), f, "flow");
  Payoff pay = zeros<Rational>(pd.agent_count());
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    const Rational w = f[static_cast<Eigen::Index>(id)];
    if (w == 0) continue;
    const Edge& e = pd.dag().edge(id);
    const Rational diff = g[static_cast<Eigen::Index>(e.head)] - g[static_cast<Eigen::Index>(e.tail)];
    if (diff == 0) continue;
    const Coalition q = pd.edge_info(id).movers;
    const Rational share = w / q.size() * diff;
    for (int i : q.agents()) pay[i - 1] += share;
  }
  return pay;
}

ValueAudit audit_value(const ProductDigraph& pd, const ValueFunctional& value, const std::vector<Game>& sample) {
  ValueAudit report;
  const auto top = static_cast<Eigen::Index>(pd.vertex_count() - 1);
  std::vector<Payoff> pays;
  pays.reserve(sample.size());
  for (std::size_t k = 0; k < sample.size(); ++k) {
    const Game& g = sample[k];
    pays.push_back(value(g));
    const Payoff& pay = pays.back();
    if (pay.sum() != g[top]) {
      if (report.efficiency)
        report.witnesses.push_back("efficiency fails on sample game " + std::to_string(k) + ": payoffs sum to " +
                                   to_string(pay.sum()) + ", v(P) = " + to_string(g[top]));
      report.efficiency = false;
    }
    for (int i : null_agents(pd, g).agents()) {
      if (pay[i - 1] == 0) continue;
      if (report.null_agent)
        report.witnesses.push_back("null agent " + std::to_string(i) + " receives " + to_string(pay[i - 1]) +
                                   " in sample game " + std::to_string(k));
      report.null_agent = false;
    }
  }
  const Rational alphas[] = {Rational(-3, 2), Rational(2), Rational(1, 3)};
  for (std::size_t k = 0; k + 1 < sample.size(); ++k) {
    const Rational& alpha = alphas[k % 3];
    const Payoff combined = value(Game(alpha * sample[k] + sample[k + 1]));
    if (exactly_equal(combined, Payoff(alpha * pays[k] + pays[k + 1]))) continue;
    if (report.linearity)
      report.witnesses.push_back("linearity fails for games " + std::to_string(k) + ", " + std::to_string(k + 1) +
                                 " with alpha " + to_string(alpha));
    report.linearity = false;
  }
  return report;
}

Rational random_rational(std::mt19937_64& rng, int bound, int denom) {
  const int d = std::uniform_int_distribution<int>(1, denom)(rng);
  return Rational(std::uniform_int_distribution<int>(-bound * d, bound * d)(rng), d);
}

Game random_game(const ProductDigraph& pd, std::mt19937_64& rng) {
  Game g(static_cast<Eigen::Index>(pd.vertex_count()));
  g[0] = 0;
  for (Eigen::Index v = 1; v < g.size(); ++v) g[v] = random_rational(rng);
  return g;
}

std::vector<Game> audit_sample(const ProductDigraph& pd, std::mt19937_64& rng, std::size_t extra) {
  std::vector<Game> sample;
  for (std::size_t v = 1; v < pd.vertex_count(); ++v) sample.push_back(dirac_game(pd, v));
  for (std::size_t k = 0; k < extra; ++k) sample.push_back(random_game(pd, rng));
  return sample;
}

}  // namespace cfgflow
