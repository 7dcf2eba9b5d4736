#include "support.hpp"

#include "cfgflow/reduction.hpp"
#include "cfgflow/values.hpp"

#include <doctest.h>

#include <set>

using namespace cfgflow;
using testing::edge;
using testing::vertex;
using C = Coalition;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

C union_oracle(const ProductDigraph& pd, std::size_t v) {
  C out;
  for (std::size_t q = 0; q < pd.factor_count(); ++q) out = out | pd.part(v, q);
  return out;
}

// Brute-force condition: every edge keeps the union or adds exactly the movers.
std::optional<std::size_t> condition_oracle(const ProductDigraph& pd) {
  for (std::size_t id = 0; id < pd.edge_count(); ++id) {
    const Edge& e = pd.dag().edge(id);
    const C a = union_oracle(pd, e.tail), b = union_oracle(pd, e.head);
    C movers;
    for (std::size_t q = 0; q < pd.factor_count(); ++q) movers = movers | (pd.part(e.head, q) - pd.part(e.tail, q));
    if (a != b && b - a != movers) return id;
  }
  return std::nullopt;
}

std::set<std::pair<testing::Mask, testing::Mask>> star_pairs(const ReachableSystem& rs) {
  std::set<std::pair<testing::Mask, testing::Mask>> out;
  for (const Edge& e : rs.star.edges())
    out.emplace(rs.coalitions.member(e.tail).mask(), rs.coalitions.member(e.head).mask());
  return out;
}

std::vector<testing::Mask> masks(const SetSystem& s) {
  std::vector<testing::Mask> out;
  for (C c : s.members()) out.push_back(c.mask());
  return out;
}

CoalitionGame as_map(int n, const RationalVector& v) {
  CoalitionGame out;
  for (testing::Mask s = 1; s < (testing::Mask{1} << n); ++s) out.emplace(C(s), v[static_cast<Eigen::Index>(s)]);
  return out;
}

}  // namespace

TEST_CASE("union map on the worked example") {
  const ProductDigraph pd = testing::worked_example();
  CHECK(union_map(Profile{C::of({2, 3}), C::of({3, 4})}) == C::of({2, 3, 4}));
  CHECK(union_map(pd, 0).empty());
  CHECK(union_map(pd, pd.vertex_count() - 1) == C::first(5));
  for (std::size_t v = 0; v < pd.vertex_count(); ++v) CHECK(union_map(pd, v) == union_oracle(pd, v));

  const ReachableSystem rs = reachable_system(pd);
  const std::vector<C> want = {C{},
                               C::of({1}),
                               C::of({2, 3}),
                               C::of({3, 4}),
                               C::of({1, 2, 3}),
                               C::of({1, 3, 4}),
                               C::of({2, 3, 4}),
                               C::of({3, 4, 5}),
                               C::of({1, 2, 3, 4}),
                               C::of({1, 3, 4, 5}),
                               C::of({2, 3, 4, 5}),
                               C::first(5)};
  REQUIRE(rs.coalitions.size() == want.size());
  for (C c : want) CHECK(rs.coalitions.contains(c));
  for (std::size_t v = 0; v < pd.vertex_count(); ++v)
    CHECK(rs.coalitions.member(rs.vertex_image[v]) == union_oracle(pd, v));
}

TEST_CASE("reduction condition on the worked example") {
  const ProductDigraph pd = testing::worked_example();
  const ConditionCheck c = check_reduction_condition(pd);
  CHECK_FALSE(c.holds);
  REQUIRE(c.counterexample);
  CHECK(*c.counterexample == edge(pd, {C::of({2, 3}), C{}}, {C::of({2, 3}), C::of({3, 4})}));
  CHECK(c.counterexample == condition_oracle(pd));
  CHECK(kind_of([&] { induced_value(pd, shapley_two_step_flow(pd), CoalitionGame{}); }) ==
        ErrorKind::ConditionViolated);
}

TEST_CASE("reachable digraph can differ from the covering digraph") {
  const ProductDigraph pd = testing::star_mismatch();
  const ReachableSystem rs = reachable_system(pd);
  CHECK(rs.coalitions.size() == 8);
  const auto star = star_pairs(rs);
  const auto cover = testing::covering_pairs_oracle(masks(rs.coalitions));
  std::set<std::pair<testing::Mask, testing::Mask>> extra, missing;
  for (const auto& p : star)
    if (!cover.count(p)) extra.insert(p);
  for (const auto& p : cover)
    if (!star.count(p)) missing.insert(p);
  const std::set<std::pair<testing::Mask, testing::Mask>> want_extra = {
      {C::of({1, 5}).mask(), C::of({1, 2, 3, 5}).mask()},
      {C::of({1, 2, 5}).mask(), C::first(5).mask()}};
  const std::set<std::pair<testing::Mask, testing::Mask>> want_missing = {
      {C::of({1, 2, 5}).mask(), C::of({1, 2, 3, 5}).mask()}};
  CHECK(extra == want_extra);
  CHECK(missing == want_missing);

  for (std::size_t k = 0; k < rs.star.edge_count(); ++k) {
    const Edge& se = rs.star.edge(k);
    const Edge& pe = pd.dag().edge(rs.witness[k]);
    CHECK(rs.vertex_image[pe.tail] == se.tail);
    CHECK(rs.vertex_image[pe.head] == se.head);
  }

  const ConditionCheck c = check_reduction_condition(pd);
  CHECK_FALSE(c.holds);
  CHECK(c.counterexample == condition_oracle(pd));
  CHECK(*c.counterexample == edge(pd, {C::of({1, 2}), C{}}, {C::of({1, 2}), C::of({1, 5})}));
}

TEST_CASE("condition agrees with the brute-force check on random instances") {
  std::mt19937_64 rng(21);
  testing::InstanceShape shape;
  shape.max_vertices = 200;
  int holds = 0;
  for (int trial = 0; trial < 60; ++trial) {
    shape.partition = trial % 3 == 0;
    const ProductDigraph pd = testing::random_product(rng, shape);
    const ConditionCheck c = check_reduction_condition(pd);
    CHECK(c.counterexample == condition_oracle(pd));
    CHECK(c.holds == !c.counterexample.has_value());
    holds += c.holds;
    if (shape.partition) CHECK(c.holds);
  }
  CHECK(holds > 0);
}

TEST_CASE("lifted games") {
  const ProductDigraph pd = testing::worked_example();
  std::mt19937_64 rng(22);
  const RationalVector v = testing::random_tu_game(rng, 5);
  const Game lifted = lift_game(pd, as_map(5, v));
  for (std::size_t a = 0; a < pd.vertex_count(); ++a) {
    CHECK(lifted[static_cast<Eigen::Index>(a)] == v[static_cast<Eigen::Index>(union_oracle(pd, a).mask())]);
    for (std::size_t b = 0; b < pd.vertex_count(); ++b)
      if (union_oracle(pd, a) == union_oracle(pd, b)) CHECK(lifted[static_cast<Eigen::Index>(a)] == lifted[static_cast<Eigen::Index>(b)]);
  }

  CoalitionGame partial = as_map(5, v);
  partial.erase(C::of({3, 4}));
  CHECK(kind_of([&] { lift_game(pd, partial); }) == ErrorKind::MissingWorth);
  CoalitionGame bad = as_map(5, v);
  bad[C{}] = 1;
  CHECK(kind_of([&] { lift_game(pd, bad); }) == ErrorKind::InvalidArgument);

  // Only coalitions in F⁰ are needed.
  CoalitionGame small;
  const ReachableSystem rs = reachable_system(pd);
  for (C c : rs.coalitions.members())
    if (!c.empty()) small.emplace(c, v[static_cast<Eigen::Index>(c.mask())]);
  CHECK(exactly_equal(lift_game(pd, small), lifted));
}

TEST_CASE("induced value on partitions is the Owen value") {
  std::mt19937_64 rng(23);
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 2}, {1, 2}, {3, 1}, {2, 1, 2}, {1, 1, 1}, {3, 3}}) {
    const ProductDigraph pd = testing::power_partition(sizes);
    std::vector<C> blocks;
    for (std::size_t q = 0; q < pd.factor_count(); ++q) blocks.push_back(pd.factor(q).system().ground());
    const int n = static_cast<int>(pd.agent_count());
    const RationalVector v = testing::random_tu_game(rng, n);
    const CoalitionGame v0 = as_map(n, v);
    const Flow f = az_flow(pd);
    const InducedValue iv = induced_value(pd, f, v0);
    CHECK(exactly_equal(iv.pay, testing::owen_oracle(n, v, blocks)));
    CHECK(exactly_equal(iv.pay, flow_method_value(pd, lift_game(pd, v0), f)));

    // Here Γ* is the covering digraph of F⁰ = 2^N and carries a unitary flow.
    CHECK(iv.system.coalitions.size() == (std::size_t{1} << n));
    CHECK(star_pairs(iv.system) == testing::covering_pairs_oracle(masks(iv.system.coalitions)));
    CHECK(check_flow(iv.system.star, iv.star_flow).is_unitary);
  }
}

TEST_CASE("Partition data file with a non-AZ flow") {
  const ProductDigraph pd = testing::power_partition({2, 2});
  std::mt19937_64 rng(24);
  const Flow f = testing::random_flow(rng, pd.dag(), 5);
  const RationalVector v = testing::random_tu_game(rng, 4);
  const InducedValue iv = induced_value(pd, f, as_map(4, v));
  CHECK(iv.pay.sum() == v[15]);
  CHECK(check_flow(iv.system.star, iv.star_flow).is_unitary);
}

TEST_CASE("one factor: reduction is the identity") {
  const SetSystem f1 = testing::system_of(C::of({1, 2, 3}), {C{}, C::of({1}), C::of({2, 3}), C::of({1, 2, 3})});
  const ProductDigraph pd = factor_digraph(f1);
  CHECK(check_reduction_condition(pd).holds);
  const ReachableSystem rs = reachable_system(pd);
  CHECK(rs.coalitions.size() == f1.size());
  CHECK(star_pairs(rs) == testing::covering_pairs_oracle(masks(f1)));
  std::mt19937_64 rng(25);
  const RationalVector v = testing::random_tu_game(rng, 3);
  const Flow u = uniform_path_flow(pd.dag());
  const InducedValue iv = induced_value(pd, u, as_map(3, v));
  CHECK(exactly_equal(iv.pay, flow_method_value(pd, lift_game(pd, as_map(3, v)), u)));
  CHECK(exactly_equal(iv.star_flow, u));
}

TEST_CASE("overlapping power sets: condition holds and the induced AZ value is the configuration value") {
  std::mt19937_64 rng(26);
  const std::vector<std::vector<C>> configs = {{C::of({1, 2, 3}), C::of({3, 4, 5})},
                                               {C::of({1, 2}), C::of({2, 3}), C::of({3, 1})},
                                               {C::of({1, 2, 3, 4}), C::of({1, 5})}};
  for (const auto& blocks : configs) {
    std::vector<SetSystem> systems;
    C all;
    for (C b : blocks) {
      systems.push_back(power_set_system(b));
      all = all | b;
    }
    const ProductDigraph pd = build_product(systems, all);
    CHECK(check_reduction_condition(pd).holds);
    CHECK(condition_oracle(pd) == std::nullopt);
    const ReachableSystem rs = reachable_system(pd);
    CHECK(star_pairs(rs) == testing::covering_pairs_oracle(masks(rs.coalitions)));
    const int n = static_cast<int>(all.size());
    const RationalVector v = testing::random_tu_game(rng, n);
    const InducedValue iv = induced_value(pd, az_flow(pd), as_map(n, v));
    CHECK(exactly_equal(iv.pay, configuration_value(n, v, blocks)));
    CHECK(check_flow(iv.system.star, iv.star_flow).is_unitary);
  }
}
