#pragma once

// Independent oracles and random generators shared by the test binaries.
// Oracles work on raw masks and explicit enumeration, never on the library's
// digraph algorithms.

#include "cfgflow/flow.hpp"
#include "cfgflow/game.hpp"
#include "cfgflow/instance.hpp"
#include "cfgflow/product.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using cfgflow::Coalition;
using cfgflow::Rational;
using cfgflow::RationalVector;
using Mask = std::uint64_t;

inline std::string data_path(const std::string& name) { return std::string(CFGFLOW_TEST_DATA) + "/" + name; }

// ---- fixtures ------------------------------------------------------------

inline cfgflow::SetSystem system_of(Coalition ground, std::initializer_list<Coalition> fam) {
  return cfgflow::validate_set_system(ground, std::vector<Coalition>(fam));
}

/// P₁ = {1,2,3}, F₁ = {∅,{1},{2,3},{1,2,3}}; P₂ = {3,4,5}, F₂ = {∅,{3,4},{3,4,5}}.
inline cfgflow::ProductDigraph worked_example() {
  using C = Coalition;
  return cfgflow::build_product(
      {system_of(C::of({1, 2, 3}), {C{}, C::of({1}), C::of({2, 3}), C::of({1, 2, 3})}),
       system_of(C::of({3, 4, 5}), {C{}, C::of({3, 4}), C::of({3, 4, 5})})},
      C::first(5));
}

/// P₁ = {1,2,3,4}, F₁ = {∅,{1,2},{2,3},{1,2,3,4}}; P₂ = {1,5}, F₂ = {∅,{1,5}}.
inline cfgflow::ProductDigraph star_mismatch() {
  using C = Coalition;
  return cfgflow::build_product(
      {system_of(C::of({1, 2, 3, 4}), {C{}, C::of({1, 2}), C::of({2, 3}), C::of({1, 2, 3, 4})}),
       system_of(C::of({1, 5}), {C{}, C::of({1, 5})})},
      C::first(5));
}

inline std::size_t vertex(const cfgflow::ProductDigraph& pd, std::initializer_list<Coalition> parts) {
  return *pd.vertex_of(cfgflow::Profile(parts));
}

inline std::size_t edge(const cfgflow::ProductDigraph& pd, std::initializer_list<Coalition> tail,
                        std::initializer_list<Coalition> head) {
  return *pd.dag().find_edge(vertex(pd, tail), vertex(pd, head));
}

/// Power-set blocks, agents numbered consecutively: sizes {2,1} gives {1,2},{3}.
inline cfgflow::ProductDigraph power_partition(const std::vector<int>& sizes) {
  std::vector<cfgflow::SetSystem> systems;
  int next = 1;
  for (int p : sizes) {
    Coalition g;
    for (int k = 0; k < p; ++k) g = g | Coalition::singleton(next++);
    systems.push_back(cfgflow::power_set_system(g));
  }
  return cfgflow::build_product(std::move(systems), Coalition::first(next - 1));
}

// ---- oracles ---------------------------------------------------------------

/// Covering pairs by definition: K ⊂ K' with no feasible set strictly between.
inline std::set<std::pair<Mask, Mask>> covering_pairs_oracle(const std::vector<Mask>& family) {
  std::set<std::pair<Mask, Mask>> out;
  for (Mask a : family)
    for (Mask b : family) {
      if (a == b || (a & ~b) != 0) continue;
      bool between = false;
      for (Mask c : family)
        if (c != a && c != b && (a & ~c) == 0 && (c & ~b) == 0) between = true;
      if (!between) out.insert({a, b});
    }
  return out;
}

/// All maximal chains from `bottom` to `top` of the covering relation.
inline std::vector<std::vector<Mask>> maximal_chains_oracle(const std::vector<Mask>& family, Mask bottom, Mask top) {
  const auto cover = covering_pairs_oracle(family);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> path{bottom};
  std::function<void()> walk = [&] {
    if (path.back() == top) {
      out.push_back(path);
      return;
    }
    for (const auto& [a, b] : cover)
      if (a == path.back()) {
        path.push_back(b);
        walk();
        path.pop_back();
      }
  };
  walk();
  return out;
}

/// Shapley value by averaging marginal contributions over all n! orders.
/// v is indexed by mask over agents 1..n.
inline RationalVector shapley_oracle(int n, const RationalVector& v) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  RationalVector pay = RationalVector::Constant(n, Rational(0));
  long count = 0;
  do {
    Mask s = 0;
    for (int i : order) {
      const Mask t = s | (Mask{1} << i);
      pay[i] += v[static_cast<Eigen::Index>(t)] - v[static_cast<Eigen::Index>(s)];
      s = t;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return pay / Rational(count);
}

/// Owen value for a partition: average over orders of the blocks combined
/// with orders inside every block.
inline RationalVector owen_oracle(int n, const RationalVector& v, const std::vector<Coalition>& blocks) {
  const std::size_t m = blocks.size();
  std::vector<std::vector<int>> members(m);
  for (std::size_t q = 0; q < m; ++q)
    for (int i = 1; i <= n; ++i)
      if (blocks[q].contains(i)) members[q].push_back(i - 1);
  RationalVector pay = RationalVector::Constant(n, Rational(0));
  long count = 0;
  std::vector<std::size_t> block_order(m);
  std::iota(block_order.begin(), block_order.end(), 0);
  std::function<void(std::size_t, std::vector<int>&)> inner = [&](std::size_t k, std::vector<int>& prefix) {
    if (k == m) {
      Mask s = 0;
      for (int i : prefix) {
        const Mask t = s | (Mask{1} << i);
        pay[i] += v[static_cast<Eigen::Index>(t)] - v[static_cast<Eigen::Index>(s)];
        s = t;
      }
      ++count;
      return;
    }
    std::vector<int> inside = members[block_order[k]];
    std::sort(inside.begin(), inside.end());
    do {
      const std::size_t mark = prefix.size();
      prefix.insert(prefix.end(), inside.begin(), inside.end());
      inner(k + 1, prefix);
      prefix.resize(mark);
    } while (std::next_permutation(inside.begin(), inside.end()));
  };
  do {
    std::vector<int> prefix;
    inner(0, prefix);
  } while (std::next_permutation(block_order.begin(), block_order.end()));
  return pay / Rational(count);
}

// ---- generators ------------------------------------------------------------

inline Rational rnd_rational(std::mt19937_64& rng, int bound = 5, int denom = 4) {
  return cfgflow::random_rational(rng, bound, denom);
}

/// Normal family over `ground`: ∅, ground and each other subset with
/// probability `p`.
inline std::vector<Coalition> random_family(std::mt19937_64& rng, Coalition ground, double p) {
  std::vector<Coalition> fam{Coalition{}, ground};
  std::bernoulli_distribution keep(p);
  const Mask g = ground.mask();
  for (Mask s = (g - 1) & g; s != 0; s = (s - 1) & g)
    if (keep(rng)) fam.push_back(Coalition(s));
  return fam;
}

struct InstanceShape {
  int max_n = 8;
  std::size_t max_m = 3;
  std::size_t max_vertices = 400;
  double density = 0.3;
  bool power_sets = false;
  bool partition = false;
};

/// Random instance whose blocks cover 1..n; rejection-sampled until the
/// product fits `max_vertices`.
inline cfgflow::ProductDigraph random_product(std::mt19937_64& rng, const InstanceShape& shape) {
  for (;;) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, shape.max_m)(rng);
    const int n = std::uniform_int_distribution<int>(static_cast<int>(m), shape.max_n)(rng);
    std::vector<Coalition> grounds(m);
    std::vector<int> agents(static_cast<std::size_t>(n));
    std::iota(agents.begin(), agents.end(), 1);
    std::shuffle(agents.begin(), agents.end(), rng);
    // Each agent lands in one block; overlapping instances add extra members.
    for (std::size_t k = 0; k < agents.size(); ++k) {
      const std::size_t q = k < m ? k : std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
      grounds[q] = grounds[q] | Coalition::singleton(agents[k]);
    }
    if (!shape.partition) {
      std::bernoulli_distribution extra(0.15);
      for (std::size_t q = 0; q < m; ++q)
        for (int i = 1; i <= n; ++i)
          if (extra(rng)) grounds[q] = grounds[q] | Coalition::singleton(i);
    }
    std::vector<cfgflow::SetSystem> systems;
    std::size_t count = 1;
    for (Coalition g : grounds) {
      if (shape.power_sets) {
        systems.push_back(cfgflow::power_set_system(g));
      } else {
        const auto fam = random_family(rng, g, shape.density);
        systems.push_back(cfgflow::validate_set_system(g, fam));
      }
      count *= systems.back().size();
    }
    if (count > shape.max_vertices) continue;
    return cfgflow::build_product(std::move(systems), Coalition::first(n));
  }
}

/// Random source-to-sink path (vertex ids) following out-edges uniformly.
inline std::vector<std::size_t> random_path(std::mt19937_64& rng, const cfgflow::Dag& d) {
  std::vector<std::size_t> edges;
  std::size_t v = d.source();
  while (v != d.sink()) {
    const auto out = d.out_edges(v);
    const std::size_t id = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    edges.push_back(id);
    v = d.edge(id).head;
  }
  return edges;
}

/// Sum of `paths` random path indicators with random (possibly negative)
/// weights, normalised to total value `value` (unitary by default).
inline RationalVector random_flow(std::mt19937_64& rng, const cfgflow::Dag& d, int paths = 4,
                                  const Rational& value = Rational(1), bool positive = false) {
  std::vector<Rational> w;
  Rational total = 0;
  while (total == 0) {
    w.clear();
    total = 0;
    for (int k = 0; k < paths; ++k) {
      Rational x = positive ? Rational(std::uniform_int_distribution<int>(1, 7)(rng)) : rnd_rational(rng);
      w.push_back(x);
      total += x;
    }
  }
  RationalVector f = cfgflow::zeros<Rational>(static_cast<Eigen::Index>(d.edge_count()));
  for (int k = 0; k < paths; ++k) {
    const Rational share = w[static_cast<std::size_t>(k)] / total * value;
    for (std::size_t id : random_path(rng, d)) f[static_cast<Eigen::Index>(id)] += share;
  }
  return f;
}

/// Random weakly connected DAG on n vertices with vertex order as topological
/// order: a random spanning tree plus extra forward edges.
inline cfgflow::Dag random_connected_dag(std::mt19937_64& rng, std::size_t n) {
  std::set<cfgflow::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    edges.insert({u, v});
  }
  std::bernoulli_distribution extra(0.2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (extra(rng)) edges.insert({a, b});
  return cfgflow::Dag(n, std::vector<cfgflow::Edge>(edges.begin(), edges.end()), 0, n - 1);
}

/// TU game over 2^n with v(∅) = 0.
inline RationalVector random_tu_game(std::mt19937_64& rng, int n) {
  RationalVector v(Eigen::Index{1} << n);
  v[0] = 0;
  for (Eigen::Index s = 1; s < v.size(); ++s) v[s] = rnd_rational(rng);
  return v;
}

}  // namespace testing
