#pragma once

#include "cfgflow/dag.hpp"
#include "cfgflow/error.hpp"
#include "cfgflow/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cfgflow {

/// Edge-indexed weights on a Dag; a flow when conservation holds.
using Flow = RationalVector;

template <typename Scalar>
struct FlowCheck {
  bool is_flow = false;
  bool is_unitary = false;
  Scalar value{0};                   ///< V(Λ): total weight leaving the source
  std::vector<std::size_t> violations;  ///< interior vertices where conservation fails
};

namespace detail {

template <typename Scalar>
void require_edge_domain(const Dag& d, const Vector<Scalar>& f) {
  if (static_cast<std::size_t>(f.size()) != d.edge_count())
    throw Error(ErrorKind::DomainMismatch, "flow has " + std::to_string(f.size()) + " weights for " +
                                               std::to_string(d.edge_count()) + " edges");
}

}  // namespace detail

/// Inflow minus outflow at every vertex.
template <typename Scalar>
Vector<Scalar> net_inflow(const Dag& d, const Vector<Scalar>& f) {
  detail::require_edge_domain(d, f);
  Vector<Scalar> net = zeros<Scalar>(static_cast<Eigen::Index>(d.vertex_count()));
  for (std::size_t id = 0; id < d.edge_count(); ++id) {
    const Edge& e = d.edge(id);
    net[static_cast<Eigen::Index>(e.head)] += f[static_cast<Eigen::Index>(id)];
    net[static_cast<Eigen::Index>(e.tail)] -= f[static_cast<Eigen::Index>(id)];
  }
  return net;
}

template <typename Scalar>
Scalar flow_value(const Dag& d, const Vector<Scalar>& f) {
  detail::require_edge_domain(d, f);
  Scalar v(0);
  for (std::size_t id : d.out_edges(d.source())) v += f[static_cast<Eigen::Index>(id)];
  return v;
}

template <typename Scalar>
FlowCheck<Scalar> check_flow(const Dag& d, const Vector<Scalar>& f) {
  const Vector<Scalar> net = net_inflow(d, f);
  FlowCheck<Scalar> out;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (v == d.source() || v == d.sink()) continue;
    if (net[static_cast<Eigen::Index>(v)] != Scalar(0)) out.violations.push_back(v);
  }
  out.is_flow = out.violations.empty();
  out.value = flow_value(d, f);
  out.is_unitary = out.is_flow && out.value == Scalar(1);
  return out;
}

/// Throws NotUnitary unless f is a unitary flow on d.
template <typename Scalar>
void require_unitary(const Dag& d, const Vector<Scalar>& f, const std::string& what) {
  const auto check = check_flow(d, f);
  if (!check.is_unitary) {
    std::string why = check.is_flow ? "has value " + to_string(Rational(check.value))
                                    : "breaks conservation at " + std::to_string(check.violations.size()) + " vertices";
    throw Error(ErrorKind::NotUnitary, what + " is not a unitary flow: it " + why);
  }
}

/// A bipartition of the vertex set with the source on the bottom side and the
/// sink on the top side.
struct Cut {
  std::vector<bool> bottom;  ///< bottom[v] is true when v lies on the source side
};

/// Net weight crossing from the bottom side to the top side.
template <typename Scalar>
Scalar cut_value(const Dag& d, const Vector<Scalar>& f, const Cut& c) {
  detail::require_edge_domain(d, f);
  if (c.bottom.size() != d.vertex_count() || !c.bottom[d.source()] || c.bottom[d.sink()])
    throw Error(ErrorKind::NotAPartition, "cut must split the vertex set with the source below and the sink above");
  Scalar v(0);
  for (std::size_t id = 0; id < d.edge_count(); ++id) {
    const Edge& e = d.edge(id);
    if (c.bottom[e.tail] && !c.bottom[e.head]) v += f[static_cast<Eigen::Index>(id)];
    if (!c.bottom[e.tail] && c.bottom[e.head]) v -= f[static_cast<Eigen::Index>(id)];
  }
  return v;
}

/// Worth increment v(head) - v(tail) along every edge.
template <typename Scalar>
Vector<Scalar> edge_increments(const Dag& d, const Vector<Scalar>& worth) {
  if (static_cast<std::size_t>(worth.size()) != d.vertex_count())
    throw Error(ErrorKind::DomainMismatch, "vertex function has the wrong length");
  Vector<Scalar> inc(static_cast<Eigen::Index>(d.edge_count()));
  for (std::size_t id = 0; id < d.edge_count(); ++id) {
    const Edge& e = d.edge(id);
    inc[static_cast<Eigen::Index>(id)] =
        worth[static_cast<Eigen::Index>(e.head)] - worth[static_cast<Eigen::Index>(e.tail)];
  }
  return inc;
}

namespace detail {

// Connectivity of the alive vertices of d once `removed` is dropped.
inline bool connected_without(const Dag& d, const std::vector<bool>& alive, std::size_t removed) {
  std::vector<std::size_t> verts;
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    if (alive[v] && v != removed) verts.push_back(v);
  if (verts.size() <= 1) return true;
  std::vector<Edge> edges;
  for (const Edge& e : d.edges())
    if (alive[e.tail] && alive[e.head] && e.tail != removed && e.head != removed) edges.push_back(e);
  return components(verts, edges).size() == 1;
}

inline bool has_alive_out_edge(const Dag& d, const std::vector<bool>& alive, std::size_t v) {
  return std::any_of(d.out_edges(v).begin(), d.out_edges(v).end(),
                     [&](std::size_t id) { return alive[d.edge(id).head]; });
}

}  // namespace detail

/// Edge potential λ with x(j) = Σ_in λ - Σ_out λ at every vertex, for a weakly
/// connected DAG and charges summing to zero.
///
/// Vertices are peeled one at a time. The preferred vertex is the highest one
/// with no remaining out-edge whose removal keeps the rest connected; when
/// every such sink is a cut vertex, the highest non-cut vertex is used
/// instead. The peeled charge x₀ is spread equally over its d remaining
/// incident edges (+x₀/d on incoming, -x₀/d on outgoing), and each neighbour's
/// charge grows by x₀/d.
///
/// Throws NotConnected or NonZeroSum.
template <typename Scalar>
Vector<Scalar> edge_decomposition(const Dag& d, const Vector<Scalar>& charges) {
  const std::size_t n = d.vertex_count();
  if (static_cast<std::size_t>(charges.size()) != n)
    throw Error(ErrorKind::DomainMismatch, "charge vector has the wrong length");
  {
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    if (components(all, d.edges()).size() != 1)
      throw Error(ErrorKind::NotConnected, "edge decomposition needs a weakly connected digraph");
  }
  if (charges.sum() != Scalar(0)) throw Error(ErrorKind::NonZeroSum, "charges must sum to zero");

  Vector<Scalar> x = charges;
  Vector<Scalar> lambda = zeros<Scalar>(static_cast<Eigen::Index>(d.edge_count()));
  std::vector<bool> alive(n, true);
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    std::size_t pick = SIZE_MAX;
    for (std::size_t v = n; v-- > 0;) {
      if (alive[v] && !detail::has_alive_out_edge(d, alive, v) && detail::connected_without(d, alive, v)) {
        pick = v;
        break;
      }
    }
    if (pick == SIZE_MAX) {
      for (std::size_t v = n; v-- > 0;) {
        if (alive[v] && detail::connected_without(d, alive, v)) {
          pick = v;
          break;
        }
      }
    }
    std::vector<std::size_t> incident;
    for (std::size_t id : d.in_edges(pick))
      if (alive[d.edge(id).tail]) incident.push_back(id);
    for (std::size_t id : d.out_edges(pick))
      if (alive[d.edge(id).head]) incident.push_back(id);
    const Scalar share = x[static_cast<Eigen::Index>(pick)] / Scalar(static_cast<long>(incident.size()));
    for (std::size_t id : incident) {
      const Edge& e = d.edge(id);
      const bool incoming = e.head == pick;
      const std::size_t other = incoming ? e.tail : e.head;
      lambda[static_cast<Eigen::Index>(id)] = incoming ? share : Scalar(-share);
      x[static_cast<Eigen::Index>(other)] += share;
    }
    x[static_cast<Eigen::Index>(pick)] = Scalar(0);
    alive[pick] = false;
  }
  return lambda;
}

}  // namespace cfgflow
