#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cfgflow {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed acyclic graph whose vertex numbering is a topological order:
/// every edge satisfies tail < head. Edges are kept sorted by (tail, head) and
/// their position is the edge id used by flows.
class Dag {
 public:
  Dag() = default;
  /// Throws InvalidArgument on out-of-range endpoints, tail >= head, or
  /// duplicate edges.
  Dag(std::size_t vertex_count, std::vector<Edge> edges, std::size_t source, std::size_t sink);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }
  /// Edge ids entering / leaving v.
  std::span<const std::size_t> in_edges(std::size_t v) const;
  std::span<const std::size_t> out_edges(std::size_t v) const;

  std::optional<std::size_t> find_edge(std::size_t tail, std::size_t head) const;

 private:
  std::size_t vertex_count_ = 0;
  std::size_t source_ = 0;
  std::size_t sink_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency.
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<std::size_t> out_ids_, in_ids_;
};

/// Weakly connected components (quasi-path connectivity) of the digraph
/// restricted to `vertices`. Edges with an endpoint outside `vertices` are
/// ignored. Components are listed in order of their smallest vertex, members
/// ascending.
std::vector<std::vector<std::size_t>> components(std::span<const std::size_t> vertices,
                                                 std::span<const Edge> edges);

}  // namespace cfgflow
