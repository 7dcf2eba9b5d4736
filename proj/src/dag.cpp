#include "cfgflow/dag.hpp"

#include "cfgflow/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace cfgflow {

Dag::Dag(std::size_t vertex_count, std::vector<Edge> edges, std::size_t source, std::size_t sink)
    : vertex_count_(vertex_count), source_(source), sink_(sink), edges_(std::move(edges)) {
  if (vertex_count_ == 0 || source_ >= vertex_count_ || sink_ >= vertex_count_)
    throw Error(ErrorKind::InvalidArgument, "dag source/sink outside vertex range");
  for (const Edge& e : edges_) {
    if (e.head >= vertex_count_ || e.tail >= e.head)
      throw Error(ErrorKind::InvalidArgument, "dag edges must satisfy tail < head < vertex_count");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate dag edge");

  out_offsets_.assign(vertex_count_ + 1, 0);
  in_offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.tail + 1];
    ++in_offsets_[e.head + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());
  out_ids_.resize(edges_.size());
  in_ids_.resize(edges_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    out_ids_[out_fill[edges_[id].tail]++] = id;
    in_ids_[in_fill[edges_[id].head]++] = id;
  }
}

std::span<const std::size_t> Dag::in_edges(std::size_t v) const {
  return std::span<const std::size_t>(in_ids_).subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

std::span<const std::size_t> Dag::out_edges(std::size_t v) const {
  return std::span<const std::size_t>(out_ids_).subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::optional<std::size_t> Dag::find_edge(std::size_t tail, std::size_t head) const {
  const Edge key{tail, head};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> components(std::span<const std::size_t> vertices,
                                                 std::span<const Edge> edges) {
  std::vector<std::size_t> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_map<std::size_t, std::size_t> local;
  local.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) local.emplace(sorted[i], i);

  DisjointSets sets(sorted.size());
  for (const Edge& e : edges) {
    auto a = local.find(e.tail);
    auto b = local.find(e.head);
    if (a != local.end() && b != local.end()) sets.unite(a->second, b->second);
  }
  // Roots are the smallest local index of their set, so grouping in index
  // order lists components by their smallest vertex.
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(sorted.size(), SIZE_MAX);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(sorted[i]);
  }
  return out;
}

}  // namespace cfgflow
