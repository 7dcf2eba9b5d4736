#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cfgflow {

/// Agents are 1-based; the cap keeps power-set enumeration tractable.
inline constexpr int kMaxAgents = 20;

/// A set of agents stored as a bit mask, bit (i - 1) for agent i.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : bits_(mask) {}

  /// Throws UnknownAgent for indices outside 1..kMaxAgents.
  static Coalition of(std::initializer_list<int> agents);
  static Coalition of(std::span<const int> agents);
  /// {1, ..., n}
  static Coalition first(int n);
  static constexpr Coalition singleton(int agent) { return Coalition(std::uint64_t{1} << (agent - 1)); }

  constexpr std::uint64_t mask() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int agent) const noexcept {
    return agent >= 1 && agent <= 64 && ((bits_ >> (agent - 1)) & 1U) != 0;
  }
  constexpr bool subset_of(Coalition other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(Coalition other) const noexcept {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(Coalition other) const noexcept { return (bits_ & other.bits_) != 0; }
  /// Largest agent index present, 0 for the empty coalition.
  constexpr int max_agent() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  std::vector<int> agents() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) noexcept { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) noexcept { return Coalition(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) noexcept { return Coalition(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Coalition a, Coalition b) noexcept = default;

  /// Canonical order: (cardinality, mask) ascending.
  friend constexpr std::strong_ordering operator<=>(Coalition a, Coalition b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// "{1,2,3}", "{}" for the empty coalition.
std::string to_string(Coalition c);

/// All subsets of `ground`, in canonical order.
std::vector<Coalition> power_set(Coalition ground);

/// A set of component indices (0-based internally), used for supports and for
/// the vertices of the m-dimensional hypercube.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t mask) : bits_(mask) {}
  static constexpr IndexSet full(std::size_t m) { return IndexSet((std::uint32_t{1} << m) - 1); }
  static constexpr IndexSet singleton(std::size_t q) { return IndexSet(std::uint32_t{1} << q); }

  constexpr std::uint32_t mask() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(std::size_t q) const noexcept { return ((bits_ >> q) & 1U) != 0; }
  constexpr IndexSet with(std::size_t q) const noexcept { return IndexSet(bits_ | (std::uint32_t{1} << q)); }
  constexpr IndexSet without(std::size_t q) const noexcept { return IndexSet(bits_ & ~(std::uint32_t{1} << q)); }

  friend constexpr bool operator==(IndexSet a, IndexSet b) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// 1-based rendering, "{1,2}".
std::string to_string(IndexSet s);

}  // namespace cfgflow
