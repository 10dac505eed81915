#ifndef KKIT_HYPERGRAPH_HPP
#define KKIT_HYPERGRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kkit/budget.hpp"

namespace kkit {

// Vertex i (1-based) is bit i-1.
using VertexMask = std::uint64_t;
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }
inline constexpr VertexMask full_mask(int n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest_vertex(VertexMask m) { return std::countr_zero(m) + 1; }
inline int highest_vertex(VertexMask m) { return kMaxVertices - std::countl_zero(m); }

VertexMask mask_of(std::initializer_list<int> vertices);
VertexMask mask_of(std::span<const int> vertices);
std::vector<int> vertices_of(VertexMask m);

// A nonnegative count or +infinity. Infinity absorbs addition.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT(implicit)

  static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Precondition: is_finite().
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr ExtendedNat operator+(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedNat(a.value_ + b.value_);
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

// Hypergraph on vertices 1..n. Edges are nonempty, deduplicated and kept
// sorted by mask value, so equal hypergraphs compare equal.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws std::invalid_argument on an empty edge, an out-of-range vertex or
  // n outside [0, 64]. Duplicate edges are dropped.
  Hypergraph(int n, std::vector<VertexMask> edges);

  static Hypergraph from_lists(int n, const std::vector<std::vector<int>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const VertexMask> edges() const { return edges_; }
  VertexMask edge(std::size_t i) const { return edges_[i]; }
  VertexMask vertex_set() const { return full_mask(n_); }
  bool has_singleton_edge() const;
  // Index of `e` in canonical order, or nullopt.
  std::optional<std::size_t> index_of(VertexMask e) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> edges_;
};

// K_n^k: all k-subsets of [n]. Requires 1 <= k <= n.
Hypergraph complete_uniform(int n, int k);

// Edges contained in `subset`; the vertex count is kept (mask restriction).
Hypergraph induced(const Hypergraph& h, VertexMask subset);

// Size of a maximum set of pairwise disjoint edges.
int matching_number(const Hypergraph& h);
int matching_number(std::span<const VertexMask> edges);

// True iff the edges that avoid `blocked` contain m pairwise disjoint edges.
// Stops at the first witness.
bool has_matching_of_size(std::span<const VertexMask> edges, int m, VertexMask blocked = 0);
inline bool has_matching_of_size(const Hypergraph& h, int m) {
  return has_matching_of_size(h.edges(), m);
}

// A maximum matching (edge masks), for reports.
std::vector<VertexMask> maximum_matching(std::span<const VertexMask> edges);

struct VertexColoringResult {
  ExtendedNat chromatic;
  // colors[v-1] in 1..chromatic; empty when chromatic is infinite.
  std::vector<int> colors;
  // Proof that chromatic-1 colors do not suffice was completed.
  bool optimality_certified = false;
  std::uint64_t nodes = 0;
};

// Weak coloring: no edge of size >= 2 is monochromatic. Singleton edges make
// the chromatic number infinite. Throws BudgetExceeded.
VertexColoringResult chromatic_number(const Hypergraph& h, const Budget& budget = {});

// A k-coloring if one exists; nullopt when none does. Throws BudgetExceeded.
std::optional<std::vector<int>> find_coloring(const Hypergraph& h, int k,
                                              const Budget& budget = {},
                                              std::uint64_t* nodes = nullptr);

bool is_proper_coloring(const Hypergraph& h, std::span<const int> colors);

}  // namespace kkit

#endif  // KKIT_HYPERGRAPH_HPP
