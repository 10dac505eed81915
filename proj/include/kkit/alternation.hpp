#ifndef KKIT_ALTERNATION_HPP
#define KKIT_ALTERNATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kkit/budget.hpp"
#include "kkit/hypergraph.hpp"

namespace kkit {

// An element of (Z_p ∪ {0})^n. Entry 0 is the zero symbol, entry j in 1..p
// stands for ω^j; ω^p is the group identity.
class SignedVector {
 public:
  SignedVector() = default;
  // Throws std::invalid_argument when p < 2, n > 64 or an entry exceeds p.
  SignedVector(int p, std::vector<std::uint8_t> entries);

  static SignedVector zero(int p, int n) {
    return SignedVector(p, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
  }

  int order() const { return p_; }
  int size() const { return static_cast<int>(x_.size()); }
  std::span<const std::uint8_t> entries() const { return x_; }
  std::uint8_t operator[](std::size_t i) const { return x_[i]; }

  // X^ε as a mask over indices 1..n.
  VertexMask part(int eps) const;
  VertexMask support() const;
  bool is_zero() const { return support() == 0; }
  int first_nonzero() const;

  // ω^j · X: nonzero exponents shift by j modulo p, zeros stay.
  SignedVector multiplied(int j) const;

  bool operator==(const SignedVector&) const = default;

 private:
  int p_ = 2;
  std::vector<std::uint8_t> x_;
};

// Length of the longest alternating subsequence of the nonzero entries, which
// equals the number of maximal runs of equal values among them.
int alt(std::span<const std::uint8_t> entries);
inline int alt(const SignedVector& x) { return alt(x.entries()); }

// σ: positions 1..n -> vertices, a bijection onto V(H).
class VertexOrdering {
 public:
  VertexOrdering() = default;
  // Throws std::invalid_argument unless `map` is a permutation of 1..vertex_count.
  VertexOrdering(std::vector<int> map, int vertex_count);
  static VertexOrdering identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int position) const { return map_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> map() const { return map_; }
  // σ(S) for a set S of positions.
  VertexMask image(VertexMask positions) const;

  bool operator==(const VertexOrdering&) const = default;

 private:
  std::vector<int> map_;
};

struct AltWithOrderingResult {
  int value = 0;
  // Attains `value`; every σ(X^ε) is independent in H.
  SignedVector witness;
};

// max alt(X) over X whose classes σ(X^ε) contain no edge of H.
AltWithOrderingResult alt_with_ordering(const Hypergraph& h, int p, const VertexOrdering& sigma);

// True iff every σ(X^ε) is edge-free.
bool is_admissible(const Hypergraph& h, const VertexOrdering& sigma, const SignedVector& x);

struct AlternationOptions {
  // Exact search is refused above this many vertices.
  int max_vertices = 9;
  int threads = 1;
  Budget budget;
};

struct AlternationResult {
  int value = 0;
  // Lexicographically first ordering attaining `value` (among orderings that
  // list interchangeable vertices in increasing order).
  VertexOrdering ordering;
  SignedVector witness;
  std::uint64_t nodes = 0;
};

// alt_p(H) = min over σ of alt_p(H, σ). Vertex pairs whose transposition
// fixes E(H) are only tried in increasing order. Throws BudgetExceeded when n
// exceeds options.max_vertices or the budget runs out.
AlternationResult alternation_number(const Hypergraph& h, int p, const AlternationOptions& options = {});
// Single-threaded reference, kept for cross-checking the parallel search.
AlternationResult alternation_number_serial(const Hypergraph& h, int p, const AlternationOptions& options = {});

// Vertex classes whose members are pairwise interchangeable under a
// transposition that fixes the edge set.
std::vector<VertexMask> twin_classes(const Hypergraph& h);

}  // namespace kkit

#endif  // KKIT_ALTERNATION_HPP
