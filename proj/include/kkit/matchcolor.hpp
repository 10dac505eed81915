#ifndef KKIT_MATCHCOLOR_HPP
#define KKIT_MATCHCOLOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kkit/budget.hpp"
#include "kkit/coloring_search.hpp"
#include "kkit/hypergraph.hpp"

namespace kkit {

using ColorId = std::uint32_t;

// τ: ℕ -> {0, ..., r-1}, stored as a finite table plus a default for every
// other color id. Color ids start at 1.
class ColorFrequencyMap {
 public:
  ColorFrequencyMap() = default;
  // Throws std::invalid_argument if r < 1, a value leaves [0, r-1] or a key is 0.
  ColorFrequencyMap(int r, int default_value, std::map<ColorId, int> table = {});
  static ColorFrequencyMap constant(int r, int value) { return ColorFrequencyMap(r, value); }

  int bound() const { return r_; }
  int default_value() const { return default_; }
  const std::map<ColorId, int>& table() const { return table_; }
  int operator()(ColorId color) const;
  int max_value() const;

  bool attains(int value) const;
  // Smallest id not in `exclude` whose value is `value`.
  std::optional<ColorId> color_with_value(int value, const std::set<ColorId>& exclude = {}) const;
  // The s ids with the largest values; ties go to the smaller id.
  std::vector<ColorId> top_colors(std::size_t s) const;

  bool operator==(const ColorFrequencyMap&) const = default;

 private:
  int r_ = 1;
  int default_ = 0;
  std::map<ColorId, int> table_;
};

// c: E(H) -> ℕ, aligned with the canonical edge order of the target.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  // Throws std::invalid_argument when sizes differ or a color is 0.
  EdgeColoring(Hypergraph target, std::vector<ColorId> colors);

  const Hypergraph& target() const { return target_; }
  std::span<const ColorId> colors() const { return colors_; }
  ColorId color(std::size_t edge_index) const { return colors_[edge_index]; }
  std::set<ColorId> palette() const;
  std::vector<VertexMask> class_edges(ColorId color) const;

 private:
  Hypergraph target_;
  std::vector<ColorId> colors_;
};

// Ordered blocks S_1..S_t partitioning [ground]; blocks may be empty.
struct Partition {
  int ground = 0;
  std::vector<VertexMask> blocks;

  bool is_valid() const;
  // 1-based index of the first block meeting `e`, or 0.
  std::size_t first_block_meeting(VertexMask e) const;
};

// True iff no color a has an (τ(a)+1)-matching among its edges.
bool is_matching_coloring(const EdgeColoring& c, const ColorFrequencyMap& tau);
// The first offending color, if any.
std::optional<ColorId> matching_coloring_violation(const EdgeColoring& c, const ColorFrequencyMap& tau);

struct MatchingChromaticResult {
  ExtendedNat value;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
};

class MatchingChromaticBudgetExceeded : public BudgetExceeded {
 public:
  MatchingChromaticBudgetExceeded(std::uint64_t lower, ExtendedNat upper);
  // Every palette smaller than `lower` was refuted.
  std::uint64_t lower;
  ExtendedNat upper;
};

// χ_M(τ, H). Feasibility is monotone in the τ-values, so for each palette
// size only the s largest values need to be tried. Throws
// MatchingChromaticBudgetExceeded.
MatchingChromaticResult matching_chromatic_number(const Hypergraph& h, const ColorFrequencyMap& tau,
                                                  const SearchOptions& options = {});

// min |A| with Σ_{a∈A} τ(a) >= n - alt (A nonempty if require_nonempty),
// infinity when no finite A reaches it.
ExtendedNat theorem3_lower_bound(int vertex_count, int alternation, const ColorFrequencyMap& tau,
                                 bool require_nonempty);

struct Proposition5Coloring {
  // B, sorted by τ-value with τ(b_t) = r-1 last.
  std::vector<ColorId> palette;
  Partition partition;
  EdgeColoring coloring;
};

// The block coloring c(e) = b_{min{i : e ∩ S_i ≠ ∅}} of K_n^k. Throws
// std::invalid_argument naming the failed precondition.
Proposition5Coloring proposition5_coloring(int n, int k, int r, const ColorFrequencyMap& tau,
                                           std::vector<ColorId> palette);

enum class CorollaryMode {
  Unrestricted,  // n >= rk, A may be empty
  Nonempty,      // n >= k and n >= r(k-1), A nonempty
};

// Closed-form χ_M(τ, K_n^k) using alt_r(K_n^k) = r(k-1).
ExtendedNat corollary5_value(int n, int k, int r, const ColorFrequencyMap& tau,
                             CorollaryMode mode = CorollaryMode::Unrestricted);

}  // namespace kkit

#endif  // KKIT_MATCHCOLOR_HPP
