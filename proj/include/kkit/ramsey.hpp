#ifndef KKIT_RAMSEY_HPP
#define KKIT_RAMSEY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kkit/coloring_search.hpp"
#include "kkit/matchcolor.hpp"

namespace kkit {

// Uniformity r and matching sizes s_1 <= ... <= s_t.
class RamseyInstance {
 public:
  RamseyInstance() = default;
  // Sorts s. Throws std::invalid_argument if r < 1, s is empty or some s_i < 1.
  RamseyInstance(int r, std::vector<int> s);

  int uniformity() const { return r_; }
  int color_count() const { return static_cast<int>(s_.size()); }
  std::span<const int> sizes() const { return s_; }
  int largest() const { return s_.back(); }

  // τ(j) = s_j - 1 for j in [t], 0 elsewhere.
  ColorFrequencyMap frequency_map() const;

  bool operator==(const RamseyInstance&) const = default;

 private:
  int r_ = 1;
  std::vector<int> s_{1};
};

// 1 + Σ s_i + s_t(r-1) - t.
std::uint64_t formula_value(const RamseyInstance& instance);

struct BadColoring {
  int lambda = 0;
  Partition partition;
  EdgeColoring coloring;  // colors 1..t on K_Λ^r
};

// Colors e ∈ E(K_Λ^r) by min{i : e ∩ S_i ≠ ∅} with |S_i| = s_i - 1 (i < t) and
// |S_t| = s_t r - 1. Verified before return. Throws std::invalid_argument when
// Λ < r ("no edges to color").
BadColoring bad_coloring(const RamseyInstance& instance);

enum class Verdict { Arrows, DoesNotArrow, Unknown };
const char* to_string(Verdict v);

struct ArrowsResult {
  Verdict verdict = Verdict::Unknown;
  // A coloring of K_n^r with no color-j s_j-matching, when one exists.
  std::optional<EdgeColoring> counterexample;
  std::uint64_t nodes = 0;
};

// n -> (s_1, ..., s_t)^r, decided as infeasibility of a matching coloring
// with caps s_j - 1. A spent budget yields Verdict::Unknown.
ArrowsResult arrows(int n, const RamseyInstance& instance, const SearchOptions& options = {});

// Same question by plain enumeration of all t^|E| colorings; small n only.
ArrowsResult arrows_by_enumeration(int n, const RamseyInstance& instance);

struct RamseySearchReport {
  RamseyInstance instance;
  std::uint64_t formula = 0;
  std::optional<std::uint64_t> verified_false_at;
  std::optional<std::uint64_t> verified_true_at;
  std::optional<std::uint64_t> exact;
  // "confirmed", "mismatch" or "unknown".
  std::string status;
  // Non-arrowing coloring at verified_false_at.
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
};

// Least n with n -> (s)^r: refutes Λ with the block coloring, then proves
// Λ+1. Keeps going upward (a few steps) only if Λ+1 fails to arrow.
RamseySearchReport ramsey_number_exact(const RamseyInstance& instance, const SearchOptions& options = {});

bool is_prime(int p);

// (1 + Σ s_i + s_t(r-1) - t, 1 + Σ s_i + p(r-1) - t). Requires p prime, s_t <= p.
std::pair<std::uint64_t, std::uint64_t> proposition8_bounds(const RamseyInstance& instance, int p);

}  // namespace kkit

#endif  // KKIT_RAMSEY_HPP
