#ifndef KKIT_TUCKER_HPP
#define KKIT_TUCKER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kkit/alternation.hpp"
#include "kkit/coloring_search.hpp"
#include "kkit/matchcolor.hpp"

namespace kkit {

// Enumerates (Z_p ∪ {0})^n. Entry i has weight (p+1)^(i-1) in the code, so
// clearing an entry always lowers the code and code 0 is the zero vector.
class SignedSpace {
 public:
  SignedSpace() = default;
  // Throws std::invalid_argument if p < 2, n < 1 or the space exceeds 2^22 vectors.
  SignedSpace(int n, int p);

  int dimension() const { return n_; }
  int order() const { return p_; }
  std::size_t size() const { return size_; }

  std::size_t encode(const SignedVector& x) const;
  SignedVector decode(std::size_t code) const;
  std::uint8_t entry(std::size_t code, int i) const {
    return digits_[code * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i)];
  }
  std::size_t weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  // Code of ω^j X.
  std::size_t rotate(std::size_t code, int j) const;
  int first_nonzero(std::size_t code) const;
  int support_size(std::size_t code) const;
  // X^ε as a mask over indices 1..n.
  VertexMask part(std::size_t code, int eps) const;

 private:
  int n_ = 0;
  int p_ = 2;
  std::size_t size_ = 0;
  std::vector<std::size_t> weights_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::size_t> rotate_once_;
};

// ω^j · X for 1 <= j <= p.
SignedVector multiply(const SignedVector& x, int j);

// X1 ⊂ X2: every nonzero entry of X1 agrees with X2. Reflexive.
bool subset_relation(const SignedVector& x1, const SignedVector& x2);

struct LambdaValue {
  int sign = 0;   // λ1 as an exponent in 1..p; 0 while unset
  int level = 0;  // λ2 in 1..m; 0 while unset

  bool operator==(const LambdaValue&) const = default;
};

// λ: (Z_p ∪ {0})^n \ {0} -> Z_p × [m] with its γ vector.
class LambdaMap {
 public:
  LambdaMap() = default;
  // Throws std::invalid_argument unless p is a prime <= 5, gamma has m >= 1
  // entries and each γ_i lies in [1, p-1].
  LambdaMap(int n, int p, std::vector<int> gamma);

  int dimension() const { return space_.dimension(); }
  int order() const { return space_.order(); }
  int levels() const { return static_cast<int>(gamma_.size()); }
  std::span<const int> gamma() const { return gamma_; }
  const SignedSpace& space() const { return space_; }

  LambdaValue at(std::size_t code) const { return table_[code]; }
  LambdaValue at(const SignedVector& x) const { return table_[space_.encode(x)]; }
  // Throws std::invalid_argument for the zero vector or out-of-range values.
  void set(std::size_t code, LambdaValue value);
  void set(const SignedVector& x, LambdaValue value) { set(space_.encode(x), value); }
  void clear(std::size_t code) { table_[code] = {}; }
  bool is_total() const;

 private:
  SignedSpace space_;
  std::vector<int> gamma_;
  std::vector<LambdaValue> table_;
};

struct EquivarianceViolation {
  SignedVector x;
  int j = 0;
};

// First (X, j) in code order with λ(ω^j X) != (ω^j λ1(X), λ2(X)).
std::optional<EquivarianceViolation> equivariance_violation(const LambdaMap& lambda);
inline bool check_equivariance(const LambdaMap& lambda) { return !equivariance_violation(lambda).has_value(); }

// Largest number of distinct λ1 values along a chain X_1 ⊂ ... ⊂ X_l of
// distinct vectors that all sit on level i. Unset entries are skipped.
int max_distinct_lambda1_on_chains(const LambdaMap& lambda, int level);

struct LevelReport {
  int level = 0;
  int gamma = 0;
  int max_distinct = 0;
  bool ok = true;
};

struct HypothesisReport {
  bool total = true;
  bool equivariant = true;
  std::optional<EquivarianceViolation> equivariance_witness;
  std::vector<LevelReport> levels;
  int sum_gamma = 0;
  int n = 0;
  // Σγ_i >= n.
  bool conclusion_holds = true;
  bool hypotheses_hold = true;
};

HypothesisReport check_hypotheses(const LambdaMap& lambda);

// (1, ..., 1, p-1, ..., p-1) with α ones. Throws if α > m.
std::vector<int> classical_gamma(int alpha, int m, int p);

// Total order used to pick λ1 among competing X^ε in the second case.
enum class SubsetOrder { Colex, Lex };

struct LambdaConstruction {
  LambdaMap lambda;
  int alt_sigma = 0;
  // A = {a_1 < ... < a_t}, the colors the coloring uses.
  std::vector<ColorId> palette;
};

// λ from a matching coloring: on vectors with alt(X) <= alt_p(H, σ), λ1 is the
// first nonzero entry and λ2 = alt(X); otherwise λ2 = alt_p(H, σ) + ζ(X), where
// a_ζ is the largest color of an edge inside some σ(X^ε), and λ1 is the ε
// whose X^ε is largest under `order` among those holding an a_ζ edge.
// γ = (1, ..., 1, τ(a_1), ..., τ(a_t)). Throws std::invalid_argument if c is
// not an (A, τ)-matching coloring of H or some τ(a_j) exceeds p-1.
LambdaConstruction build_lambda_from_coloring(const Hypergraph& h, const VertexOrdering& sigma,
                                              const EdgeColoring& c, const ColorFrequencyMap& tau, int p,
                                              SubsetOrder order = SubsetOrder::Colex);

enum class HuntStatus { Found, None, Unknown };
const char* to_string(HuntStatus s);

struct HuntResult {
  HuntStatus status = HuntStatus::Unknown;
  // A map satisfying every hypothesis although Σγ < n.
  std::optional<LambdaMap> counterexample;
  std::uint64_t nodes = 0;
};

// Exhausts equivariant maps (free values on the lexicographically least
// vector of each ω-orbit) and prunes as soon as a level's chain bound breaks.
// Requires Σγ < n.
HuntResult search_counterexample(int n, int p, std::span<const int> gamma, const SearchOptions& options = {});
HuntResult search_counterexample_serial(int n, int p, std::span<const int> gamma, const Budget& budget = {});

// Lexicographically least member of every ω-orbit of nonzero vectors.
std::vector<std::size_t> orbit_representatives(const SignedSpace& space);

}  // namespace kkit

#endif  // KKIT_TUCKER_HPP
