#include "kkit/tucker.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "kkit/ramsey.hpp"

namespace kkit {

SignedSpace::SignedSpace(int n, int p) : n_(n), p_(p) {
  if (p < 2) throw std::invalid_argument("signed space: p must be at least 2");
  if (n < 1) throw std::invalid_argument("signed space: n must be at least 1");
  std::size_t size = 1;
  weights_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    weights_[static_cast<std::size_t>(i)] = size;
    size *= static_cast<std::size_t>(p + 1);
    if (size > (std::size_t{1} << 22))
      throw std::invalid_argument("signed space (p+1)^n exceeds 2^22 vectors");
  }
  size_ = size;
  digits_.resize(size_ * static_cast<std::size_t>(n));
  rotate_once_.resize(size_);
  for (std::size_t code = 0; code < size_; ++code) {
    std::size_t rest = code;
    std::size_t rotated = 0;
    for (int i = 0; i < n; ++i) {
      const auto d = static_cast<std::uint8_t>(rest % static_cast<std::size_t>(p + 1));
      rest /= static_cast<std::size_t>(p + 1);
      digits_[code * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = d;
      const std::size_t rd = d == 0 ? 0 : static_cast<std::size_t>(d % p + 1);
      rotated += rd * weights_[static_cast<std::size_t>(i)];
    }
    rotate_once_[code] = rotated;
  }
}

std::size_t SignedSpace::encode(const SignedVector& x) const {
  if (x.size() != n_ || x.order() != p_)
    throw std::invalid_argument("signed vector does not belong to this space");
  std::size_t code = 0;
  for (int i = 0; i < n_; ++i) code += x[static_cast<std::size_t>(i)] * weights_[static_cast<std::size_t>(i)];
  return code;
}

SignedVector SignedSpace::decode(std::size_t code) const {
  std::vector<std::uint8_t> x(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) x[static_cast<std::size_t>(i)] = entry(code, i);
  return SignedVector(p_, std::move(x));
}

std::size_t SignedSpace::rotate(std::size_t code, int j) const {
  j = ((j % p_) + p_) % p_;
  for (int k = 0; k < j; ++k) code = rotate_once_[code];
  return code;
}

int SignedSpace::first_nonzero(std::size_t code) const {
  for (int i = 0; i < n_; ++i)
    if (const int d = entry(code, i); d != 0) return d;
  return 0;
}

int SignedSpace::support_size(std::size_t code) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += entry(code, i) != 0 ? 1 : 0;
  return s;
}

VertexMask SignedSpace::part(std::size_t code, int eps) const {
  VertexMask m = 0;
  for (int i = 0; i < n_; ++i)
    if (entry(code, i) == eps) m |= VertexMask{1} << i;
  return m;
}

SignedVector multiply(const SignedVector& x, int j) {
  if (j < 1 || j > x.order())
    throw std::invalid_argument("multiply: exponent must lie in [1, p], got " + std::to_string(j));
  return x.multiplied(j);
}

bool subset_relation(const SignedVector& x1, const SignedVector& x2) {
  if (x1.size() != x2.size()) throw std::invalid_argument("subset_relation: dimension mismatch");
  if (x1.order() != x2.order()) throw std::invalid_argument("subset_relation: group order mismatch");
  for (std::size_t i = 0; i < static_cast<std::size_t>(x1.size()); ++i)
    if (x1[i] != 0 && x1[i] != x2[i]) return false;
  return true;
}

LambdaMap::LambdaMap(int n, int p, std::vector<int> gamma) : gamma_(std::move(gamma)) {
  if (!is_prime(p) || p > 5) throw std::invalid_argument("lambda map: p must be a prime <= 5, got " + std::to_string(p));
  if (gamma_.empty()) throw std::invalid_argument("lambda map: m must be at least 1");
  for (std::size_t i = 0; i < gamma_.size(); ++i)
    if (gamma_[i] < 1 || gamma_[i] > p - 1)
      throw std::invalid_argument("lambda map: gamma_" + std::to_string(i + 1) + " = " + std::to_string(gamma_[i]) +
                                  " outside [1, " + std::to_string(p - 1) + "]");
  space_ = SignedSpace(n, p);
  table_.assign(space_.size(), LambdaValue{});
}

void LambdaMap::set(std::size_t code, LambdaValue value) {
  if (code == 0 || code >= table_.size()) throw std::invalid_argument("lambda map: no entry for the zero vector");
  if (value.sign < 1 || value.sign > order())
    throw std::invalid_argument("lambda map: l1 = " + std::to_string(value.sign) + " outside [1, p]");
  if (value.level < 1 || value.level > levels())
    throw std::invalid_argument("lambda map: l2 = " + std::to_string(value.level) + " outside [1, m]");
  table_[code] = value;
}

bool LambdaMap::is_total() const {
  for (std::size_t code = 1; code < table_.size(); ++code)
    if (table_[code].level == 0) return false;
  return true;
}

namespace {

int rotate_sign(int sign, int j, int p) { return (sign + j - 1) % p + 1; }

// Reachable λ1-sets of level chains, one bitset over 2^p masks per vector.
// Predecessors of a vector (one entry cleared) have smaller codes, so a
// single pass in code order sees every strictly smaller vector's chains.
int level_chain_max(const LambdaMap& lambda, int level, std::vector<std::uint32_t>& reach) {
  const SignedSpace& space = lambda.space();
  const int n = space.dimension();
  reach.assign(space.size(), 0);
  reach[0] = 1;  // the empty chain
  int best = 0;
  for (std::size_t code = 1; code < space.size(); ++code) {
    std::uint32_t below = 0;
    for (int i = 0; i < n; ++i)
      if (const int d = space.entry(code, i); d != 0) below |= reach[code - static_cast<std::size_t>(d) * space.weight(i)];
    std::uint32_t here = below;
    const LambdaValue v = lambda.at(code);
    if (v.level == level) {
      const std::uint32_t sign_bit = std::uint32_t{1} << (v.sign - 1);
      for (std::uint32_t sets = below; sets != 0; sets &= sets - 1) {
        const std::uint32_t mask = static_cast<std::uint32_t>(std::countr_zero(sets)) | sign_bit;
        here |= std::uint32_t{1} << mask;
        best = std::max(best, std::popcount(mask));
      }
    }
    reach[code] = here;
  }
  return best;
}

}  // namespace

std::optional<EquivarianceViolation> equivariance_violation(const LambdaMap& lambda) {
  const SignedSpace& space = lambda.space();
  const int p = space.order();
  for (std::size_t code = 1; code < space.size(); ++code) {
    const LambdaValue v = lambda.at(code);
    for (int j = 1; j < p; ++j) {
      const LambdaValue w = lambda.at(space.rotate(code, j));
      if (w.level != v.level || w.sign != rotate_sign(v.sign, j, p))
        return EquivarianceViolation{space.decode(code), j};
    }
  }
  return std::nullopt;
}

int max_distinct_lambda1_on_chains(const LambdaMap& lambda, int level) {
  if (level < 1 || level > lambda.levels())
    throw std::invalid_argument("level must lie in [1, m], got " + std::to_string(level));
  std::vector<std::uint32_t> reach;
  return level_chain_max(lambda, level, reach);
}

HypothesisReport check_hypotheses(const LambdaMap& lambda) {
  HypothesisReport report;
  report.n = lambda.dimension();
  report.total = lambda.is_total();
  report.equivariance_witness = equivariance_violation(lambda);
  report.equivariant = !report.equivariance_witness.has_value();
  std::vector<std::uint32_t> reach;
  bool chains_ok = true;
  for (int i = 1; i <= lambda.levels(); ++i) {
    LevelReport lr;
    lr.level = i;
    lr.gamma = lambda.gamma()[static_cast<std::size_t>(i - 1)];
    lr.max_distinct = level_chain_max(lambda, i, reach);
    lr.ok = lr.max_distinct <= lr.gamma;
    chains_ok = chains_ok && lr.ok;
    report.levels.push_back(lr);
  }
  report.sum_gamma = std::accumulate(lambda.gamma().begin(), lambda.gamma().end(), 0);
  report.conclusion_holds = report.sum_gamma >= report.n;
  report.hypotheses_hold = report.total && report.equivariant && chains_ok;
  return report;
}

std::vector<int> classical_gamma(int alpha, int m, int p) {
  if (m < 1) throw std::invalid_argument("classical_gamma: m must be at least 1");
  if (alpha < 0 || alpha > m)
    throw std::invalid_argument("classical_gamma: alpha = " + std::to_string(alpha) + " outside [0, m]");
  if (p < 2) throw std::invalid_argument("classical_gamma: p must be at least 2");
  std::vector<int> g(static_cast<std::size_t>(m), p - 1);
  std::fill(g.begin(), g.begin() + alpha, 1);
  return g;
}

LambdaConstruction build_lambda_from_coloring(const Hypergraph& h, const VertexOrdering& sigma,
                                              const EdgeColoring& c, const ColorFrequencyMap& tau, int p,
                                              SubsetOrder order) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("build_lambda: " + what); };
  if (!(c.target() == h)) fail("coloring does not belong to the hypergraph");
  if (sigma.size() != h.vertex_count()) fail("ordering size differs from the vertex count");
  if (auto bad = matching_coloring_violation(c, tau))
    fail("not a matching coloring: color " + std::to_string(*bad) + " has a (tau+1)-matching");

  const std::set<ColorId> used = c.palette();
  const std::vector<ColorId> palette(used.begin(), used.end());
  for (ColorId a : palette)
    if (tau(a) > p - 1) fail("tau(" + std::to_string(a) + ") exceeds p-1");

  const int n = h.vertex_count();
  const int alt_sigma = alt_with_ordering(h, p, sigma).value;
  std::vector<int> gamma(static_cast<std::size_t>(alt_sigma), 1);
  for (ColorId a : palette) gamma.push_back(tau(a));

  LambdaConstruction out{LambdaMap(n, p, gamma), alt_sigma, palette};
  const SignedSpace& space = out.lambda.space();

  // Color rank j (1-based) of every edge.
  std::vector<int> rank(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    rank[i] = static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c.color(i)) - palette.begin()) + 1;

  auto order_key = [&](VertexMask part) -> VertexMask {
    if (order == SubsetOrder::Colex) return part;
    VertexMask reversed = 0;
    for (int i = 0; i < n; ++i)
      if ((part >> i) & 1U) reversed |= VertexMask{1} << (n - 1 - i);
    return reversed;
  };

  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
  std::vector<int> top_rank(static_cast<std::size_t>(p) + 1);
  for (std::size_t code = 1; code < space.size(); ++code) {
    for (int i = 0; i < n; ++i) digits[static_cast<std::size_t>(i)] = space.entry(code, i);
    const int a = alt(digits);
    if (a <= alt_sigma) {
      out.lambda.set(code, {space.first_nonzero(code), a});
      continue;
    }
    int zeta = 0;
    for (int eps = 1; eps <= p; ++eps) {
      const VertexMask cls = sigma.image(space.part(code, eps));
      int best = 0;
      for (std::size_t i = 0; i < h.edge_count(); ++i)
        if ((h.edge(i) & ~cls) == 0) best = std::max(best, rank[i]);
      top_rank[static_cast<std::size_t>(eps)] = best;
      zeta = std::max(zeta, best);
    }
    if (zeta == 0)
      throw std::logic_error("build_lambda: alt(X) exceeds alt_p(H, sigma) but no class contains an edge");
    int chosen = 0;
    VertexMask chosen_key = 0;
    for (int eps = 1; eps <= p; ++eps) {
      if (top_rank[static_cast<std::size_t>(eps)] != zeta) continue;
      // The class holds an a_zeta edge iff its top rank is zeta (zeta is maximal).
      const VertexMask key = order_key(space.part(code, eps));
      if (chosen == 0 || key > chosen_key) {
        chosen = eps;
        chosen_key = key;
      }
    }
    out.lambda.set(code, {chosen, alt_sigma + zeta});
  }
  return out;
}

const char* to_string(HuntStatus s) {
  switch (s) {
    case HuntStatus::Found:
      return "found";
    case HuntStatus::None:
      return "none";
    case HuntStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::vector<std::size_t> orbit_representatives(const SignedSpace& space) {
  auto lex_less = [&](std::size_t a, std::size_t b) {
    for (int i = 0; i < space.dimension(); ++i) {
      const int da = space.entry(a, i);
      const int db = space.entry(b, i);
      if (da != db) return da < db;
    }
    return false;
  };
  std::vector<std::size_t> reps;
  std::vector<bool> seen(space.size(), false);
  for (std::size_t code = 1; code < space.size(); ++code) {
    if (seen[code]) continue;
    std::size_t rep = code;
    for (int j = 0; j < space.order(); ++j) {
      const std::size_t other = space.rotate(code, j);
      seen[other] = true;
      if (lex_less(other, rep)) rep = other;
    }
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end(), lex_less);
  return reps;
}

namespace {

struct OrbitChoice {
  int level;
  int sign;
};

// Backtracking over λ values of orbit representatives, smallest supports
// first so that chains are checked as early as possible. Levels with equal γ
// are interchangeable and opened in order.
class Hunt {
 public:
  Hunt(int n, int p, std::span<const int> gamma, const Budget& budget)
      : lambda_(n, p, std::vector<int>(gamma.begin(), gamma.end())), meter_(budget) {
    const SignedSpace& space = lambda_.space();
    reps_ = orbit_representatives(space);
    std::stable_sort(reps_.begin(), reps_.end(), [&](std::size_t a, std::size_t b) {
      return space.support_size(a) < space.support_size(b);
    });
    const int m = lambda_.levels();
    uses_.assign(static_cast<std::size_t>(m) + 1, 0);
    twin_before_.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int l = 1; l <= m; ++l)
      for (int k = l - 1; k >= 1; --k)
        if (gamma[static_cast<std::size_t>(k - 1)] == gamma[static_cast<std::size_t>(l - 1)]) {
          twin_before_[static_cast<std::size_t>(l)] = k;
          break;
        }
    choices_.reserve(reps_.size());
  }

  void set_abort(const std::atomic<int>* found, int task) {
    found_ = found;
    task_ = task;
  }

  bool replay(std::span<const OrbitChoice> prefix) {
    for (const auto& c : prefix)
      if (!open(c.level) || !place(choices_.size(), c)) return false;
    return true;
  }

  bool run() { return dfs(choices_.size()); }

  void collect(std::size_t depth, std::vector<std::vector<OrbitChoice>>& out) {
    if (choices_.size() == depth || choices_.size() == reps_.size()) {
      out.push_back(choices_);
      return;
    }
    const std::size_t k = choices_.size();
    for_each_choice([&](OrbitChoice c) {
      if (place(k, c)) collect(depth, out);
      unplace(k, c);
      return false;
    });
  }

  const LambdaMap& lambda() const { return lambda_; }
  bool expired() const { return meter_.expired(); }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return meter_.nodes(); }

 private:
  bool open(int level) const {
    const int twin = twin_before_[static_cast<std::size_t>(level)];
    return uses_[static_cast<std::size_t>(level)] > 0 || twin == 0 || uses_[static_cast<std::size_t>(twin)] > 0;
  }

  template <typename F>
  bool for_each_choice(F&& f) {
    for (int level = 1; level <= lambda_.levels(); ++level) {
      if (!open(level)) continue;
      for (int sign = 1; sign <= lambda_.order(); ++sign)
        if (f(OrbitChoice{level, sign})) return true;
    }
    return false;
  }

  // Sets the whole orbit; false when the level's chain bound breaks.
  bool place(std::size_t k, OrbitChoice c) {
    const SignedSpace& space = lambda_.space();
    const int p = space.order();
    for (int j = 0; j < p; ++j)
      lambda_.set(space.rotate(reps_[k], j), {rotate_sign(c.sign, j, p), c.level});
    ++uses_[static_cast<std::size_t>(c.level)];
    choices_.push_back(c);
    return level_chain_max(lambda_, c.level, reach_) <= lambda_.gamma()[static_cast<std::size_t>(c.level - 1)];
  }

  void unplace(std::size_t k, OrbitChoice c) {
    const SignedSpace& space = lambda_.space();
    for (int j = 0; j < space.order(); ++j) lambda_.clear(space.rotate(reps_[k], j));
    --uses_[static_cast<std::size_t>(c.level)];
    choices_.pop_back();
  }

  bool dfs(std::size_t k) {
    if (k == reps_.size()) return true;
    if (found_ != nullptr && found_->load(std::memory_order_relaxed) < task_) aborted_ = true;
    if (aborted_ || !meter_.tick()) return false;
    bool success = false;
    for_each_choice([&](OrbitChoice c) {
      if (place(k, c) && dfs(k + 1)) {
        success = true;
        return true;
      }
      unplace(k, c);
      return meter_.expired() || aborted_;
    });
    return success;
  }

  LambdaMap lambda_;
  NodeMeter meter_;
  std::vector<std::size_t> reps_;
  std::vector<int> uses_;
  std::vector<int> twin_before_;
  std::vector<OrbitChoice> choices_;
  std::vector<std::uint32_t> reach_;
  const std::atomic<int>* found_ = nullptr;
  int task_ = 0;
  bool aborted_ = false;
};

void check_hunt_args(int n, int p, std::span<const int> gamma) {
  if (n < 1) throw std::invalid_argument("hunt: n must be at least 1");
  const int sum = std::accumulate(gamma.begin(), gamma.end(), 0);
  if (sum >= n)
    throw std::invalid_argument("hunt: sum of gamma = " + std::to_string(sum) + " >= n = " + std::to_string(n) +
                                "; the lemma claims nothing to violate");
  (void)p;
}

}  // namespace

HuntResult search_counterexample_serial(int n, int p, std::span<const int> gamma, const Budget& budget) {
  check_hunt_args(n, p, gamma);
  Hunt hunt(n, p, gamma, budget);
  HuntResult out;
  const bool found = hunt.run();
  out.nodes = hunt.nodes();
  if (found) {
    out.status = HuntStatus::Found;
    out.counterexample = hunt.lambda();
  } else {
    out.status = hunt.expired() ? HuntStatus::Unknown : HuntStatus::None;
  }
  return out;
}

HuntResult search_counterexample(int n, int p, std::span<const int> gamma, const SearchOptions& options) {
  check_hunt_args(n, p, gamma);
  if (options.threads <= 1) return search_counterexample_serial(n, p, gamma, options.budget);

  std::vector<std::vector<OrbitChoice>> prefixes;
  {
    Hunt splitter(n, p, gamma, options.budget);
    splitter.collect(2, prefixes);
  }
  struct TaskResult {
    bool found = false;
    bool expired = false;
    std::optional<LambdaMap> lambda;
    std::uint64_t nodes = 0;
  };
  std::vector<TaskResult> results(prefixes.size());
  std::atomic<int> first_found{std::numeric_limits<int>::max()};
  const int task_count = static_cast<int>(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.threads)
  for (int t = 0; t < task_count; ++t) {
    if (first_found.load() < t) continue;
    Hunt hunt(n, p, gamma, options.budget);
    hunt.set_abort(&first_found, t);
    if (!hunt.replay(prefixes[static_cast<std::size_t>(t)])) continue;
    auto& r = results[static_cast<std::size_t>(t)];
    r.found = hunt.run();
    r.expired = hunt.expired();
    r.nodes = hunt.nodes();
    if (r.found) {
      r.lambda = hunt.lambda();
      int seen = first_found.load();
      while (t < seen && !first_found.compare_exchange_weak(seen, t)) {
      }
    }
  }

  HuntResult out;
  bool any_expired = false;
  for (auto& r : results) {
    out.nodes += r.nodes;
    if (r.found && out.status != HuntStatus::Found) {
      out.status = HuntStatus::Found;
      out.counterexample = std::move(r.lambda);
    }
    if (r.expired && out.status != HuntStatus::Found) any_expired = true;
  }
  if (out.status != HuntStatus::Found) out.status = any_expired ? HuntStatus::Unknown : HuntStatus::None;
  return out;
}

}  // namespace kkit
