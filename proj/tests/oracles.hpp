#ifndef KKIT_TESTS_ORACLES_HPP
#define KKIT_TESTS_ORACLES_HPP

// Brute-force reference implementations. They share only plain data types
// with the library and favour obviousness over speed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "kkit/hypergraph.hpp"
#include "kkit/matchcolor.hpp"
#include "kkit/tucker.hpp"

namespace oracle {

using kkit::VertexMask;
using Vec = std::vector<int>;

inline bool pairwise_disjoint(const std::vector<VertexMask>& edges, std::uint64_t subset) {
  VertexMask seen = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (((subset >> i) & 1U) == 0) continue;
    if ((seen & edges[i]) != 0) return false;
    seen |= edges[i];
  }
  return true;
}

// max |M| over all 2^|E| edge subsets.
inline int matching_number(const std::vector<VertexMask>& edges) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s)
    if (pairwise_disjoint(edges, s)) best = std::max(best, std::popcount(s));
  return best;
}

// Longest subsequence of nonzero entries with consecutive terms different,
// by trying every subset of positions.
inline int alt_by_subsets(const Vec& x) {
  const int n = static_cast<int>(x.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    int prev = -1, len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (((s >> i) & 1U) == 0) continue;
      if (x[static_cast<std::size_t>(i)] == 0 || x[static_cast<std::size_t>(i)] == prev) ok = false;
      prev = x[static_cast<std::size_t>(i)];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

// Same quantity by quadratic DP.
inline int alt_by_dp(const Vec& x) {
  std::vector<int> dp(x.size(), 0);
  int best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    dp[i] = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (x[j] != 0 && x[j] != x[i]) dp[i] = std::max(dp[i], dp[j] + 1);
    best = std::max(best, dp[i]);
  }
  return best;
}

// Calls f on every vector of {0..p}^n.
inline void for_each_vector(int n, int p, const std::function<void(const Vec&)>& f) {
  Vec x(static_cast<std::size_t>(n), 0);
  while (true) {
    f(x);
    int i = 0;
    while (i < n && x[static_cast<std::size_t>(i)] == p) x[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
    ++x[static_cast<std::size_t>(i)];
  }
}

// max alt(X) over all X whose classes σ(X^ε) hold no edge; sigma is 1-based.
inline int alt_with_ordering(const kkit::Hypergraph& h, int p, const Vec& sigma) {
  int best = 0;
  for_each_vector(h.vertex_count(), p, [&](const Vec& x) {
    for (int eps = 1; eps <= p; ++eps) {
      VertexMask cls = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == eps) cls |= VertexMask{1} << (sigma[i] - 1);
      for (VertexMask e : h.edges())
        if ((e & ~cls) == 0) return;
    }
    best = std::max(best, alt_by_dp(x));
  });
  return best;
}

inline int alternation_number(const kkit::Hypergraph& h, int p) {
  Vec sigma(static_cast<std::size_t>(h.vertex_count()));
  std::iota(sigma.begin(), sigma.end(), 1);
  int best = h.vertex_count();
  do best = std::min(best, alt_with_ordering(h, p, sigma));
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

inline bool weakly_proper(const kkit::Hypergraph& h, const Vec& colors) {
  for (VertexMask e : h.edges()) {
    std::set<int> seen;
    for (int v = 1; v <= h.vertex_count(); ++v)
      if ((e >> (v - 1)) & 1U) seen.insert(colors[static_cast<std::size_t>(v - 1)]);
    if (seen.size() < 2) return false;
  }
  return true;
}

// k^n enumeration for k = 0, 1, ...; nullopt means infinity.
inline std::optional<int> chromatic_number(const kkit::Hypergraph& h) {
  const int n = h.vertex_count();
  for (VertexMask e : h.edges())
    if (std::popcount(e) == 1) return std::nullopt;
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    Vec c(static_cast<std::size_t>(n), 0);
    while (true) {
      if (weakly_proper(h, c)) return k;
      int i = 0;
      while (i < n && c[static_cast<std::size_t>(i)] == k - 1) c[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
      ++c[static_cast<std::size_t>(i)];
    }
  }
  return n;
}

inline bool class_ok(const std::vector<VertexMask>& cls, int cap) { return matching_number(cls) <= cap; }

// Least number of distinct ids over every map E -> U, where U holds every
// table id plus |E| ids taking the default value. nullopt means infinity.
inline std::optional<int> matching_chromatic_number(const kkit::Hypergraph& h, const kkit::ColorFrequencyMap& tau) {
  const std::size_t m = h.edge_count();
  if (m == 0) return 0;
  std::vector<kkit::ColorId> ids;
  for (const auto& [id, v] : tau.table()) ids.push_back(id);
  for (kkit::ColorId id = 1; ids.size() < tau.table().size() + m; ++id)
    if (!tau.table().contains(id)) ids.push_back(id);
  std::optional<int> best;
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    std::map<kkit::ColorId, std::vector<VertexMask>> classes;
    for (std::size_t i = 0; i < m; ++i) classes[ids[pick[i]]].push_back(h.edge(i));
    bool ok = true;
    for (const auto& [id, cls] : classes) ok = ok && class_ok(cls, tau(id));
    if (ok && (!best || static_cast<int>(classes.size()) < *best)) best = static_cast<int>(classes.size());
    std::size_t i = 0;
    while (i < m && pick[i] + 1 == ids.size()) pick[i++] = 0;
    if (i == m) break;
    ++pick[i];
  }
  return best;
}

// min |A| with Σ τ(a) >= need over subsets of table ids plus up to `spare`
// default-valued ids.
inline std::optional<int> min_palette_for_sum(const kkit::ColorFrequencyMap& tau, int need, bool nonempty, int spare) {
  std::vector<int> values;
  for (const auto& [id, v] : tau.table()) values.push_back(v);
  for (int i = 0; i < spare; ++i) values.push_back(tau.default_value());
  std::optional<int> best;
  for (std::uint32_t s = 0; s < (1U << values.size()); ++s) {
    int sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if ((s >> i) & 1U) sum += values[i];
    const int size = std::popcount(s);
    if (sum >= need && (!nonempty || size > 0) && (!best || size < *best)) best = size;
  }
  return best;
}

inline std::vector<VertexMask> k_subsets(int n, int k) {
  std::vector<VertexMask> out;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s)
    if (std::popcount(s) == k) out.push_back(s);
  return out;
}

// Every t-coloring of E(K_n^r) has a color-j s_j-matching.
inline bool arrows(int n, int r, const Vec& s) {
  const auto edges = k_subsets(n, r);
  const std::size_t t = s.size();
  std::vector<std::size_t> c(edges.size(), 0);
  while (true) {
    bool hit = false;
    for (std::size_t j = 0; j < t && !hit; ++j) {
      std::vector<VertexMask> cls;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (c[i] == j) cls.push_back(edges[i]);
      hit = matching_number(cls) >= s[j];
    }
    if (!hit) return false;
    std::size_t i = 0;
    while (i < edges.size() && c[i] + 1 == t) c[i++] = 0;
    if (i == edges.size()) return true;
    ++c[i];
  }
}

inline bool below(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && a[i] != b[i]) return false;
  return true;
}

inline std::vector<Vec> nonzero_vectors(int n, int p) {
  std::vector<Vec> out;
  for_each_vector(n, p, [&](const Vec& x) {
    if (std::any_of(x.begin(), x.end(), [](int v) { return v != 0; })) out.push_back(x);
  });
  return out;
}

inline kkit::LambdaValue lookup(const kkit::LambdaMap& lambda, const Vec& x) {
  std::vector<std::uint8_t> d(x.begin(), x.end());
  return lambda.at(kkit::SignedVector(lambda.order(), d));
}

// Max distinct λ1 values over explicit chains of distinct vectors on `level`.
inline int chain_max_by_enumeration(const kkit::LambdaMap& lambda, int level) {
  std::vector<Vec> members;
  for (const auto& x : nonzero_vectors(lambda.dimension(), lambda.order()))
    if (lookup(lambda, x).level == level) members.push_back(x);
  int best = 0;
  std::function<void(std::size_t, std::set<int>)> extend = [&](std::size_t last, std::set<int> seen) {
    best = std::max(best, static_cast<int>(seen.size()));
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k == last || !below(members[last], members[k]) || members[k] == members[last]) continue;
      auto next = seen;
      next.insert(lookup(lambda, members[k]).sign);
      extend(k, next);
    }
  };
  for (std::size_t k = 0; k < members.size(); ++k) extend(k, {lookup(lambda, members[k]).sign});
  return best;
}

inline Vec rotate(const Vec& x, int j, int p) {
  Vec y = x;
  for (int& v : y)
    if (v != 0) v = (v + j - 1) % p + 1;
  return y;
}

// The three classical conditions: equivariance, agreement of λ1 along
// X1 ⊂ X2 on levels <= α, and at most p-1 values along X1 ⊂ ... ⊂ X_p
// (repeats allowed) on levels > α.
inline bool classical_conditions(const kkit::LambdaMap& lambda, int alpha) {
  const int n = lambda.dimension(), p = lambda.order();
  const auto all = nonzero_vectors(n, p);
  for (const auto& x : all)
    for (int j = 1; j <= p; ++j) {
      const auto a = lookup(lambda, x), b = lookup(lambda, rotate(x, j, p));
      if (b.level != a.level || b.sign != (a.sign + j - 1) % p + 1) return false;
    }
  for (const auto& x1 : all)
    for (const auto& x2 : all) {
      if (!below(x1, x2)) continue;
      const auto a = lookup(lambda, x1), b = lookup(lambda, x2);
      if (a.level == b.level && a.level <= alpha && a.sign != b.sign) return false;
    }
  bool ok = true;
  std::function<void(Vec, int, int, std::set<int>)> walk = [&](Vec last, int level, int len, std::set<int> seen) {
    if (!ok) return;
    if (len == p) {
      if (static_cast<int>(seen.size()) > p - 1) ok = false;
      return;
    }
    for (const auto& y : all) {
      if (!below(last, y) || lookup(lambda, y).level != level) continue;
      auto next = seen;
      next.insert(lookup(lambda, y).sign);
      walk(y, level, len + 1, next);
    }
  };
  for (const auto& x : all) {
    const auto v = lookup(lambda, x);
    if (v.level > alpha) walk(x, v.level, 1, {v.sign});
  }
  return ok;
}

// A random equivariant λ: random values on the lexicographically least member
// of each orbit, extended by the action.
inline kkit::LambdaMap random_equivariant(int n, int p, const Vec& gamma, std::mt19937_64& rng) {
  kkit::LambdaMap lambda(n, p, gamma);
  std::uniform_int_distribution<int> sign(1, p), level(1, static_cast<int>(gamma.size()));
  for (const auto& x : nonzero_vectors(n, p)) {
    Vec least = x;
    for (int j = 1; j <= p; ++j) least = std::min(least, rotate(x, j, p));
    if (least != x) continue;
    const int s = sign(rng), l = level(rng);
    for (int j = 1; j <= p; ++j) {
      const Vec y = rotate(x, j, p);
      lambda.set(kkit::SignedVector(p, std::vector<std::uint8_t>(y.begin(), y.end())), {(s + j - 1) % p + 1, l});
    }
  }
  return lambda;
}

inline kkit::Hypergraph random_hypergraph(std::mt19937_64& rng, int max_n, int max_edges, int min_edge = 1) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const int m = std::uniform_int_distribution<int>(0, max_edges)(rng);
  std::vector<VertexMask> edges;
  std::uniform_int_distribution<VertexMask> pick(1, (VertexMask{1} << n) - 1);
  for (int i = 0; i < m; ++i) {
    const VertexMask e = pick(rng);
    if (std::popcount(e) >= min_edge) edges.push_back(e);
  }
  return kkit::Hypergraph(n, edges);
}

}  // namespace oracle

#endif  // KKIT_TESTS_ORACLES_HPP
