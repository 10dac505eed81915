#include "kkit/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kkit {

RamseyInstance::RamseyInstance(int r, std::vector<int> s) : r_(r), s_(std::move(s)) {
  if (r < 1) throw std::invalid_argument("ramsey: r must be at least 1, got " + std::to_string(r));
  if (s_.empty()) throw std::invalid_argument("ramsey: s must be nonempty");
  for (int v : s_)
    if (v < 1) throw std::invalid_argument("ramsey: matching sizes must be positive, got " + std::to_string(v));
  std::sort(s_.begin(), s_.end());
}

ColorFrequencyMap RamseyInstance::frequency_map() const {
  std::map<ColorId, int> table;
  for (std::size_t j = 0; j < s_.size(); ++j) table[static_cast<ColorId>(j + 1)] = s_[j] - 1;
  return ColorFrequencyMap(largest(), 0, std::move(table));
}

std::uint64_t formula_value(const RamseyInstance& instance) {
  const auto s = instance.sizes();
  const std::uint64_t sum = std::accumulate(s.begin(), s.end(), std::uint64_t{0});
  return 1 + sum + static_cast<std::uint64_t>(instance.largest()) * static_cast<std::uint64_t>(instance.uniformity() - 1) -
         static_cast<std::uint64_t>(instance.color_count());
}

BadColoring bad_coloring(const RamseyInstance& instance) {
  const int r = instance.uniformity();
  const int lambda = static_cast<int>(formula_value(instance)) - 1;
  if (lambda < r)
    throw std::invalid_argument("bad_coloring: no edges to color (Λ = " + std::to_string(lambda) + " < r = " +
                                std::to_string(r) + ")");
  if (lambda > kMaxVertices) throw std::invalid_argument("bad_coloring: Λ exceeds 64 vertices");
  const auto s = instance.sizes();
  const std::size_t t = s.size();
  Partition part{lambda, std::vector<VertexMask>(t, 0)};
  int next = 1;
  for (std::size_t i = 0; i < t; ++i) {
    const int size = i + 1 < t ? s[i] - 1 : s[i] * r - 1;
    for (int c = 0; c < size; ++c) part.blocks[i] |= vertex_bit(next++);
  }
  const Hypergraph kn = complete_uniform(lambda, r);
  std::vector<ColorId> colors(kn.edge_count());
  for (std::size_t i = 0; i < kn.edge_count(); ++i)
    colors[i] = static_cast<ColorId>(part.first_block_meeting(kn.edge(i)));
  BadColoring out{lambda, part, EdgeColoring(kn, std::move(colors))};
  if (!is_matching_coloring(out.coloring, instance.frequency_map()))
    throw std::logic_error("bad_coloring: block coloring has a forbidden monochromatic matching");
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Arrows:
      return "arrows";
    case Verdict::DoesNotArrow:
      return "does-not-arrow";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

std::vector<int> caps_of(const RamseyInstance& instance) {
  std::vector<int> caps;
  for (int s : instance.sizes()) caps.push_back(s - 1);
  return caps;
}

ArrowsResult edgeless(int n) {
  // K_n^r with n < r has no edges, so no color gets any matching.
  ArrowsResult out;
  out.verdict = Verdict::DoesNotArrow;
  out.counterexample = EdgeColoring(Hypergraph(n, {}), {});
  return out;
}

void check_n(int n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("arrows: n must lie in [0, 64]");
}

}  // namespace

ArrowsResult arrows(int n, const RamseyInstance& instance, const SearchOptions& options) {
  check_n(n);
  if (n < instance.uniformity()) return edgeless(n);
  const Hypergraph kn = complete_uniform(n, instance.uniformity());
  const auto caps = caps_of(instance);
  const auto found = find_capped_coloring(kn.edges(), caps, options);
  ArrowsResult out;
  out.nodes = found.nodes;
  switch (found.status) {
    case SearchStatus::Feasible: {
      std::vector<ColorId> colors(kn.edge_count());
      for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<ColorId>(found.classes[i] + 1);
      out.verdict = Verdict::DoesNotArrow;
      out.counterexample = EdgeColoring(kn, std::move(colors));
      break;
    }
    case SearchStatus::Infeasible:
      out.verdict = Verdict::Arrows;
      break;
    case SearchStatus::Unknown:
      out.verdict = Verdict::Unknown;
      break;
  }
  return out;
}

ArrowsResult arrows_by_enumeration(int n, const RamseyInstance& instance) {
  check_n(n);
  if (n < instance.uniformity()) return edgeless(n);
  const Hypergraph kn = complete_uniform(n, instance.uniformity());
  const std::size_t m = kn.edge_count();
  const int t = instance.color_count();
  if (static_cast<double>(m) * std::log2(static_cast<double>(std::max(t, 2))) > 26.0)
    throw std::invalid_argument("arrows_by_enumeration: too many colorings to enumerate");
  const auto s = instance.sizes();

  ArrowsResult out;
  std::vector<ColorId> colors(m, 1);
  std::vector<std::vector<VertexMask>> classes(static_cast<std::size_t>(t));
  while (true) {
    ++out.nodes;
    for (auto& c : classes) c.clear();
    for (std::size_t i = 0; i < m; ++i) classes[colors[i] - 1].push_back(kn.edge(i));
    bool has_mono = false;
    for (int j = 0; j < t && !has_mono; ++j)
      has_mono = has_matching_of_size(classes[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(j)]);
    if (!has_mono) {
      out.verdict = Verdict::DoesNotArrow;
      out.counterexample = EdgeColoring(kn, colors);
      return out;
    }
    // Odometer over [t]^m.
    std::size_t i = 0;
    while (i < m && colors[i] == static_cast<ColorId>(t)) colors[i++] = 1;
    if (i == m) break;
    ++colors[i];
  }
  out.verdict = Verdict::Arrows;
  return out;
}

RamseySearchReport ramsey_number_exact(const RamseyInstance& instance, const SearchOptions& options) {
  RamseySearchReport report;
  report.instance = instance;
  report.formula = formula_value(instance);
  const int lambda = static_cast<int>(report.formula) - 1;
  if (lambda + 4 > kMaxVertices) throw std::invalid_argument("ramsey search: formula value too large");

  if (lambda < instance.uniformity()) {
    report.verified_false_at = static_cast<std::uint64_t>(lambda);
    report.witness = edgeless(lambda).counterexample;
  } else {
    auto bad = bad_coloring(instance);
    report.verified_false_at = static_cast<std::uint64_t>(lambda);
    report.witness = std::move(bad.coloring);
  }

  for (int n = lambda + 1; n <= lambda + 4; ++n) {
    const auto verdict = arrows(n, instance, options);
    report.nodes += verdict.nodes;
    if (verdict.verdict == Verdict::Unknown) {
      report.status = "unknown";
      return report;
    }
    if (verdict.verdict == Verdict::Arrows) {
      report.verified_true_at = static_cast<std::uint64_t>(n);
      report.exact = static_cast<std::uint64_t>(n);
      report.status = report.exact == report.formula ? "confirmed" : "mismatch";
      return report;
    }
    report.verified_false_at = static_cast<std::uint64_t>(n);
    report.witness = verdict.counterexample;
  }
  report.status = "mismatch";
  return report;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::pair<std::uint64_t, std::uint64_t> proposition8_bounds(const RamseyInstance& instance, int p) {
  if (!is_prime(p)) throw std::invalid_argument("proposition8_bounds: p = " + std::to_string(p) + " is not prime");
  if (instance.largest() > p)
    throw std::invalid_argument("proposition8_bounds: s_t = " + std::to_string(instance.largest()) + " exceeds p = " +
                                std::to_string(p));
  const std::uint64_t lower = formula_value(instance);
  const std::uint64_t upper =
      lower + static_cast<std::uint64_t>(p - instance.largest()) * static_cast<std::uint64_t>(instance.uniformity() - 1);
  return {lower, upper};
}

}  // namespace kkit
