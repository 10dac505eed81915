#include "kkit/matchcolor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kkit {

ColorFrequencyMap::ColorFrequencyMap(int r, int default_value, std::map<ColorId, int> table)
    : r_(r), default_(default_value), table_(std::move(table)) {
  if (r < 1) throw std::invalid_argument("tau: r must be at least 1, got " + std::to_string(r));
  auto check = [r](int v, const std::string& where) {
    if (v < 0 || v > r - 1)
      throw std::invalid_argument("tau: " + where + " = " + std::to_string(v) + " outside [0, " +
                                  std::to_string(r - 1) + "]");
  };
  check(default_, "default");
  for (const auto& [id, v] : table_) {
    if (id == 0) throw std::invalid_argument("tau: color ids start at 1");
    check(v, "table[" + std::to_string(id) + "]");
  }
}

int ColorFrequencyMap::operator()(ColorId color) const {
  auto it = table_.find(color);
  return it == table_.end() ? default_ : it->second;
}

int ColorFrequencyMap::max_value() const {
  int best = default_;
  for (const auto& [id, v] : table_) best = std::max(best, v);
  return best;
}

bool ColorFrequencyMap::attains(int value) const { return color_with_value(value).has_value(); }

std::optional<ColorId> ColorFrequencyMap::color_with_value(int value, const std::set<ColorId>& exclude) const {
  std::optional<ColorId> best;
  for (const auto& [id, v] : table_)
    if (v == value && !exclude.contains(id)) {
      best = id;
      break;
    }
  if (default_ == value) {
    // The default covers every id outside the table.
    for (ColorId id = 1;; ++id) {
      if (best && id > *best) break;
      if (!table_.contains(id) && !exclude.contains(id)) {
        best = id;
        break;
      }
    }
  }
  return best;
}

std::vector<ColorId> ColorFrequencyMap::top_colors(std::size_t s) const {
  std::vector<std::pair<int, ColorId>> listed;
  for (const auto& [id, v] : table_) listed.emplace_back(v, id);
  std::sort(listed.begin(), listed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<ColorId> out;
  out.reserve(s);
  std::size_t next_listed = 0;
  ColorId next_default = 1;
  auto advance_default = [&] {
    while (table_.contains(next_default)) ++next_default;
  };
  advance_default();
  while (out.size() < s) {
    const bool have_listed = next_listed < listed.size();
    if (have_listed && (listed[next_listed].first > default_ ||
                        (listed[next_listed].first == default_ && listed[next_listed].second < next_default))) {
      out.push_back(listed[next_listed++].second);
    } else {
      out.push_back(next_default++);
      advance_default();
    }
  }
  return out;
}

EdgeColoring::EdgeColoring(Hypergraph target, std::vector<ColorId> colors)
    : target_(std::move(target)), colors_(std::move(colors)) {
  if (colors_.size() != target_.edge_count())
    throw std::invalid_argument("coloring has " + std::to_string(colors_.size()) + " entries for " +
                                std::to_string(target_.edge_count()) + " edges");
  for (ColorId c : colors_)
    if (c == 0) throw std::invalid_argument("color ids start at 1");
}

std::set<ColorId> EdgeColoring::palette() const { return {colors_.begin(), colors_.end()}; }

std::vector<VertexMask> EdgeColoring::class_edges(ColorId color) const {
  std::vector<VertexMask> out;
  for (std::size_t i = 0; i < colors_.size(); ++i)
    if (colors_[i] == color) out.push_back(target_.edge(i));
  return out;
}

bool Partition::is_valid() const {
  VertexMask seen = 0;
  for (VertexMask b : blocks) {
    if ((seen & b) != 0) return false;
    seen |= b;
  }
  return seen == full_mask(ground);
}

std::size_t Partition::first_block_meeting(VertexMask e) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if ((blocks[i] & e) != 0) return i + 1;
  return 0;
}

std::optional<ColorId> matching_coloring_violation(const EdgeColoring& c, const ColorFrequencyMap& tau) {
  for (ColorId a : c.palette())
    if (has_matching_of_size(c.class_edges(a), tau(a) + 1)) return a;
  return std::nullopt;
}

bool is_matching_coloring(const EdgeColoring& c, const ColorFrequencyMap& tau) {
  return !matching_coloring_violation(c, tau).has_value();
}

MatchingChromaticBudgetExceeded::MatchingChromaticBudgetExceeded(std::uint64_t lower_bound, ExtendedNat upper_bound)
    : BudgetExceeded("matching chromatic search exceeded its budget; bounds [" + std::to_string(lower_bound) + ", " +
                     upper_bound.to_string() + "]"),
      lower(lower_bound),
      upper(upper_bound) {}

MatchingChromaticResult matching_chromatic_number(const Hypergraph& h, const ColorFrequencyMap& tau,
                                                  const SearchOptions& options) {
  MatchingChromaticResult result;
  const std::size_t m = h.edge_count();
  if (m == 0) {
    result.value = 0;
    result.witness = EdgeColoring(h, {});
    return result;
  }
  // m colors of positive value always work (one edge per class).
  const auto top_m = tau.top_colors(m);
  const ExtendedNat upper = tau(top_m.back()) > 0 ? ExtendedNat(m) : ExtendedNat::infinity();

  for (std::size_t s = 1; s <= m; ++s) {
    const auto ids = tau.top_colors(s);
    std::vector<int> caps;
    for (ColorId id : ids) caps.push_back(tau(id));
    // A zero-valued color cannot hold any edge; larger palettes add nothing.
    if (caps.back() == 0) break;
    const auto found = find_capped_coloring(h.edges(), caps, options);
    result.nodes += found.nodes;
    if (found.status == SearchStatus::Unknown) throw MatchingChromaticBudgetExceeded(s, upper);
    if (found.status == SearchStatus::Feasible) {
      std::vector<ColorId> colors(m);
      for (std::size_t i = 0; i < m; ++i) colors[i] = ids[static_cast<std::size_t>(found.classes[i])];
      result.value = s;
      result.witness = EdgeColoring(h, std::move(colors));
      return result;
    }
  }
  result.value = ExtendedNat::infinity();
  return result;
}

ExtendedNat theorem3_lower_bound(int vertex_count, int alternation, const ColorFrequencyMap& tau,
                                 bool require_nonempty) {
  if (alternation < 0 || alternation > vertex_count)
    throw std::invalid_argument("alternation must lie in [0, n]");
  const int need = vertex_count - alternation;
  if (need <= 0) return require_nonempty ? 1 : 0;
  std::vector<int> listed;
  for (const auto& [id, v] : tau.table()) listed.push_back(v);
  std::sort(listed.rbegin(), listed.rend());
  std::size_t next = 0;
  int sum = 0;
  std::uint64_t count = 0;
  while (sum < need) {
    const int from_table = next < listed.size() ? listed[next] : -1;
    const int take = std::max(from_table, tau.default_value());
    if (take <= 0) return ExtendedNat::infinity();
    if (from_table == take) ++next;
    sum += take;
    ++count;
  }
  return count;
}

Proposition5Coloring proposition5_coloring(int n, int k, int r, const ColorFrequencyMap& tau,
                                           std::vector<ColorId> palette) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("proposition5_coloring: " + what); };
  if (r < 2) fail("requires r >= 2");
  if (k < 1 || n < k) fail("requires n >= k >= 1");
  if (n > kMaxVertices) fail("requires n <= 64");
  const int slack = n - r * (k - 1);
  if (slack < 0) fail("requires n - r(k-1) >= 0, got " + std::to_string(slack));
  if (tau.max_value() > r - 1) fail("tau takes values above r-1");
  if (!tau.attains(r - 1)) fail("r-1 = " + std::to_string(r - 1) + " is not a value of tau");
  if (palette.empty()) fail("palette must be nonempty");
  {
    std::set<ColorId> distinct(palette.begin(), palette.end());
    if (distinct.size() != palette.size()) fail("palette has repeated colors");
    if (distinct.contains(0)) fail("color ids start at 1");
  }
  int total = 0;
  for (ColorId a : palette) total += tau(a);
  if (total < slack)
    fail("sum of tau over A = " + std::to_string(total) + " < n - r(k-1) = " + std::to_string(slack));

  std::stable_sort(palette.begin(), palette.end(), [&](ColorId a, ColorId b) {
    return tau(a) != tau(b) ? tau(a) < tau(b) : a < b;
  });
  if (tau(palette.back()) != r - 1) {
    std::set<ColorId> used(palette.begin(), palette.end());
    palette.back() = *tau.color_with_value(r - 1, used);
  }

  const std::size_t t = palette.size();
  Partition part{n, std::vector<VertexMask>(t, 0)};
  int next = 1;
  for (std::size_t i = 0; i + 1 < t; ++i)
    for (int filled = 0; filled < tau(palette[i]) && next <= n; ++filled) part.blocks[i] |= vertex_bit(next++);
  for (; next <= n; ++next) part.blocks[t - 1] |= vertex_bit(next);
  if (popcount(part.blocks[t - 1]) > r * k - 1)
    fail("last block has " + std::to_string(popcount(part.blocks[t - 1])) + " > rk-1 vertices");

  const Hypergraph kn = complete_uniform(n, k);
  std::vector<ColorId> colors(kn.edge_count());
  for (std::size_t i = 0; i < kn.edge_count(); ++i) colors[i] = palette[part.first_block_meeting(kn.edge(i)) - 1];
  return Proposition5Coloring{palette, part, EdgeColoring(kn, std::move(colors))};
}

ExtendedNat corollary5_value(int n, int k, int r, const ColorFrequencyMap& tau, CorollaryMode mode) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("corollary5_value: " + what); };
  if (r < 2) fail("requires r >= 2");
  if (k < 1) fail("requires k >= 1");
  if (mode == CorollaryMode::Unrestricted) {
    if (n < r * k) fail("requires n >= rk = " + std::to_string(r * k));
  } else {
    if (n < k) fail("requires n >= k");
    if (n < r * (k - 1)) fail("requires n - r(k-1) >= 0");
  }
  if (tau.max_value() > r - 1) fail("tau takes values above r-1");
  if (!tau.attains(r - 1)) fail("r-1 = " + std::to_string(r - 1) + " is not a value of tau");
  return theorem3_lower_bound(n, r * (k - 1), tau, mode == CorollaryMode::Nonempty);
}

}  // namespace kkit
