#include <algorithm>

#include "kkit/hypergraph.hpp"

namespace kkit {
namespace {

// Vertices are colored 1..n in index order; a color may exceed the current
// maximum by at most one. An edge is tested when its last vertex is colored.
class ColoringSearch {
 public:
  ColoringSearch(const Hypergraph& h, int k, const Budget& budget)
      : n_(h.vertex_count()), k_(k), closing_(static_cast<std::size_t>(n_)), class_masks_(static_cast<std::size_t>(k) + 1, 0),
        colors_(static_cast<std::size_t>(n_), 0), meter_(budget) {
    for (VertexMask e : h.edges())
      if (popcount(e) >= 2) closing_[static_cast<std::size_t>(highest_vertex(e) - 1)].push_back(e);
  }

  bool run() { return dfs(1, 0); }
  bool expired() const { return meter_.expired(); }
  std::uint64_t nodes() const { return meter_.nodes(); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool dfs(int v, int max_used) {
    if (v > n_) return true;
    if (!meter_.tick()) return false;
    const int limit = std::min(k_, max_used + 1);
    const VertexMask bit = vertex_bit(v);
    for (int c = 1; c <= limit; ++c) {
      VertexMask& cls = class_masks_[static_cast<std::size_t>(c)];
      const VertexMask grown = cls | bit;
      bool ok = true;
      for (VertexMask e : closing_[static_cast<std::size_t>(v - 1)])
        if ((e & ~grown) == 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cls = grown;
      colors_[static_cast<std::size_t>(v - 1)] = c;
      if (dfs(v + 1, std::max(max_used, c))) return true;
      cls &= ~bit;
      if (meter_.expired()) return false;
    }
    colors_[static_cast<std::size_t>(v - 1)] = 0;
    return false;
  }

  int n_;
  int k_;
  std::vector<std::vector<VertexMask>> closing_;
  std::vector<VertexMask> class_masks_;
  std::vector<int> colors_;
  NodeMeter meter_;
};

}  // namespace

std::optional<std::vector<int>> find_coloring(const Hypergraph& h, int k, const Budget& budget,
                                              std::uint64_t* nodes) {
  if (h.has_singleton_edge()) return std::nullopt;
  if (h.vertex_count() == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  ColoringSearch search(h, k, budget);
  const bool found = search.run();
  if (nodes != nullptr) *nodes += search.nodes();
  if (search.expired())
    throw BudgetExceeded("chromatic search exceeded its budget while testing " + std::to_string(k) + " colors");
  if (!found) return std::nullopt;
  return search.colors();
}

VertexColoringResult chromatic_number(const Hypergraph& h, const Budget& budget) {
  VertexColoringResult result;
  if (h.has_singleton_edge()) {
    result.chromatic = ExtendedNat::infinity();
    result.optimality_certified = true;
    return result;
  }
  if (h.vertex_count() == 0) {
    result.chromatic = 0;
    result.optimality_certified = true;
    return result;
  }
  for (int k = 1; k <= h.vertex_count(); ++k) {
    if (auto colors = find_coloring(h, k, budget, &result.nodes)) {
      result.chromatic = static_cast<std::uint64_t>(k);
      result.colors = std::move(*colors);
      result.optimality_certified = true;  // k-1 failed in the previous round
      return result;
    }
  }
  // Unreachable: n distinct colors always work without singleton edges.
  throw std::logic_error("chromatic_number: no coloring with n colors");
}

bool is_proper_coloring(const Hypergraph& h, std::span<const int> colors) {
  if (colors.size() != static_cast<std::size_t>(h.vertex_count())) return false;
  for (VertexMask e : h.edges()) {
    if (popcount(e) < 2) return false;
    const int first = colors[static_cast<std::size_t>(lowest_vertex(e) - 1)];
    bool mono = true;
    for (int v : vertices_of(e))
      if (colors[static_cast<std::size_t>(v - 1)] != first) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

}  // namespace kkit
