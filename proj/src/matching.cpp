#include <algorithm>
#include <climits>

#include "kkit/hypergraph.hpp"

namespace kkit {
namespace {

int min_edge_size(std::span<const VertexMask> edges) {
  int best = INT_MAX;
  for (VertexMask e : edges) best = std::min(best, popcount(e));
  return best == INT_MAX ? 1 : best;
}

// Upper bound on how many more disjoint edges fit: compatible edge count and
// free covered vertices divided by the smallest edge size.
int remaining_bound(std::span<const VertexMask> edges, std::size_t start, VertexMask used, int min_size) {
  int avail = 0;
  VertexMask cover = 0;
  for (std::size_t i = start; i < edges.size(); ++i) {
    if ((edges[i] & used) != 0) continue;
    ++avail;
    cover |= edges[i];
  }
  return std::min(avail, popcount(cover) / min_size);
}

bool find_matching(std::span<const VertexMask> edges, std::size_t start, VertexMask used, int need,
                   int min_size) {
  if (need <= 0) return true;
  if (remaining_bound(edges, start, used, min_size) < need) return false;
  for (std::size_t i = start; i + static_cast<std::size_t>(need) <= edges.size(); ++i) {
    if ((edges[i] & used) != 0) continue;
    if (find_matching(edges, i + 1, used | edges[i], need - 1, min_size)) return true;
  }
  return false;
}

void best_matching(std::span<const VertexMask> edges, std::size_t start, VertexMask used, int min_size,
                   std::vector<VertexMask>& current, std::vector<VertexMask>& best) {
  if (current.size() > best.size()) best = current;
  const int bound = remaining_bound(edges, start, used, min_size);
  if (static_cast<int>(current.size()) + bound <= static_cast<int>(best.size())) return;
  for (std::size_t i = start; i < edges.size(); ++i) {
    if ((edges[i] & used) != 0) continue;
    current.push_back(edges[i]);
    best_matching(edges, i + 1, used | edges[i], min_size, current, best);
    current.pop_back();
  }
}

std::vector<VertexMask> by_lowest_vertex(std::span<const VertexMask> edges, VertexMask blocked) {
  std::vector<VertexMask> out;
  out.reserve(edges.size());
  for (VertexMask e : edges)
    if ((e & blocked) == 0) out.push_back(e);
  std::stable_sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return out;
}

}  // namespace

bool has_matching_of_size(std::span<const VertexMask> edges, int m, VertexMask blocked) {
  if (m <= 0) return true;
  // Small inputs skip the allocation; order only affects speed here.
  VertexMask local[64];
  std::size_t count = 0;
  if (edges.size() <= 64) {
    for (VertexMask e : edges)
      if ((e & blocked) == 0) local[count++] = e;
    if (count < static_cast<std::size_t>(m)) return false;
    std::span<const VertexMask> view(local, count);
    return find_matching(view, 0, 0, m, min_edge_size(view));
  }
  const auto sorted = by_lowest_vertex(edges, blocked);
  if (sorted.size() < static_cast<std::size_t>(m)) return false;
  return find_matching(sorted, 0, 0, m, min_edge_size(sorted));
}

std::vector<VertexMask> maximum_matching(std::span<const VertexMask> edges) {
  const auto sorted = by_lowest_vertex(edges, 0);
  std::vector<VertexMask> current;
  std::vector<VertexMask> best;
  best_matching(sorted, 0, 0, min_edge_size(sorted), current, best);
  std::sort(best.begin(), best.end());
  return best;
}

int matching_number(std::span<const VertexMask> edges) {
  return static_cast<int>(maximum_matching(edges).size());
}

int matching_number(const Hypergraph& h) { return matching_number(h.edges()); }

}  // namespace kkit
