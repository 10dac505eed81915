#include "kkit/kneser.hpp"

#include <stdexcept>
#include <string>

namespace kkit {
namespace {

// Enumerates r-cliques of the disjointness graph in increasing index order.
void extend(const std::vector<VertexMask>& compatible, int remaining, VertexMask candidates, VertexMask chosen,
            std::vector<VertexMask>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  while (candidates != 0) {
    if (popcount(candidates) < remaining) return;
    const int v = lowest_vertex(candidates);
    candidates &= candidates - 1;
    extend(compatible, remaining - 1, candidates & compatible[static_cast<std::size_t>(v - 1)],
           chosen | vertex_bit(v), out);
  }
}

}  // namespace

KneserHypergraph kneser_power(const Hypergraph& h, int r) {
  if (r < 2) throw std::invalid_argument("kneser_power requires r >= 2, got " + std::to_string(r));
  const std::size_t m = h.edge_count();
  if (m > static_cast<std::size_t>(kMaxVertices))
    throw std::invalid_argument("kneser_power supports at most 64 edges, got " + std::to_string(m));

  std::vector<VertexMask> compatible(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if ((h.edge(i) & h.edge(j)) == 0) {
        compatible[i] |= VertexMask{1} << j;
        compatible[j] |= VertexMask{1} << i;
      }

  std::vector<VertexMask> edges;
  extend(compatible, r, full_mask(static_cast<int>(m)), 0, edges);

  KneserHypergraph out;
  out.graph = Hypergraph(static_cast<int>(m), std::move(edges));
  out.source_edges.assign(h.edges().begin(), h.edges().end());
  return out;
}

std::uint64_t theorem1_lower_bound(int vertex_count, int alternation, int r) {
  if (r < 2) throw std::invalid_argument("theorem1_lower_bound requires r >= 2, got " + std::to_string(r));
  if (alternation < 0 || alternation > vertex_count)
    throw std::invalid_argument("alternation must lie in [0, n]");
  const int gap = vertex_count - alternation;
  return static_cast<std::uint64_t>((gap + r - 2) / (r - 1));
}

}  // namespace kkit
