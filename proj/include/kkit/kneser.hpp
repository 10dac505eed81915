#ifndef KKIT_KNESER_HPP
#define KKIT_KNESER_HPP

#include <cstdint>
#include <vector>

#include "kkit/hypergraph.hpp"

namespace kkit {

struct KneserHypergraph {
  // Vertex i of `graph` is edge source_edges[i-1] of the input.
  Hypergraph graph;
  std::vector<VertexMask> source_edges;
};

// KG^r(H): vertices are E(H) in canonical order, edges are the r-sets of
// pairwise disjoint edges of H. Requires r >= 2 and |E(H)| <= 64.
KneserHypergraph kneser_power(const Hypergraph& h, int r);

// ceil((n - alt) / (r - 1)), or 0 when alt >= n. Requires r >= 2.
std::uint64_t theorem1_lower_bound(int vertex_count, int alternation, int r);

}  // namespace kkit

#endif  // KKIT_KNESER_HPP
