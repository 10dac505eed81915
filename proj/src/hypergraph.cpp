#include "kkit/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace kkit {

VertexMask mask_of(std::initializer_list<int> vertices) {
  return mask_of(std::span<const int>(vertices.begin(), vertices.size()));
}

VertexMask mask_of(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    m |= vertex_bit(v);
  }
  return m;
}

std::vector<int> vertices_of(VertexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(lowest_vertex(m));
    m &= m - 1;
  }
  return out;
}

std::string ExtendedNat::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

Hypergraph::Hypergraph(int n, std::vector<VertexMask> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must lie in [0, 64], got " + std::to_string(n));
  const VertexMask all = full_mask(n);
  for (VertexMask e : edges_) {
    if (e == 0) throw std::invalid_argument("edges must be nonempty");
    if ((e & ~all) != 0)
      throw std::invalid_argument("edge uses vertex " + std::to_string(highest_vertex(e)) +
                                  " outside [1, " + std::to_string(n) + "]");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph Hypergraph::from_lists(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexMask> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.empty()) throw std::invalid_argument("edges must be nonempty");
    for (int v : e)
      if (v < 1 || v > n)
        throw std::invalid_argument("edge uses vertex " + std::to_string(v) + " outside [1, " +
                                    std::to_string(n) + "]");
    masks.push_back(mask_of(std::span<const int>(e)));
  }
  return Hypergraph(n, std::move(masks));
}

bool Hypergraph::has_singleton_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](VertexMask e) { return popcount(e) == 1; });
}

std::optional<std::size_t> Hypergraph::index_of(VertexMask e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Hypergraph complete_uniform(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("complete_uniform requires 1 <= k <= n");
  if (n > kMaxVertices) throw std::invalid_argument("complete_uniform supports n <= 64");
  std::vector<VertexMask> edges;
  // Gosper's hack walks k-subsets in increasing mask order.
  VertexMask s = full_mask(k);
  const VertexMask limit = full_mask(n);
  while (true) {
    edges.push_back(s);
    const VertexMask c = s & (~s + 1);
    const VertexMask r = s + c;
    if (r == 0 || (r & ~limit) != 0) break;
    s = (((r ^ s) >> 2) / c) | r;
    if ((s & ~limit) != 0) break;
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph induced(const Hypergraph& h, VertexMask subset) {
  std::vector<VertexMask> kept;
  for (VertexMask e : h.edges())
    if ((e & ~subset) == 0) kept.push_back(e);
  return Hypergraph(h.vertex_count(), std::move(kept));
}

}  // namespace kkit
