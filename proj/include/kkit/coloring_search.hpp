#ifndef KKIT_COLORING_SEARCH_HPP
#define KKIT_COLORING_SEARCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kkit/budget.hpp"
#include "kkit/hypergraph.hpp"

namespace kkit {

enum class SearchStatus { Feasible, Infeasible, Unknown };

const char* to_string(SearchStatus s);

struct SearchOptions {
  int threads = 1;
  Budget budget;
};

struct CappedColoring {
  SearchStatus status = SearchStatus::Unknown;
  // classes[i] is the 0-based class of edge i; set only when Feasible.
  std::vector<int> classes;
  std::uint64_t nodes = 0;
};

// Decides whether the edges can be split into classes 0..k-1 such that class
// j contains no (caps[j]+1)-matching. Edges are assigned in the given order;
// every unassigned edge keeps the set of classes that can still take it and a
// branch dies as soon as one of those sets is empty. Classes with equal caps
// are interchangeable, so an empty class is only opened if it is the first
// empty one of its cap. The witness is the first feasible assignment in DFS
// order, whatever the thread count. At most 32 classes.
CappedColoring find_capped_coloring(std::span<const VertexMask> edges, std::span<const int> caps,
                                    const SearchOptions& options = {});
// Single-threaded reference.
CappedColoring find_capped_coloring_serial(std::span<const VertexMask> edges, std::span<const int> caps,
                                           const Budget& budget = {});

}  // namespace kkit

#endif  // KKIT_COLORING_SEARCH_HPP
