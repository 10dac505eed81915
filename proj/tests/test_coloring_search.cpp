#include <random>

#include "doctest.h"
#include "kkit/coloring_search.hpp"
#include "oracles.hpp"

using namespace kkit;

namespace {

bool valid(std::span<const VertexMask> edges, std::span<const int> caps, const std::vector<int>& classes) {
  std::vector<std::vector<VertexMask>> cls(caps.size());
  for (std::size_t i = 0; i < edges.size(); ++i) cls[static_cast<std::size_t>(classes[i])].push_back(edges[i]);
  for (std::size_t j = 0; j < caps.size(); ++j)
    if (oracle::matching_number(cls[j]) > caps[j]) return false;
  return true;
}

// Every assignment of edges to classes, checked directly.
bool feasible_by_enumeration(std::span<const VertexMask> edges, std::span<const int> caps) {
  std::vector<int> c(edges.size(), 0);
  const int k = static_cast<int>(caps.size());
  if (k == 0) return edges.empty();
  while (true) {
    if (valid(edges, caps, c)) return true;
    std::size_t i = 0;
    while (i < c.size() && c[i] == k - 1) c[i++] = 0;
    if (i == c.size()) return false;
    ++c[i];
  }
}

}  // namespace

TEST_CASE("capped coloring agrees with enumeration") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 250; ++t) {
    const auto h = oracle::random_hypergraph(rng, 7, 8);
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> caps(static_cast<std::size_t>(k));
    for (int& c : caps) c = std::uniform_int_distribution<int>(0, 2)(rng);
    const auto res = find_capped_coloring_serial(h.edges(), caps);
    const bool expected = feasible_by_enumeration(h.edges(), caps);
    CAPTURE(t);
    REQUIRE((res.status == SearchStatus::Feasible) == expected);
    if (expected) CHECK(valid(h.edges(), caps, res.classes));
  }
}

TEST_CASE("parallel capped coloring returns the serial witness") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 120; ++t) {
    const auto h = oracle::random_hypergraph(rng, 8, 14, 2);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<int> caps(static_cast<std::size_t>(k));
    for (int& c : caps) c = std::uniform_int_distribution<int>(0, 2)(rng);
    const auto serial = find_capped_coloring_serial(h.edges(), caps);
    for (int threads : {2, 4}) {
      const auto par = find_capped_coloring(h.edges(), caps, {threads, Budget{}});
      CHECK(par.status == serial.status);
      CHECK(par.classes == serial.classes);
    }
  }
}

TEST_CASE("capped coloring input checks and budget") {
  const std::vector<VertexMask> edges{1, 2};
  CHECK_THROWS_AS(find_capped_coloring(edges, std::vector<int>(33, 1)), std::invalid_argument);
  CHECK_THROWS_AS(find_capped_coloring(edges, std::vector<int>{-1}), std::invalid_argument);
  CHECK(find_capped_coloring(std::vector<VertexMask>{}, std::vector<int>{}).status == SearchStatus::Feasible);
  CHECK(find_capped_coloring(edges, std::vector<int>{}).status == SearchStatus::Infeasible);
  CHECK(std::string(to_string(SearchStatus::Unknown)) == "unknown");
}
