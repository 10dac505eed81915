#include <random>

#include "doctest.h"
#include "kkit/alternation.hpp"
#include "kkit/kneser.hpp"
#include "oracles.hpp"

using namespace kkit;

TEST_CASE("kneser_power examples") {
  CHECK(kneser_power(complete_uniform(3, 2), 2).graph.edge_count() == 0);
  const auto petersen = kneser_power(complete_uniform(5, 2), 2);
  CHECK(petersen.graph.vertex_count() == 10);
  CHECK(petersen.graph.edge_count() == 15);
  const auto k6 = kneser_power(complete_uniform(6, 2), 3);
  CHECK(k6.graph.vertex_count() == 15);
  CHECK(k6.graph.edge_count() == 15);
  CHECK_THROWS_AS(kneser_power(complete_uniform(3, 2), 1), std::invalid_argument);
}

TEST_CASE("kneser edges are r pairwise disjoint source edges, and all of them") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    const auto h = oracle::random_hypergraph(rng, 7, 12);
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    const auto kg = kneser_power(h, r);
    REQUIRE(kg.source_edges.size() == h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) CHECK(kg.source_edges[i] == h.edge(i));
    std::size_t expected = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.edge_count()); ++s)
      if (std::popcount(s) == r && oracle::pairwise_disjoint({h.edges().begin(), h.edges().end()}, s)) ++expected;
    CHECK(kg.graph.edge_count() == expected);
    for (VertexMask e : kg.graph.edges()) {
      CHECK(popcount(e) == r);
      VertexMask seen = 0;
      for (int v : vertices_of(e)) {
        CHECK((seen & kg.source_edges[static_cast<std::size_t>(v - 1)]) == 0);
        seen |= kg.source_edges[static_cast<std::size_t>(v - 1)];
      }
    }
  }
}

TEST_CASE("theorem1_lower_bound") {
  CHECK(theorem1_lower_bound(5, 2, 2) == 3);
  CHECK(theorem1_lower_bound(7, 7, 3) == 0);
  CHECK(theorem1_lower_bound(6, 2, 2) == 4);
  CHECK(theorem1_lower_bound(7, 2, 3) == 3);
  CHECK_THROWS_AS(theorem1_lower_bound(5, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_lower_bound(5, 6, 2), std::invalid_argument);
}

TEST_CASE("kneser chromatic numbers respect the alternation lower bound") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    const auto h = oracle::random_hypergraph(rng, 6, 12);
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    const auto kg = kneser_power(h, r);
    if (kg.graph.vertex_count() > 12) continue;
    const auto chi = chromatic_number(kg.graph);
    const auto bound = theorem1_lower_bound(h.vertex_count(), alternation_number(h, r).value, r);
    CAPTURE(t);
    CHECK(ExtendedNat(bound) <= chi.chromatic);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("Petersen graph attains the bound") {
  const auto kg = kneser_power(complete_uniform(5, 2), 2);
  const auto chi = chromatic_number(kg.graph);
  CHECK(chi.chromatic == ExtendedNat(3));
  CHECK(theorem1_lower_bound(5, alternation_number(complete_uniform(5, 2), 2).value, 2) == 3);
}
