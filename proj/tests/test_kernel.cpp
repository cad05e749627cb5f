#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcp/generator.hpp"
#include "mcp/kernel.hpp"
#include "support/reference_oracle.hpp"

using namespace mcp;

TEST_CASE("random_chromosome is deterministic and Bernoulli(1/2)") {
  Rng a(12345), b(12345);
  CHECK(random_chromosome(100, a) == random_chromosome(100, b));

  Rng r(1);
  const Chromosome one = random_chromosome(1, r);
  CHECK(one.size() == 1);
  CHECK_THROWS_AS(random_chromosome(0, r), std::domain_error);

  double total = 0;
  for (int i = 0; i < 10000; ++i) total += static_cast<double>(random_chromosome(100, r).count());
  const double mean = total / 10000.0;
  CHECK(mean > 48.5);
  CHECK(mean < 51.5);
}

TEST_CASE("fitness is popcount for cliques and zero otherwise") {
  const Graph tri = complete_graph(3);
  CHECK(fitness(tri, Bitset::full(3)) == 3);
  CHECK(fitness(tri, Bitset(3)) == 0);

  const Graph path = path_graph(3);
  CHECK(fitness(path, Bitset::of(3, {0, 2})) == 0);  // non-adjacent pair

  CHECK_THROWS_AS(fitness(tri, Bitset(4)), std::domain_error);

  const Graph g = random_gnp("f", 18, 0.5, 5);
  Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const Chromosome c = random_chromosome(18, rng);
    const int f = fitness(g, c);
    if (testsupport::pairwise_clique(g, c))
      CHECK(f == static_cast<int>(c.count()));
    else
      CHECK(f == 0);
  }
}

TEST_CASE("repair leaves cliques alone") {
  const Graph k5 = complete_graph(5);
  Rng rng(1);
  const Chromosome c = Bitset::of(5, {0, 2, 4});
  CHECK(repair(k5, c, rng) == c);
}

TEST_CASE("repair removes the lowest induced degree vertex") {
  // path v0-v1-v2, all bits set: v0 and v2 have induced degree 1, the
  // lowest-index rule removes v0, leaving the edge {v1, v2}.
  const Graph path = path_graph(3);
  Rng rng(1);
  const Chromosome out = repair(path, Bitset::full(3), rng, TieRule::lowest_index);
  CHECK(out == Bitset::of(3, {1, 2}));
}

TEST_CASE("repair output is always a clique and a subset of the input") {
  const Graph g = random_gnp("r", 20, 0.5, 77);
  Rng rng(999);
  for (int i = 0; i < 1000; ++i) {
    const Chromosome in = random_chromosome(20, rng);
    const Chromosome out = repair(g, in, rng);
    CHECK(testsupport::pairwise_clique(g, out));
    CHECK(out.is_subset_of(in));
    CHECK(out.count() <= in.count());
  }
}

TEST_CASE("repair by global degree is a different rule") {
  // s = {v0, v1, v2}: v2 is isolated inside s but has the highest global
  // degree, so the induced rule drops it first while the global rule keeps
  // it to the end.
  std::vector<std::pair<int, int>> edges{{0, 1}, {2, 3}, {2, 4}, {2, 5}};
  const Graph g("mixed", 6, edges);
  const Chromosome s = Bitset::of(6, {0, 1, 2});
  Rng r1(1), r2(1);
  CHECK(repair(g, s, r1, TieRule::lowest_index, DegreeRule::induced) == Bitset::of(6, {0, 1}));
  CHECK(repair(g, s, r2, TieRule::lowest_index, DegreeRule::global) == Bitset::of(6, {2}));
}

TEST_CASE("extend reaches a maximal superset") {
  const Graph k4 = complete_graph(4);
  Rng rng(1);
  CHECK(extend(k4, Bitset::of(4, {0}), ExtendMode::greedy_highest_degree, rng) == Bitset::full(4));
  CHECK(extend(k4, Bitset::of(4, {0}), ExtendMode::stochastic_uniform, rng) == Bitset::full(4));

  const Graph path = path_graph(3);
  const Chromosome maximal = Bitset::of(3, {0, 1});
  CHECK(extend(path, maximal, ExtendMode::greedy_highest_degree, rng) == maximal);

  CHECK_THROWS_AS(extend(path, Bitset::of(3, {0, 2}), ExtendMode::greedy_highest_degree, rng),
                  std::domain_error);
}

TEST_CASE("stochastic extension reaches every maximal extension") {
  // two triangles sharing the edge {0,1}
  std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
  const Graph g("twotri", 4, edges);
  const Bitset seed = Bitset::of(4, {0, 1});

  const auto expected = testsupport::maximal_cliques_containing(g, seed);
  REQUIRE(expected.size() == 2);

  std::vector<Bitset> seen;
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Chromosome out = extend(g, seed, ExtendMode::stochastic_uniform, rng);
    CHECK(is_maximal_clique(g, out));
    if (std::find(seen.begin(), seen.end(), out) == seen.end()) seen.push_back(out);
  }
  CHECK(seen.size() == expected.size());
  for (const auto& c : expected)
    CHECK(std::find(seen.begin(), seen.end(), c) != seen.end());
}

TEST_CASE("greedy extension picks the highest global degree") {
  // 0-1-2 triangle plus pendant 3-0: from {1, 2} both 0 and nothing else
  // qualify; from {2} the candidates are 0 (degree 3) and 1 (degree 2).
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
  const Graph g("pend", 4, edges);
  Rng rng(1);
  const Chromosome out = extend(g, Bitset::of(4, {2}), ExtendMode::greedy_highest_degree, rng,
                                TieRule::lowest_index);
  CHECK(out == Bitset::of(4, {0, 1, 2}));
}

TEST_CASE("prune") {
  const Graph k20 = complete_graph(20);
  const Chromosome all = Bitset::full(20);
  Rng rng(5);

  SUBCASE("p = 0 is the identity and consumes no randomness") {
    Rng a(123), b(123);
    CHECK(prune(k20, all, 0.0, a) == all);
    CHECK(a.next() == b.next());
  }

  SUBCASE("p = 1 empties the set") {
    CHECK(prune(k20, all, 1.0, rng).none());
  }

  SUBCASE("p outside [0,1] is rejected") {
    CHECK_THROWS_AS(prune(k20, all, -0.1, rng), std::domain_error);
    CHECK_THROWS_AS(prune(k20, all, 1.5, rng), std::domain_error);
  }

  SUBCASE("mean removals follow the binomial expectation") {
    double removed = 0;
    for (int i = 0; i < 10000; ++i)
      removed += 20.0 - static_cast<double>(prune(k20, all, 0.3, rng).count());
    const double mean = removed / 10000.0;
    CHECK(mean > 5.5);
    CHECK(mean < 6.5);
  }
}

TEST_CASE("repair then extend always lands on a maximal clique") {
  const std::vector<Graph> graphs{
      random_gnp("a", 30, 0.2, 1), random_gnp("b", 40, 0.5, 2), random_gnp("c", 50, 0.8, 3),
      keller_graph(3),             star_graph(6),
  };
  Rng rng(2024);
  for (const Graph& g : graphs) {
    for (int i = 0; i < 400; ++i) {
      const Chromosome c = random_chromosome(g.order(), rng);
      const Chromosome repaired = repair(g, c, rng);
      const Chromosome maximal = extend(g, repaired, ExtendMode::stochastic_uniform, rng);
      CHECK(is_maximal_clique(g, maximal));
      CHECK(repaired.is_subset_of(maximal));
      // extend alone from any clique seed must do the same
      const Chromosome from_empty =
          extend(g, Chromosome(static_cast<std::size_t>(g.order())),
                 ExtendMode::greedy_highest_degree, rng);
      CHECK(is_maximal_clique(g, from_empty));
    }
  }
}
