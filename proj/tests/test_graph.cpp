#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "mcp/dimacs.hpp"
#include "mcp/generator.hpp"
#include "mcp/graph.hpp"
#include "mcp/rng.hpp"
#include "support/reference_oracle.hpp"

using namespace mcp;

namespace {

Graph parse(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  return parse_dimacs(in, "test", warnings);
}

bool same_structure(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && a.edges() == b.edges();
}

}  // namespace

TEST_CASE("triangle parses with re-indexed vertices") {
  const Graph g = parse("c smallest complete graph\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);
  for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
}

TEST_CASE("duplicate orientations collapse with a warning") {
  std::vector<std::string> warnings;
  const Graph g = parse("p edge 2 2\ne 1 2\ne 2 1\n", &warnings);
  CHECK(g.edge_count() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("2 edges") != std::string::npos);
  CHECK(warnings[0].find("1 distinct") != std::string::npos);
}

TEST_CASE("declared edge count is advisory") {
  std::vector<std::string> warnings;
  const Graph g = parse("p edge 3 5\ne 1 2\ne 2 3\n", &warnings);
  CHECK(g.edge_count() == 2);
  CHECK(warnings.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse("c only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse("p edge 2 1\np edge 2 1\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("e 1 2\np edge 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 1 x\n"), ParseError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 2 2\n"), ParseError);
  CHECK_THROWS_AS(parse("p edge 3 1\ne 1 2 7\n"), ParseError);
  CHECK_THROWS_AS(parse("p node 3 1\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("q edge 3 1\n"), ParseError);

  try {
    parse("p edge 3 3\ne 1 2\ne 1 9\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("windows line endings are accepted") {
  const Graph g = parse("p edge 2 1\r\ne 1 2\r\n");
  CHECK(g.edge_count() == 1);
}

TEST_CASE("density") {
  CHECK(density(complete_graph(4)) == doctest::Approx(1.0));
  CHECK(density(complete_graph(9)) == doctest::Approx(1.0));
  CHECK(density(path_graph(3)) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(density(Graph("k1", 1, {})), std::domain_error);

  // printed values of well-known instances, to 3 decimal places
  auto round3 = [](double d) { return std::llround(d * 1000.0); };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 125 && std::ssize(edges) < 6963; ++u)
    for (int v = u + 1; v < 125 && std::ssize(edges) < 6963; ++v) edges.emplace_back(u, v);
  CHECK(round3(density(Graph("c125ish", 125, edges))) == 898);

  edges.clear();
  for (int u = 0; u < 300 && std::ssize(edges) < 10933; ++u)
    for (int v = u + 1; v < 300 && std::ssize(edges) < 10933; ++v) edges.emplace_back(u, v);
  CHECK(round3(density(Graph("phat300ish", 300, edges))) == 244);
}

TEST_CASE("is_clique") {
  const Graph tri = complete_graph(3);
  CHECK(is_clique(tri, Bitset(3)));                 // empty set
  CHECK(is_clique(tri, Bitset::of(3, {1})));        // singleton
  CHECK(is_clique(tri, Bitset::of(3, {0, 1, 2})));  // whole triangle

  const Graph path = path_graph(3);
  CHECK_FALSE(is_clique(path, Bitset::of(3, {0, 2})));
  CHECK(is_clique(path, Bitset::of(3, {0, 1})));

  CHECK_THROWS_AS(is_clique(tri, Bitset(5)), std::domain_error);
}

TEST_CASE("is_maximal_clique") {
  const Graph k4 = complete_graph(4);
  CHECK(is_maximal_clique(k4, Bitset::full(4)));
  CHECK_FALSE(is_maximal_clique(k4, Bitset::of(4, {0, 1})));

  const Graph k2 = complete_graph(2);
  CHECK_FALSE(is_maximal_clique(k2, Bitset::of(2, {0})));  // the other endpoint extends it
  CHECK_FALSE(is_maximal_clique(k2, Bitset(2)));           // empty set is never maximal here
}

TEST_CASE("induced_degree") {
  const Graph path = path_graph(3);
  const Bitset all = Bitset::full(3);
  CHECK(induced_degree(path, all, 1) == 2);
  CHECK(induced_degree(path, all, 0) == 1);
  CHECK(induced_degree(path, Bitset::of(3, {1}), 1) == 0);  // no self-loops
  CHECK_THROWS_AS(induced_degree(path, Bitset::of(3, {0, 1}), 2), std::domain_error);
}

TEST_CASE("clique iff every member has induced degree k-1") {
  const Graph g = random_gnp("g20", 20, 0.5, 42);
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Bitset s(20);
    for (std::size_t i = 0; i < 20; ++i)
      if (rng.bernoulli(0.4)) s.set(i);
    const auto k = s.count();
    bool all_full_degree = true;
    s.for_each([&](int v) {
      if (static_cast<std::size_t>(induced_degree(g, s, v)) != k - 1) all_full_degree = false;
    });
    CHECK(is_clique(g, s) == all_full_degree);
    CHECK(is_clique(g, s) == testsupport::pairwise_clique(g, s));
  }
}

TEST_CASE("loaded graphs are symmetric and loop-free") {
  for (const Graph& g : {random_gnp("a", 30, 0.3, 1), keller_graph(4), hamming_graph(8, 4)}) {
    std::int64_t degree_sum = 0;
    for (int u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      degree_sum += g.degree(u);
      for (int v = g.neighbors(u).find_first(); v != -1; v = g.neighbors(u).find_next(v))
        CHECK(g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(density(g) >= 0.0);
    CHECK(density(g) <= 1.0);
  }
}

TEST_CASE("parsing is idempotent under edge reordering") {
  const Graph g = random_gnp("perm", 30, 0.3, 99);
  std::ostringstream out;
  write_dimacs(g, out);
  const Graph reparsed = parse(out.str());
  CHECK(same_structure(g, reparsed));

  // shuffle the edge lines
  std::istringstream in(out.str());
  std::string line, header;
  std::vector<std::string> edge_lines;
  while (std::getline(in, line)) {
    if (line.starts_with("e ")) edge_lines.push_back(line);
    else if (line.starts_with("p ")) header = line;
  }
  Rng rng(3);
  rng.shuffle(edge_lines);
  std::string shuffled = header + "\n";
  for (const auto& e : edge_lines) shuffled += e + "\n";
  CHECK(same_structure(g, parse(shuffled)));
}

TEST_CASE("self-loops rejected when building graphs directly") {
  std::vector<std::pair<int, int>> edges{{0, 0}};
  CHECK_THROWS_AS(Graph("bad", 2, edges), std::invalid_argument);
  std::vector<std::pair<int, int>> oob{{0, 5}};
  CHECK_THROWS_AS(Graph("bad", 2, oob), std::invalid_argument);
  CHECK_THROWS_AS(Graph("empty", 0, {}), std::invalid_argument);
}

TEST_CASE("deterministic reconstructions match published instance sizes") {
  const Graph k4g = keller_graph(4);
  CHECK(k4g.order() == 171);
  CHECK(k4g.edge_count() == 9435);
  const Graph k5g = keller_graph(5);
  CHECK(k5g.order() == 776);
  CHECK(k5g.edge_count() == 225990);
  const Graph h84 = hamming_graph(8, 4);
  CHECK(h84.order() == 256);
  CHECK(h84.edge_count() == 20864);
  const Graph h104 = hamming_graph(10, 4);
  CHECK(h104.order() == 1024);
  CHECK(h104.edge_count() == 434176);
}
