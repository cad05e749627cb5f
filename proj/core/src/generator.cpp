#include "mcp/generator.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "mcp/rng.hpp"

namespace mcp {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

}  // namespace

Graph complete_graph(int n) {
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph("K" + std::to_string(n), n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  EdgeList edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph("C" + std::to_string(n), n, edges);
}

Graph path_graph(int n) {
  EdgeList edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph("P" + std::to_string(n), n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  EdgeList edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph("S" + std::to_string(leaves), leaves + 1, edges);
}

Graph random_gnp(const std::string& name, int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0,1]");
  Rng rng(seed);
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(name, n, edges);
}

Graph random_gnp_planted(const std::string& name, int n, double p, int planted,
                         std::uint64_t seed) {
  if (planted < 0 || planted > n) throw std::invalid_argument("planted clique size out of range");
  Rng rng(seed);
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  for (int i = 0; i < planted; ++i)
    for (int j = i + 1; j < planted; ++j)
      edges.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return Graph(name, n, edges);
}

Graph hamming_graph(int bits, int min_distance) {
  if (bits < 1 || bits > 20) throw std::invalid_argument("hamming bits out of range");
  const int n = 1 << bits;
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::popcount(static_cast<unsigned>(u ^ v)) >= min_distance)
        edges.emplace_back(u, v);
  return Graph("hamming" + std::to_string(bits) + "-" + std::to_string(min_distance), n, edges);
}

Graph keller_graph(int dimension) {
  if (dimension < 2 || dimension > 7) throw std::invalid_argument("keller dimension out of range");
  // Tuples in {0,1,2,3}^d with some coordinate equal to 2 and at least two
  // nonzero coordinates: exactly the neighbors of the all-zero tuple.
  std::vector<std::vector<int>> verts;
  std::vector<int> t(static_cast<std::size_t>(dimension), 0);
  while (true) {
    int twos = 0, nonzero = 0;
    for (int x : t) {
      if (x == 2) ++twos;
      if (x != 0) ++nonzero;
    }
    if (twos >= 1 && nonzero >= 2) verts.push_back(t);
    int i = dimension - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == 3) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  const int n = static_cast<int>(verts.size());
  EdgeList edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int diff = 0;
      bool two_apart = false;
      for (int i = 0; i < dimension; ++i) {
        const int x = verts[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
        const int y = verts[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
        if (x != y) {
          ++diff;
          if ((x - y + 4) % 4 == 2) two_apart = true;
        }
      }
      if (diff >= 2 && two_apart) edges.emplace_back(a, b);
    }
  }
  return Graph("keller" + std::to_string(dimension), n, edges);
}

}  // namespace mcp
