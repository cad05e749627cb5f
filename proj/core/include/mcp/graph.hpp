#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcp/bitset.hpp"

namespace mcp {

/// Immutable undirected simple graph with one adjacency bitset per vertex.
/// Vertices are 0-indexed internally; 1-based DIMACS ids appear only at the
/// I/O boundary. Immutability makes concurrent reads safe without locking.
class Graph {
 public:
  /// Builds a graph from 0-based endpoint pairs. Duplicate pairs and both
  /// orientations collapse to one edge. Self-loops and out-of-range
  /// endpoints are rejected.
  Graph(std::string name, int n, std::span<const std::pair<int, int>> edges);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }

  /// All edges as 0-based pairs (u < v), sorted. Mainly for serialization.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::string name_;
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> degree_;
};

/// 2m / (n(n-1)). Requires n >= 2.
double density(const Graph& g);

/// True iff every pair of distinct members of s is adjacent. The empty set
/// and singletons are cliques. s must span exactly the graph's vertices.
bool is_clique(const Graph& g, const Bitset& s);

/// True iff s is a clique and no outside vertex is adjacent to all of s.
bool is_maximal_clique(const Graph& g, const Bitset& s);

/// Degree of v inside the subgraph induced by s. Requires v in s.
int induced_degree(const Graph& g, const Bitset& s, int v);

/// Builds a vertex set from 0-based ids, validating range.
Bitset make_vertex_set(const Graph& g, std::span<const int> vertices);

/// 1-based ascending vertex list, the external form of a clique.
std::vector<int> to_one_based(const Bitset& s);

}  // namespace mcp
