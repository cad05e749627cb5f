#pragma once

// Test-only brute force oracles. These stay independent of the library's
// exact solver and clique predicates so the two routes can cross-check
// each other. Feasible up to n = 20 or so.

#include <bit>
#include <cstdint>
#include <vector>

#include "mcp/bitset.hpp"
#include "mcp/graph.hpp"

namespace testsupport {

inline std::vector<std::uint64_t> adjacency_masks(const mcp::Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  return adj;
}

// Pairwise definition of a clique, written without the degree-sum identity
// the library uses.
inline bool pairwise_clique(const mcp::Graph& g, const mcp::Bitset& s) {
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.adjacent(members[i], members[j])) return false;
  return true;
}

// Exhaustive maximum clique over all 2^n vertex subsets.
inline mcp::Bitset exhaustive_max_clique(const mcp::Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  std::vector<char> clique(std::size_t{1} << n, 0);
  clique[0] = 1;
  std::uint64_t best_mask = 0;
  int best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    clique[mask] = clique[rest] && (rest & ~adj[static_cast<std::size_t>(v)]) == 0;
    if (clique[mask] && std::popcount(mask) > best) {
      best = std::popcount(mask);
      best_mask = mask;
    }
  }
  mcp::Bitset out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1) out.set(static_cast<std::size_t>(v));
  return out;
}

// Every maximal clique, by checking each subset against the definitions.
inline std::vector<mcp::Bitset> exhaustive_maximal_cliques(const mcp::Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  std::vector<char> clique(std::size_t{1} << n, 0);
  clique[0] = 1;
  std::vector<mcp::Bitset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    clique[mask] = clique[rest] && (rest & ~adj[static_cast<std::size_t>(v)]) == 0;
    if (!clique[mask]) continue;
    bool extendable = false;
    for (int w = 0; w < n && !extendable; ++w)
      extendable = !(mask >> w & 1) && (mask & ~adj[static_cast<std::size_t>(w)]) == 0;
    if (extendable) continue;
    mcp::Bitset b(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w)
      if (mask >> w & 1) b.set(static_cast<std::size_t>(w));
    out.push_back(std::move(b));
  }
  return out;
}

// Maximal cliques containing every vertex of `seed`.
inline std::vector<mcp::Bitset> maximal_cliques_containing(const mcp::Graph& g,
                                                           const mcp::Bitset& seed) {
  std::vector<mcp::Bitset> out;
  for (auto& c : exhaustive_maximal_cliques(g))
    if (seed.is_subset_of(c)) out.push_back(std::move(c));
  return out;
}

}  // namespace testsupport
