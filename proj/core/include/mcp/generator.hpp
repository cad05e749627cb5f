#pragma once

#include <cstdint>
#include <string>

#include "mcp/graph.hpp"

namespace mcp {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Star with one center (vertex 0) and `leaves` leaves.
Graph star_graph(int leaves);

/// Erdos-Renyi G(n, p), each pair present independently with probability p.
Graph random_gnp(const std::string& name, int n, double p, std::uint64_t seed);

/// G(n, p) with an additional clique forced on `planted` randomly chosen
/// vertices, so the maximum clique is at least `planted`.
Graph random_gnp_planted(const std::string& name, int n, double p, int planted,
                         std::uint64_t seed);

/// Vertices are the 2^bits binary words; words are adjacent iff their
/// Hamming distance is at least min_distance. hamming_graph(8, 4) is the
/// benchmark instance hamming8-4 (256 vertices, 20864 edges).
Graph hamming_graph(int bits, int min_distance);

/// The benchmark keller<d> instance: the subgraph of the Keller graph on
/// {0,1,2,3}^d induced by the neighborhood of the all-zero vertex. Two
/// tuples are adjacent iff they differ in at least two coordinates and in
/// some coordinate by exactly 2 (mod 4). keller_graph(4) has 171 vertices
/// and 9435 edges.
Graph keller_graph(int dimension);

}  // namespace mcp
