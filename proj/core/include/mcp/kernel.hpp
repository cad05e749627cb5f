#pragma once

#include "mcp/bitset.hpp"
#include "mcp/graph.hpp"
#include "mcp/rng.hpp"

namespace mcp {

/// One bit per graph vertex; the set bits encode a subgraph. Solver
/// populations hold chromosomes that are always maximal cliques.
using Chromosome = Bitset;

/// How extension picks among the vertices adjacent to every member.
enum class ExtendMode {
  greedy_highest_degree,  // maximum global degree, ties broken per TieRule
  stochastic_uniform,     // uniform among candidates
};

/// Tie-breaking for repair removals and greedy extension. Search uses
/// uniform_random; lowest_index exists so tests can pin exact traces.
enum class TieRule { uniform_random, lowest_index };

/// Which degree drives repair removals. The encoded set is a subgraph, so
/// induced degree is the default; global degree is exposed for comparison.
enum class DegreeRule { induced, global };

/// Each bit independently 1 with probability 1/2. n >= 1.
Chromosome random_chromosome(int n, Rng& rng);

/// Popcount if the encoded set is a clique, else 0.
int fitness(const Graph& g, const Chromosome& c);

/// Removes the minimum-degree member until the encoded set is a clique.
/// The result is a subset of the input. Always terminates.
Chromosome repair(const Graph& g, Chromosome c, Rng& rng,
                  TieRule tie = TieRule::uniform_random,
                  DegreeRule degree = DegreeRule::induced);

/// Adds vertices adjacent to every member until none remains. Requires the
/// input to be a clique; the result is a maximal clique and a superset.
Chromosome extend(const Graph& g, Chromosome c, ExtendMode mode, Rng& rng,
                  TieRule tie = TieRule::uniform_random);

/// Drops each member independently with probability p. Requires a clique
/// input and p in [0,1]; the result, a subset of a clique, stays a clique.
Chromosome prune(const Graph& g, Chromosome c, double p, Rng& rng);

}  // namespace mcp
