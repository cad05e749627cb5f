#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mcp/kernel.hpp"
#include "mcp/solver.hpp"

namespace mcp {

struct FgaConfig {
  int population_size = 50;   // >= 2 and even (pairing requirement)
  int max_generations = 100;  // >= 1
  std::optional<int> target_size;
  std::uint64_t seed = 0;
  ExtendMode extend_mode = ExtendMode::greedy_highest_degree;
  DegreeRule repair_degree = DegreeRule::induced;
  // Selection ties prefer offspring so plateaus keep introducing new
  // genetic material; pure-random tie-breaking is available for
  // sensitivity checks.
  bool prefer_offspring_on_ties = true;

  void validate() const;  // throws std::invalid_argument

  bool operator==(const FgaConfig&) const = default;
};

/// Offspring exchange the parents' bits wherever the mask is set and copy
/// their own parent elsewhere. All three bit strings must share a length.
std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& p1,
                                                    const Chromosome& p2,
                                                    const Bitset& mask);

/// Crossover with a mask sampled uniformly per bit.
std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& p1,
                                                    const Chromosome& p2, Rng& rng);

/// Reverses the bit segment [i, j]; bits outside are untouched.
Chromosome inversion_mutation(Chromosome c, std::size_t i, std::size_t j);

/// Inversion with both cut points sampled uniformly (then ordered).
Chromosome inversion_mutation(Chromosome c, Rng& rng);

/// Indices of the two fittest among four family members (parents at 0-1,
/// offspring at 2-3). Equal-fitness ties prefer offspring when requested;
/// remaining ties break uniformly at random.
std::pair<int, int> select_two_fittest(const std::array<int, 4>& fitness,
                                       const std::array<bool, 4>& is_offspring, Rng& rng,
                                       bool prefer_offspring);

/// One generation in place: shuffle, pair, crossover, mutate, repair and
/// extend the offspring, then keep the two fittest of each family. Every
/// population member stays a maximal clique. Returns the post-selection
/// snapshot.
GenerationLog evolve_generation(const Graph& g, std::vector<Chromosome>& population,
                                const FgaConfig& cfg, Rng& rng, SearchTracker& tracker,
                                std::int64_t generation_index);

/// Full run: random initial population repaired and extended, then up to
/// max_generations of evolution, stopping early once target_size is
/// reached. When logs is non-null it receives one snapshot per generation,
/// the initial population at index 0.
RunResult run_fga(const Graph& g, const FgaConfig& cfg,
                  std::vector<GenerationLog>* logs = nullptr);

}  // namespace mcp
