#pragma once

#include <cstdint>
#include <optional>

#include "mcp/fga.hpp"
#include "mcp/kernel.hpp"
#include "mcp/solver.hpp"

namespace mcp {

/// How Monte Carlo candidates are seeded before extension to a maximal
/// clique. mixed cycles through the three concrete methods in order.
enum class McMethod { random_bits, edge_seed, vertex_neighborhood, mixed };

/// Budget that matches the paired genetic configuration's chromosome
/// bound, so both solvers face equal budgets in comparisons.
constexpr std::int64_t equal_chromosome_budget(const FgaConfig& f) {
  return static_cast<std::int64_t>(f.population_size) *
         (1 + 2 * static_cast<std::int64_t>(f.max_generations));
}

struct McConfig {
  McMethod method = McMethod::mixed;
  std::int64_t budget = equal_chromosome_budget(FgaConfig{});  // >= 1
  double prune_probability = 0.3;  // applies to random_bits and vertex_neighborhood
  std::optional<int> target_size;
  std::uint64_t seed = 0;
  ExtendMode extend_mode = ExtendMode::stochastic_uniform;
  DegreeRule repair_degree = DegreeRule::induced;

  void validate() const;  // throws std::invalid_argument

  bool operator==(const McConfig&) const = default;
};

/// One candidate, always a maximal clique:
///   random_bits:         coin flip per gene, repair, prune, extend
///   edge_seed:           uniform random edge, extend (no pruning)
///   vertex_neighborhood: a vertex plus its neighbors, repair, prune, extend
/// The method must be concrete (not mixed). edge_seed requires an edge.
Chromosome generate_candidate(const Graph& g, McMethod method, const McConfig& cfg, Rng& rng,
                              TieRule tie = TieRule::uniform_random);

/// Generates candidates independently until the budget is exhausted or
/// target_size is reached; no candidate influences any other. Optional logs
/// receive one record per candidate with generation = candidate index.
RunResult run_mc(const Graph& g, const McConfig& cfg,
                 std::vector<GenerationLog>* logs = nullptr);

}  // namespace mcp
