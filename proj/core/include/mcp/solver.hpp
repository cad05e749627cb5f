#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mcp/bitset.hpp"
#include "mcp/graph.hpp"

namespace mcp {

/// Outcome of one solver execution. Everything except wall_ms is a pure
/// function of (graph, config, seed).
struct RunResult {
  std::string graph;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<int> best_clique;  // 1-based ids, ascending
  int best_size = 0;
  std::int64_t chromosomes_generated = 0;
  std::int64_t chromosomes_to_best = 0;
  std::int64_t iterations = 0;  // generations (FGA) or candidates (MC)
  double wall_ms = 0.0;

  /// Field-wise equality ignoring wall time.
  bool same_outcome(const RunResult& o) const {
    return graph == o.graph && algorithm == o.algorithm && seed == o.seed &&
           best_clique == o.best_clique && best_size == o.best_size &&
           chromosomes_generated == o.chromosomes_generated &&
           chromosomes_to_best == o.chromosomes_to_best && iterations == o.iterations;
  }

  bool operator==(const RunResult&) const = default;
};

/// Snapshot of one generation: the post-selection population plus running
/// counters. Entry 0 is the initial population. For the Monte Carlo solver
/// each "generation" is a single candidate.
struct GenerationLog {
  std::int64_t generation = 0;
  std::vector<Bitset> population;
  int best_fitness = 0;                    // best over everything generated so far
  std::int64_t chromosomes_generated = 0;  // cumulative
};

/// Best-so-far bookkeeping shared by the solvers. A chromosome counts as
/// generated when its fitness is evaluated, including the initial
/// population, so both solvers report comparable chromosome counts.
struct SearchTracker {
  std::int64_t generated = 0;
  int best_fitness = -1;
  Bitset best;
  std::int64_t to_best = 0;

  void record(const Bitset& c, int fit) {
    ++generated;
    if (fit > best_fitness) {
      best_fitness = fit;
      best = c;
      to_best = generated;
    }
  }
};

/// File form of a generation log, newline-delimited: a "g <index>" line per
/// record followed by one line per member listing its 1-based vertices.
void write_log(std::ostream& out, std::span<const GenerationLog> logs);

struct LogRecord {
  std::int64_t generation = 0;
  std::vector<std::vector<int>> members;  // 1-based vertex lists
};

std::vector<LogRecord> read_log(std::istream& in);

/// In-memory logs to the file record form (1-based).
std::vector<LogRecord> to_records(std::span<const GenerationLog> logs);

}  // namespace mcp
