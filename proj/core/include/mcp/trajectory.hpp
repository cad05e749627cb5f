#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "mcp/solver.hpp"

namespace mcp {

/// Per-generation counts of how many population members contain each node
/// of the best chromosome. Counts are raw (not normalized); population_size
/// is carried so either normalization can be derived downstream.
struct Trajectory {
  std::vector<int> nodes;                  // best-chromosome vertices, 1-based ascending
  std::vector<std::int64_t> generations;   // generation index per row
  std::vector<std::vector<int>> counts;    // [generation][node], in [0, population_size]
  std::vector<double> mean_frequency;      // row means
  int population_size = 0;

  bool operator==(const Trajectory&) const = default;
};

/// Counts, per generation, the population members containing each node of
/// `best`. Requires non-empty logs and a non-empty best set.
Trajectory node_frequency_trajectory(std::span<const GenerationLog> logs, const Bitset& best);

/// Same over file-form records with a 1-based best vertex list.
Trajectory node_frequency_trajectory(std::span<const LogRecord> records,
                                     const std::vector<int>& best_one_based);

/// The run's best chromosome as recorded in a log: the first member of
/// maximum size, 1-based. Empty input yields an empty list.
std::vector<int> best_member_of_log(std::span<const LogRecord> records);

/// CSV with columns generation,node,count followed by a summary series of
/// rows generation,mean,<value>.
void write_trajectory_csv(const Trajectory& t, std::ostream& out);

}  // namespace mcp
