#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcp/fga.hpp"
#include "mcp/mc.hpp"
#include "mcp/reference.hpp"
#include "mcp/solver.hpp"

namespace mcp {

/// One solver under test. The config's own seed field is ignored by the
/// harness, which derives per-run seeds as base_seed + run_index so every
/// cell is independently reproducible.
struct AlgorithmSpec {
  std::string id;
  std::variant<FgaConfig, McConfig> config;

  bool is_fga() const { return std::holds_alternative<FgaConfig>(config); }
  std::string kind() const { return is_fga() ? "fga" : "mc"; }

  bool operator==(const AlgorithmSpec&) const = default;
};

struct ExperimentSpec {
  std::vector<std::string> graphs;  // DIMACS file paths
  std::vector<AlgorithmSpec> algorithms;
  int runs = 3;
  std::uint64_t base_seed = 1;
  int workers = 1;

  void validate() const;  // throws std::invalid_argument

  /// Reads the structured spec file. Missing keys take defaults; a Monte
  /// Carlo entry without a budget gets the equal-chromosome budget of the
  /// first genetic entry (or of the default genetic config).
  static ExperimentSpec from_json_text(const std::string& text);
  std::string to_json_text() const;

  bool operator==(const ExperimentSpec&) const = default;
};

/// One (graph, algorithm) cell: per-run results plus the aggregates used
/// for comparison - max size over runs and the arithmetic mean of
/// chromosomes-to-best, rounded to integer.
struct CellResult {
  std::string graph_file;
  std::string graph_name;
  int vertices = 0;
  std::int64_t edges = 0;
  double graph_density = 0.0;
  std::string algorithm_id;
  std::string algorithm_kind;
  bool failed = false;
  std::string error;
  std::vector<RunResult> runs;
  int max_size = 0;
  std::int64_t mean_chromosomes_to_best = 0;
  bool referenced = false;
  int best_known = 0;           // 0 when unreferenced
  int delta_vs_best_known = 0;  // max_size - best_known

  bool operator==(const CellResult&) const = default;
};

struct Report {
  ExperimentSpec spec;
  std::vector<CellResult> cells;

  bool operator==(const Report&) const = default;

  /// Equality ignoring per-run wall times.
  bool same_outcome(const Report& o) const;
};

/// Max over runs and rounded mean of chromosomes-to-best, as reported in
/// the reference tables' integer columns.
void aggregate_cell(CellResult& cell);

/// Executes every (graph, algorithm, run) cell, fanning (cell, run) tasks
/// across `workers` threads; results merge in a fixed order so output is
/// independent of scheduling. An unreadable graph fails its cells and the
/// experiment continues; a best clique that fails re-verification against
/// the loaded graph aborts with std::logic_error.
Report run_experiment(const ExperimentSpec& spec);

/// One row per cell: graph, n, m, density, algorithm, max, mean
/// chromosomes, best-known, delta. Byte-stable given an identical report.
std::string report_to_csv(const Report& r);

/// Full per-run detail including witnesses and seeds; parses back to an
/// equal Report.
std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);

/// Dispatch on format id: "csv" or "json". Unknown ids are rejected.
std::string emit_report(const Report& r, std::string_view format);

enum class Outcome { fga_wins, mc_wins, tie, single_solver };

struct GraphComparison {
  std::string graph_name;
  bool referenced = false;
  bool source_conflict = false;  // reference tables disagree on this row
  int best_known = 0;
  std::optional<int> fga_max, mc_max;
  std::optional<std::int64_t> fga_chromosomes, mc_chromosomes;
  Outcome size_outcome = Outcome::single_solver;
  Outcome speed_outcome = Outcome::single_solver;  // fewer chromosomes-to-best
};

struct ReferenceComparison {
  std::vector<GraphComparison> graphs;
  int fga_larger = 0, mc_larger = 0, size_ties = 0;
  int fga_fewer_chromosomes = 0, mc_fewer_chromosomes = 0;
  int matches_best_known = 0, below_best_known = 0, above_best_known = 0;
  std::vector<std::string> unreferenced;
};

/// Classifies every graph of the report against the embedded reference
/// table, mirroring the reference experiment's color-coded analysis.
ReferenceComparison compare_reference(const Report& r);

std::string comparison_to_text(const ReferenceComparison& c);

}  // namespace mcp
