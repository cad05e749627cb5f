// Command line entry point: solve, bench, oracle, analyze, parse-check.
// Results go to stdout (byte-stable given identical arguments and seed);
// timing and progress go to stderr.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "mcp/bench.hpp"
#include "mcp/dimacs.hpp"
#include "mcp/fga.hpp"
#include "mcp/mc.hpp"
#include "mcp/oracle.hpp"
#include "mcp/trajectory.hpp"

namespace {

using namespace mcp;

void print_clique(std::ostream& out, int size, const std::vector<int>& clique) {
  out << size << "\n";
  for (std::size_t i = 0; i < clique.size(); ++i) out << (i ? " " : "") << clique[i];
  out << "\n";
}

Graph load_graph(const std::string& path) {
  std::vector<std::string> warnings;
  Graph g = load_dimacs_file(path, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return g;
}

ExtendMode parse_extend(const std::string& s) {
  if (s == "greedy") return ExtendMode::greedy_highest_degree;
  if (s == "stochastic") return ExtendMode::stochastic_uniform;
  throw CLI::ValidationError("--extend must be greedy or stochastic");
}

McMethod parse_method(const std::string& s) {
  if (s == "random") return McMethod::random_bits;
  if (s == "edge") return McMethod::edge_seed;
  if (s == "neighborhood") return McMethod::vertex_neighborhood;
  if (s == "mixed") return McMethod::mixed;
  throw CLI::ValidationError("--method must be random, edge, neighborhood or mixed");
}

struct SolveArgs {
  std::string graph;
  std::string algo;
  std::uint64_t seed = 1;
  int pop = 50;
  int gens = 100;
  std::int64_t budget = 0;  // 0 = equal budget of the paired FGA flags
  std::string method = "mixed";
  double prune = 0.3;
  int target = 0;  // 0 = none
  std::string log_file;
  std::string extend_mode;  // empty = per-algorithm default
  std::string repair_degree = "induced";
};

int run_solve(const SolveArgs& a) {
  const Graph g = load_graph(a.graph);
  std::vector<GenerationLog> logs;
  std::vector<GenerationLog>* logsp = a.log_file.empty() ? nullptr : &logs;
  const DegreeRule degree =
      a.repair_degree == "global" ? DegreeRule::global : DegreeRule::induced;

  RunResult r;
  if (a.algo == "fga") {
    FgaConfig cfg;
    cfg.population_size = a.pop;
    cfg.max_generations = a.gens;
    cfg.seed = a.seed;
    if (a.target > 0) cfg.target_size = a.target;
    if (!a.extend_mode.empty()) cfg.extend_mode = parse_extend(a.extend_mode);
    cfg.repair_degree = degree;
    r = run_fga(g, cfg, logsp);
    std::cerr << "generations: " << r.iterations << "\n";
  } else {
    McConfig cfg;
    FgaConfig paired;
    paired.population_size = a.pop;
    paired.max_generations = a.gens;
    cfg.budget = a.budget > 0 ? a.budget : equal_chromosome_budget(paired);
    cfg.method = parse_method(a.method);
    cfg.prune_probability = a.prune;
    cfg.seed = a.seed;
    if (a.target > 0) cfg.target_size = a.target;
    if (!a.extend_mode.empty()) cfg.extend_mode = parse_extend(a.extend_mode);
    cfg.repair_degree = degree;
    r = run_mc(g, cfg, logsp);
    std::cerr << "candidates: " << r.iterations << "\n";
  }

  if (logsp) {
    std::ofstream out(a.log_file);
    if (!out) throw std::runtime_error("cannot write " + a.log_file);
    write_log(out, logs);
  }
  print_clique(std::cout, r.best_size, r.best_clique);
  std::cerr << "chromosomes: " << r.chromosomes_generated
            << " (to best: " << r.chromosomes_to_best << ")\n"
            << "time: " << r.wall_ms << " ms\n";
  return 0;
}

int run_oracle(const std::string& path, int max_vertices, int time_budget_ms) {
  const Graph g = load_graph(path);
  OracleLimits limits;
  limits.max_vertices = max_vertices;
  limits.time_budget = std::chrono::milliseconds(time_budget_ms);
  const MaxCliqueResult r = max_clique_exact(g, limits);
  print_clique(std::cout, r.size, to_one_based(r.members));
  return 0;
}

int run_parse_check(const std::string& path) {
  const Graph g = load_graph(path);
  std::cout << g.name() << " " << g.order() << " " << g.edge_count() << " ";
  if (g.order() >= 2) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", density(g));
    std::cout << buf << "\n";
  } else {
    std::cout << "-\n";
  }
  return 0;
}

int run_analyze(const std::string& log_path, const std::string& out_path) {
  std::ifstream in(log_path);
  if (!in) throw std::runtime_error("cannot open " + log_path);
  const auto records = read_log(in);
  const auto best = best_member_of_log(records);
  const Trajectory t = node_frequency_trajectory(records, best);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  write_trajectory_csv(t, out);
  std::cout << "generations=" << t.counts.size() << " nodes=" << t.nodes.size()
            << " best_size=" << best.size() << " population_size=" << t.population_size << "\n";
  return 0;
}

int run_bench(const std::string& spec_path, const std::string& out_dir, int workers) {
  std::ifstream in(spec_path);
  if (!in) throw std::runtime_error("cannot open " + spec_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  ExperimentSpec spec = ExperimentSpec::from_json_text(buffer.str());

  if (workers > 0) {
    spec.workers = workers;
  } else if (const char* env = std::getenv("MAXCLIQUE_WORKERS")) {
    spec.workers = std::max(1, std::atoi(env));
  }

  const Report report = run_experiment(spec);

  std::filesystem::create_directories(out_dir);
  const auto out = std::filesystem::path(out_dir);
  std::ofstream(out / "report.csv") << report_to_csv(report);
  std::ofstream(out / "report.json") << report_to_json(report);
  const std::string comparison = comparison_to_text(compare_reference(report));
  std::ofstream(out / "comparison.txt") << comparison;
  std::cout << comparison;

  int failed_cells = 0;
  for (const auto& cell : report.cells) failed_cells += cell.failed;
  if (failed_cells)
    std::cerr << failed_cells << " cell(s) failed (unreadable graphs); see report\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum clique approximation toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run one heuristic solver on one graph");
  solve->add_option("--graph", solve_args.graph, "DIMACS clique file")->required();
  solve->add_option("--algo", solve_args.algo, "fga or mc")
      ->required()
      ->check(CLI::IsMember({"fga", "mc"}));
  solve->add_option("--seed", solve_args.seed, "rng seed");
  solve->add_option("--pop", solve_args.pop, "FGA population size");
  solve->add_option("--gens", solve_args.gens, "FGA generation limit");
  solve->add_option("--budget", solve_args.budget, "MC chromosome budget (default: equal to FGA)");
  solve->add_option("--method", solve_args.method, "MC method: random|edge|neighborhood|mixed");
  solve->add_option("--prune", solve_args.prune, "MC pruning probability");
  solve->add_option("--target", solve_args.target, "stop once a clique of this size is found");
  solve->add_option("--log", solve_args.log_file, "write generation/candidate log");
  solve->add_option("--extend", solve_args.extend_mode, "extension rule: greedy|stochastic");
  solve->add_option("--repair-degree", solve_args.repair_degree, "repair degree rule: induced|global")
      ->check(CLI::IsMember({"induced", "global"}));

  std::string oracle_file;
  int oracle_cap = 40;
  int oracle_budget_ms = 60000;
  auto* oracle = app.add_subcommand("oracle", "exact maximum clique for small graphs");
  oracle->add_option("file", oracle_file, "DIMACS clique file")->required();
  oracle->add_option("--max-vertices", oracle_cap, "refuse graphs larger than this");
  oracle->add_option("--time-budget-ms", oracle_budget_ms, "abort after this long");

  std::string check_file;
  auto* check = app.add_subcommand("parse-check", "validate a DIMACS file and print its properties");
  check->add_option("file", check_file, "DIMACS clique file")->required();

  std::string analyze_log, analyze_out;
  auto* analyze = app.add_subcommand("analyze", "best-chromosome node frequency per generation");
  analyze->add_option("--log", analyze_log, "generation log file")->required();
  analyze->add_option("--out", analyze_out, "output CSV path")->required();

  std::string bench_spec, bench_out;
  int bench_workers = 0;
  auto* bench = app.add_subcommand("bench", "run a benchmark experiment from a spec file");
  bench->add_option("--spec", bench_spec, "experiment spec (JSON)")->required();
  bench->add_option("--out", bench_out, "output directory")->required();
  bench->add_option("--workers", bench_workers,
                    "parallel workers (default: MAXCLIQUE_WORKERS or spec value)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*oracle) return run_oracle(oracle_file, oracle_cap, oracle_budget_ms);
    if (*check) return run_parse_check(check_file);
    if (*analyze) return run_analyze(analyze_log, analyze_out);
    if (*bench) return run_bench(bench_spec, bench_out, bench_workers);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
