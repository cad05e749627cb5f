#include "mcp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "mcp/dimacs.hpp"

namespace mcp {

using json = nlohmann::ordered_json;

void ExperimentSpec::validate() const {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (algorithms.empty()) throw std::invalid_argument("at least one algorithm required");
  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    if (algorithms[i].id.empty()) throw std::invalid_argument("algorithm id must not be empty");
    for (std::size_t j = i + 1; j < algorithms.size(); ++j)
      if (algorithms[i].id == algorithms[j].id)
        throw std::invalid_argument("duplicate algorithm id: " + algorithms[i].id);
    if (algorithms[i].is_fga())
      std::get<FgaConfig>(algorithms[i].config).validate();
    else
      std::get<McConfig>(algorithms[i].config).validate();
  }
}

namespace {

std::string extend_name(ExtendMode m) {
  return m == ExtendMode::greedy_highest_degree ? "greedy" : "stochastic";
}
ExtendMode extend_from(const std::string& s) {
  if (s == "greedy") return ExtendMode::greedy_highest_degree;
  if (s == "stochastic") return ExtendMode::stochastic_uniform;
  throw std::invalid_argument("unknown extend mode: " + s);
}
std::string degree_name(DegreeRule d) { return d == DegreeRule::induced ? "induced" : "global"; }
DegreeRule degree_from(const std::string& s) {
  if (s == "induced") return DegreeRule::induced;
  if (s == "global") return DegreeRule::global;
  throw std::invalid_argument("unknown repair degree rule: " + s);
}
std::string method_name(McMethod m) {
  switch (m) {
    case McMethod::random_bits: return "random";
    case McMethod::edge_seed: return "edge";
    case McMethod::vertex_neighborhood: return "neighborhood";
    case McMethod::mixed: return "mixed";
  }
  return "mixed";
}
McMethod method_from(const std::string& s) {
  if (s == "random") return McMethod::random_bits;
  if (s == "edge") return McMethod::edge_seed;
  if (s == "neighborhood") return McMethod::vertex_neighborhood;
  if (s == "mixed") return McMethod::mixed;
  throw std::invalid_argument("unknown mc method: " + s);
}

json target_to_json(const std::optional<int>& t) { return t ? json(*t) : json(nullptr); }
std::optional<int> target_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

json algorithm_to_json(const AlgorithmSpec& a) {
  json j;
  j["id"] = a.id;
  if (a.is_fga()) {
    const auto& f = std::get<FgaConfig>(a.config);
    j["algo"] = "fga";
    j["population"] = f.population_size;
    j["generations"] = f.max_generations;
    j["target"] = target_to_json(f.target_size);
    j["extend"] = extend_name(f.extend_mode);
    j["repair_degree"] = degree_name(f.repair_degree);
    j["prefer_offspring_ties"] = f.prefer_offspring_on_ties;
    j["seed"] = f.seed;
  } else {
    const auto& m = std::get<McConfig>(a.config);
    j["algo"] = "mc";
    j["method"] = method_name(m.method);
    j["budget"] = m.budget;
    j["prune"] = m.prune_probability;
    j["target"] = target_to_json(m.target_size);
    j["extend"] = extend_name(m.extend_mode);
    j["repair_degree"] = degree_name(m.repair_degree);
    j["seed"] = m.seed;
  }
  return j;
}

AlgorithmSpec algorithm_from_json(const json& j, const FgaConfig& paired_fga) {
  AlgorithmSpec a;
  const std::string kind = j.at("algo").get<std::string>();
  a.id = j.value("id", kind);
  if (kind == "fga") {
    FgaConfig f;
    f.population_size = j.value("population", f.population_size);
    f.max_generations = j.value("generations", f.max_generations);
    if (j.contains("target")) f.target_size = target_from_json(j.at("target"));
    f.extend_mode = extend_from(j.value("extend", "greedy"));
    f.repair_degree = degree_from(j.value("repair_degree", "induced"));
    f.prefer_offspring_on_ties = j.value("prefer_offspring_ties", true);
    f.seed = j.value("seed", std::uint64_t{0});
    a.config = f;
  } else if (kind == "mc") {
    McConfig m;
    m.method = method_from(j.value("method", "mixed"));
    m.budget = j.value("budget", equal_chromosome_budget(paired_fga));
    m.prune_probability = j.value("prune", m.prune_probability);
    if (j.contains("target")) m.target_size = target_from_json(j.at("target"));
    m.extend_mode = extend_from(j.value("extend", "stochastic"));
    m.repair_degree = degree_from(j.value("repair_degree", "induced"));
    m.seed = j.value("seed", std::uint64_t{0});
    a.config = m;
  } else {
    throw std::invalid_argument("unknown algorithm kind: " + kind);
  }
  return a;
}

json spec_to_json(const ExperimentSpec& s) {
  json j;
  j["graphs"] = s.graphs;
  j["algorithms"] = json::array();
  for (const auto& a : s.algorithms) j["algorithms"].push_back(algorithm_to_json(a));
  j["runs"] = s.runs;
  j["base_seed"] = s.base_seed;
  j["workers"] = s.workers;
  return j;
}

ExperimentSpec spec_from_json(const json& j) {
  ExperimentSpec s;
  if (j.contains("graphs")) s.graphs = j.at("graphs").get<std::vector<std::string>>();
  s.runs = j.value("runs", s.runs);
  s.base_seed = j.value("base_seed", s.base_seed);
  s.workers = j.value("workers", s.workers);

  // The paired genetic config a budget-less Monte Carlo entry matches.
  FgaConfig paired;
  if (j.contains("algorithms")) {
    for (const auto& aj : j.at("algorithms")) {
      if (aj.at("algo").get<std::string>() == "fga") {
        paired = std::get<FgaConfig>(algorithm_from_json(aj, paired).config);
        break;
      }
    }
    for (const auto& aj : j.at("algorithms"))
      s.algorithms.push_back(algorithm_from_json(aj, paired));
  }
  return s;
}

json run_to_json(const RunResult& r) {
  json j;
  j["graph"] = r.graph;
  j["algorithm"] = r.algorithm;
  j["seed"] = r.seed;
  j["best_size"] = r.best_size;
  j["best_clique"] = r.best_clique;
  j["chromosomes_generated"] = r.chromosomes_generated;
  j["chromosomes_to_best"] = r.chromosomes_to_best;
  j["iterations"] = r.iterations;
  j["wall_ms"] = r.wall_ms;
  return j;
}

RunResult run_from_json(const json& j) {
  RunResult r;
  r.graph = j.at("graph").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.best_size = j.at("best_size").get<int>();
  r.best_clique = j.at("best_clique").get<std::vector<int>>();
  r.chromosomes_generated = j.at("chromosomes_generated").get<std::int64_t>();
  r.chromosomes_to_best = j.at("chromosomes_to_best").get<std::int64_t>();
  r.iterations = j.at("iterations").get<std::int64_t>();
  r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

}  // namespace

std::string ExperimentSpec::to_json_text() const { return spec_to_json(*this).dump(2) + "\n"; }

ExperimentSpec ExperimentSpec::from_json_text(const std::string& text) {
  return spec_from_json(json::parse(text));
}

bool Report::same_outcome(const Report& o) const {
  if (spec != o.spec || cells.size() != o.cells.size()) return false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CellResult a = cells[i], b = o.cells[i];
    for (auto& r : a.runs) r.wall_ms = 0;
    for (auto& r : b.runs) r.wall_ms = 0;
    if (!(a == b)) return false;
  }
  return true;
}

void aggregate_cell(CellResult& cell) {
  cell.max_size = 0;
  if (cell.runs.empty()) return;
  double sum = 0;
  for (const auto& r : cell.runs) {
    cell.max_size = std::max(cell.max_size, r.best_size);
    sum += static_cast<double>(r.chromosomes_to_best);
  }
  cell.mean_chromosomes_to_best = std::llround(sum / static_cast<double>(cell.runs.size()));
  if (const ReferenceEntry* ref = find_reference(cell.graph_name)) {
    cell.referenced = true;
    cell.best_known = ref->best_known;
    cell.delta_vs_best_known = cell.max_size - ref->best_known;
  }
}

Report run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  Report report;
  report.spec = spec;

  // Load every graph up front; unreadable files fail their cells but the
  // experiment continues.
  std::vector<std::unique_ptr<Graph>> graphs(spec.graphs.size());
  std::vector<std::string> load_errors(spec.graphs.size());
  for (std::size_t i = 0; i < spec.graphs.size(); ++i) {
    try {
      graphs[i] = std::make_unique<Graph>(load_dimacs_file(spec.graphs[i]));
    } catch (const std::exception& e) {
      load_errors[i] = e.what();
    }
  }

  struct Task {
    std::size_t graph_index;
    std::size_t algo_index;
    int run_index;
  };
  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < spec.graphs.size(); ++gi)
    for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai)
      for (int run = 0; run < spec.runs; ++run)
        if (graphs[gi]) tasks.push_back({gi, ai, run});

  std::vector<RunResult> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    while (true) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size()) return;
      const Task& task = tasks[t];
      try {
        const Graph& g = *graphs[task.graph_index];
        const AlgorithmSpec& algo = spec.algorithms[task.algo_index];
        const std::uint64_t seed = spec.base_seed + static_cast<std::uint64_t>(task.run_index);
        RunResult r;
        if (algo.is_fga()) {
          FgaConfig cfg = std::get<FgaConfig>(algo.config);
          cfg.seed = seed;
          r = run_fga(g, cfg);
        } else {
          McConfig cfg = std::get<McConfig>(algo.config);
          cfg.seed = seed;
          r = run_mc(g, cfg);
        }
        // Defense against solver bugs: the reported clique must re-verify
        // against the loaded graph before the result is accepted.
        std::vector<int> zero_based;
        zero_based.reserve(r.best_clique.size());
        for (int v : r.best_clique) zero_based.push_back(v - 1);
        const Bitset witness = make_vertex_set(g, zero_based);
        if (static_cast<int>(witness.count()) != r.best_size || !is_maximal_clique(g, witness))
          throw std::logic_error("unverifiable best clique for " + g.name());
        r.algorithm = algo.id;
        results[t] = std::move(r);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };

  const int worker_count = std::max(1, std::min<int>(spec.workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(worker_count));
  for (int i = 0; i < worker_count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  // Assemble cells in (graph, algorithm) order regardless of scheduling.
  std::size_t cursor = 0;
  for (std::size_t gi = 0; gi < spec.graphs.size(); ++gi) {
    for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai) {
      CellResult cell;
      cell.graph_file = spec.graphs[gi];
      cell.algorithm_id = spec.algorithms[ai].id;
      cell.algorithm_kind = spec.algorithms[ai].kind();
      if (!graphs[gi]) {
        cell.graph_name = std::filesystem::path(spec.graphs[gi]).stem().string();
        cell.failed = true;
        cell.error = load_errors[gi];
      } else {
        const Graph& g = *graphs[gi];
        cell.graph_name = g.name();
        cell.vertices = g.order();
        cell.edges = g.edge_count();
        cell.graph_density = g.order() >= 2 ? density(g) : 0.0;
        for (int run = 0; run < spec.runs; ++run) cell.runs.push_back(results[cursor++]);
        aggregate_cell(cell);
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::string report_to_csv(const Report& r) {
  std::ostringstream out;
  out << "graph,vertices,edges,density,algorithm,max_size,mean_chromosomes_to_best,best_known,delta\n";
  char buf[32];
  for (const auto& cell : r.cells) {
    if (cell.failed) {
      out << cell.graph_name << ",,,," << cell.algorithm_id << ",,,,\n";
      continue;
    }
    std::snprintf(buf, sizeof buf, "%.3f", cell.graph_density);
    out << cell.graph_name << "," << cell.vertices << "," << cell.edges << "," << buf << ","
        << cell.algorithm_id << "," << cell.max_size << "," << cell.mean_chromosomes_to_best << ",";
    if (cell.referenced)
      out << cell.best_known << "," << cell.delta_vs_best_known;
    else
      out << ",";
    out << "\n";
  }
  return out.str();
}

std::string report_to_json(const Report& r) {
  json j;
  j["spec"] = spec_to_json(r.spec);
  j["cells"] = json::array();
  for (const auto& cell : r.cells) {
    json c;
    c["graph_file"] = cell.graph_file;
    c["graph_name"] = cell.graph_name;
    c["vertices"] = cell.vertices;
    c["edges"] = cell.edges;
    c["density"] = cell.graph_density;
    c["algorithm_id"] = cell.algorithm_id;
    c["algorithm_kind"] = cell.algorithm_kind;
    c["failed"] = cell.failed;
    c["error"] = cell.error;
    c["max_size"] = cell.max_size;
    c["mean_chromosomes_to_best"] = cell.mean_chromosomes_to_best;
    c["referenced"] = cell.referenced;
    c["best_known"] = cell.best_known;
    c["delta_vs_best_known"] = cell.delta_vs_best_known;
    c["runs"] = json::array();
    for (const auto& run : cell.runs) c["runs"].push_back(run_to_json(run));
    j["cells"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  const json j = json::parse(text);
  Report r;
  r.spec = spec_from_json(j.at("spec"));
  for (const auto& cj : j.at("cells")) {
    CellResult cell;
    cell.graph_file = cj.at("graph_file").get<std::string>();
    cell.graph_name = cj.at("graph_name").get<std::string>();
    cell.vertices = cj.at("vertices").get<int>();
    cell.edges = cj.at("edges").get<std::int64_t>();
    cell.graph_density = cj.at("density").get<double>();
    cell.algorithm_id = cj.at("algorithm_id").get<std::string>();
    cell.algorithm_kind = cj.at("algorithm_kind").get<std::string>();
    cell.failed = cj.at("failed").get<bool>();
    cell.error = cj.at("error").get<std::string>();
    cell.max_size = cj.at("max_size").get<int>();
    cell.mean_chromosomes_to_best = cj.at("mean_chromosomes_to_best").get<std::int64_t>();
    cell.referenced = cj.at("referenced").get<bool>();
    cell.best_known = cj.at("best_known").get<int>();
    cell.delta_vs_best_known = cj.at("delta_vs_best_known").get<int>();
    for (const auto& rj : cj.at("runs")) cell.runs.push_back(run_from_json(rj));
    r.cells.push_back(std::move(cell));
  }
  return r;
}

std::string emit_report(const Report& r, std::string_view format) {
  if (format == "csv") return report_to_csv(r);
  if (format == "json") return report_to_json(r);
  throw std::invalid_argument("unknown report format: " + std::string(format));
}

ReferenceComparison compare_reference(const Report& r) {
  ReferenceComparison out;
  std::vector<std::string> seen;
  for (const auto& cell : r.cells) {
    if (cell.failed) continue;
    if (std::find(seen.begin(), seen.end(), cell.graph_name) != seen.end()) continue;
    seen.push_back(cell.graph_name);

    GraphComparison gc;
    gc.graph_name = cell.graph_name;
    const ReferenceEntry* ref = find_reference(cell.graph_name);
    gc.referenced = ref != nullptr;
    if (ref) {
      gc.best_known = ref->best_known;
      gc.source_conflict = !ref->best_consistent();
    } else {
      out.unreferenced.push_back(cell.graph_name);
    }

    // Best cell per solver kind: larger max, then fewer chromosomes.
    for (const auto& c : r.cells) {
      if (c.failed || c.graph_name != cell.graph_name) continue;
      auto& mx = c.algorithm_kind == "fga" ? gc.fga_max : gc.mc_max;
      auto& ch = c.algorithm_kind == "fga" ? gc.fga_chromosomes : gc.mc_chromosomes;
      if (!mx || c.max_size > *mx ||
          (c.max_size == *mx && c.mean_chromosomes_to_best < *ch)) {
        mx = c.max_size;
        ch = c.mean_chromosomes_to_best;
      }
    }

    if (gc.fga_max && gc.mc_max) {
      gc.size_outcome = *gc.fga_max > *gc.mc_max   ? Outcome::fga_wins
                        : *gc.mc_max > *gc.fga_max ? Outcome::mc_wins
                                                   : Outcome::tie;
      gc.speed_outcome = *gc.fga_chromosomes < *gc.mc_chromosomes   ? Outcome::fga_wins
                         : *gc.mc_chromosomes < *gc.fga_chromosomes ? Outcome::mc_wins
                                                                    : Outcome::tie;
      out.fga_larger += gc.size_outcome == Outcome::fga_wins;
      out.mc_larger += gc.size_outcome == Outcome::mc_wins;
      out.size_ties += gc.size_outcome == Outcome::tie;
      out.fga_fewer_chromosomes += gc.speed_outcome == Outcome::fga_wins;
      out.mc_fewer_chromosomes += gc.speed_outcome == Outcome::mc_wins;
    }
    if (gc.referenced) {
      for (const auto& mx : {gc.fga_max, gc.mc_max}) {
        if (!mx) continue;
        out.matches_best_known += *mx == gc.best_known;
        out.below_best_known += *mx < gc.best_known;
        out.above_best_known += *mx > gc.best_known;
      }
    }
    out.graphs.push_back(std::move(gc));
  }
  return out;
}

std::string comparison_to_text(const ReferenceComparison& c) {
  std::ostringstream out;
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; };
  auto opt64 = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; };
  out << "graph                fga   mc    best  size-outcome        fga-chrom    mc-chrom\n";
  for (const auto& g : c.graphs) {
    std::string outcome;
    if (!g.fga_max || !g.mc_max)
      outcome = "single solver";
    else if (g.size_outcome == Outcome::fga_wins)
      outcome = "FGA > MC";
    else if (g.size_outcome == Outcome::mc_wins)
      outcome = "MC > FGA";
    else
      outcome = "tie";
    if (g.referenced) {
      const int reached = std::max(g.fga_max.value_or(0), g.mc_max.value_or(0));
      outcome += reached == g.best_known  ? ", matches best-known"
                 : reached < g.best_known ? ", below best-known"
                                          : ", above best-known";
      if (g.source_conflict) outcome += " (source tables conflict)";
    } else {
      outcome += ", unreferenced";
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-20s %-5s %-5s %-5s %-25s %-12s %-12s\n",
                  g.graph_name.c_str(), opt(g.fga_max).c_str(), opt(g.mc_max).c_str(),
                  g.referenced ? std::to_string(g.best_known).c_str() : "-",
                  outcome.c_str(), opt64(g.fga_chromosomes).c_str(),
                  opt64(g.mc_chromosomes).c_str());
    out << line;
  }
  out << "\nsummary: FGA larger on " << c.fga_larger << ", MC larger on " << c.mc_larger
      << ", ties " << c.size_ties << "; FGA fewer chromosomes on " << c.fga_fewer_chromosomes
      << ", MC fewer on " << c.mc_fewer_chromosomes << "\n";
  out << "vs best-known: matches " << c.matches_best_known << ", below " << c.below_best_known
      << ", above " << c.above_best_known << "\n";
  if (!c.unreferenced.empty()) {
    out << "unreferenced:";
    for (const auto& name : c.unreferenced) out << " " << name;
    out << "\n";
  }
  return out.str();
}

}  // namespace mcp
