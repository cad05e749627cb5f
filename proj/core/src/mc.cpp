#include "mcp/mc.hpp"

#include <chrono>
#include <stdexcept>

namespace mcp {

void McConfig::validate() const {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  if (prune_probability < 0.0 || prune_probability > 1.0)
    throw std::invalid_argument("prune_probability outside [0,1]");
  if (target_size && *target_size < 1) throw std::invalid_argument("target_size must be positive");
}

namespace {

// Uniform edge: endpoint of a uniformly chosen directed edge, reached by
// walking the degree sequence.
std::pair<int, int> sample_edge(const Graph& g, Rng& rng) {
  std::int64_t k = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(2 * g.edge_count())));
  for (int u = 0; u < g.order(); ++u) {
    if (k < g.degree(u)) {
      const int v = g.neighbors(u).select(static_cast<std::size_t>(k));
      return {u, v};
    }
    k -= g.degree(u);
  }
  throw std::logic_error("sample_edge: degree walk overran");
}

}  // namespace

Chromosome generate_candidate(const Graph& g, McMethod method, const McConfig& cfg, Rng& rng,
                              TieRule tie) {
  switch (method) {
    case McMethod::random_bits: {
      Chromosome c = random_chromosome(g.order(), rng);
      c = repair(g, std::move(c), rng, tie, cfg.repair_degree);
      c = prune(g, std::move(c), cfg.prune_probability, rng);
      return extend(g, std::move(c), cfg.extend_mode, rng, tie);
    }
    case McMethod::edge_seed: {
      if (g.edge_count() == 0) throw std::domain_error("edge_seed requires a graph with edges");
      auto [u, v] = sample_edge(g, rng);
      Chromosome c(static_cast<std::size_t>(g.order()));
      c.set(static_cast<std::size_t>(u));
      c.set(static_cast<std::size_t>(v));
      return extend(g, std::move(c), cfg.extend_mode, rng, tie);
    }
    case McMethod::vertex_neighborhood: {
      const int v = rng.index(static_cast<std::size_t>(g.order()));
      Chromosome c = g.neighbors(v);
      c.set(static_cast<std::size_t>(v));
      c = repair(g, std::move(c), rng, tie, cfg.repair_degree);
      c = prune(g, std::move(c), cfg.prune_probability, rng);
      return extend(g, std::move(c), cfg.extend_mode, rng, tie);
    }
    case McMethod::mixed:
      throw std::invalid_argument("generate_candidate needs a concrete method");
  }
  throw std::invalid_argument("unknown method");
}

RunResult run_mc(const Graph& g, const McConfig& cfg, std::vector<GenerationLog>* logs) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  SearchTracker tracker;

  static constexpr McMethod kCycle[3] = {McMethod::random_bits, McMethod::edge_seed,
                                         McMethod::vertex_neighborhood};
  std::int64_t candidates = 0;
  while (candidates < cfg.budget) {
    McMethod method = cfg.method == McMethod::mixed ? kCycle[candidates % 3] : cfg.method;
    // An edgeless graph has nothing for edge_seed to sample; fall back to
    // coin flips instead of failing mid-run.
    if (method == McMethod::edge_seed && g.edge_count() == 0) method = McMethod::random_bits;

    Chromosome c = generate_candidate(g, method, cfg, rng);
    tracker.record(c, fitness(g, c));
    if (logs) logs->push_back({candidates, {c}, tracker.best_fitness, tracker.generated});
    ++candidates;
    if (cfg.target_size && tracker.best_fitness >= *cfg.target_size) break;
  }

  if (!is_maximal_clique(g, tracker.best))
    throw std::logic_error("run_mc: best chromosome failed maximality verification");

  RunResult r;
  r.graph = g.name();
  r.algorithm = "mc";
  r.seed = cfg.seed;
  r.best_clique = to_one_based(tracker.best);
  r.best_size = tracker.best_fitness;
  r.chromosomes_generated = tracker.generated;
  r.chromosomes_to_best = tracker.to_best;
  r.iterations = candidates;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace mcp
