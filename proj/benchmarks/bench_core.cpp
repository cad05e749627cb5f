#include <benchmark/benchmark.h>

#include <sstream>

#include "mcp/dimacs.hpp"
#include "mcp/fga.hpp"
#include "mcp/generator.hpp"
#include "mcp/mc.hpp"
#include "mcp/oracle.hpp"

using namespace mcp;

namespace {

const Graph& dense200() {
  static const Graph g = random_gnp("dense200", 200, 0.5, 1);
  return g;
}

const Graph& keller4() {
  static const Graph g = keller_graph(4);
  return g;
}

void BM_ParseDimacs(benchmark::State& state) {
  std::ostringstream serialized;
  write_dimacs(keller4(), serialized);
  const std::string text = serialized.str();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(parse_dimacs(in, "keller4"));
  }
}
BENCHMARK(BM_ParseDimacs);

void BM_Fitness(benchmark::State& state) {
  Rng rng(2);
  const Chromosome c = random_chromosome(dense200().order(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(fitness(dense200(), c));
}
BENCHMARK(BM_Fitness);

void BM_Repair(benchmark::State& state) {
  Rng rng(3);
  for (auto _ : state) {
    state.PauseTiming();
    const Chromosome c = random_chromosome(dense200().order(), rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(repair(dense200(), c, rng));
  }
}
BENCHMARK(BM_Repair);

void BM_ExtendGreedy(benchmark::State& state) {
  Rng rng(4);
  const Chromosome empty(static_cast<std::size_t>(dense200().order()));
  for (auto _ : state)
    benchmark::DoNotOptimize(extend(dense200(), empty, ExtendMode::greedy_highest_degree, rng));
}
BENCHMARK(BM_ExtendGreedy);

void BM_ExtendStochastic(benchmark::State& state) {
  Rng rng(5);
  const Chromosome empty(static_cast<std::size_t>(dense200().order()));
  for (auto _ : state)
    benchmark::DoNotOptimize(extend(dense200(), empty, ExtendMode::stochastic_uniform, rng));
}
BENCHMARK(BM_ExtendStochastic);

void BM_McCandidate(benchmark::State& state) {
  const auto method = static_cast<McMethod>(state.range(0));
  McConfig cfg;
  Rng rng(6);
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_candidate(keller4(), method, cfg, rng));
}
BENCHMARK(BM_McCandidate)
    ->Arg(static_cast<int>(McMethod::random_bits))
    ->Arg(static_cast<int>(McMethod::edge_seed))
    ->Arg(static_cast<int>(McMethod::vertex_neighborhood));

void BM_FgaGeneration(benchmark::State& state) {
  FgaConfig cfg;
  cfg.population_size = 50;
  cfg.seed = 7;
  Rng rng(cfg.seed);
  SearchTracker tracker;
  std::vector<Chromosome> population;
  for (int i = 0; i < cfg.population_size; ++i) {
    Chromosome c = random_chromosome(keller4().order(), rng);
    c = extend(keller4(), repair(keller4(), std::move(c), rng), cfg.extend_mode, rng);
    tracker.record(c, fitness(keller4(), c));
    population.push_back(std::move(c));
  }
  std::int64_t generation = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        evolve_generation(keller4(), population, cfg, rng, tracker, ++generation));
}
BENCHMARK(BM_FgaGeneration);

void BM_ExactOracle(benchmark::State& state) {
  const Graph g = random_gnp("oracle30", 30, 0.5, 8);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_exact(g));
}
BENCHMARK(BM_ExactOracle);

}  // namespace

BENCHMARK_MAIN();
