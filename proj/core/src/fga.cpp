#include "mcp/fga.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace mcp {

void FgaConfig::validate() const {
  if (population_size < 2 || population_size % 2 != 0)
    throw std::invalid_argument("population_size must be even and at least 2");
  if (max_generations < 1) throw std::invalid_argument("max_generations must be at least 1");
  if (target_size && *target_size < 1) throw std::invalid_argument("target_size must be positive");
}

std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& p1,
                                                    const Chromosome& p2,
                                                    const Bitset& mask) {
  if (p1.size() != p2.size() || p1.size() != mask.size())
    throw std::domain_error("uniform_crossover: length mismatch");
  Chromosome o1(p1.size()), o2(p1.size());
  for (std::size_t w = 0; w < p1.word_count(); ++w) {
    const std::uint64_t m = mask.word(w), a = p1.word(w), b = p2.word(w);
    o1.set_word(w, (a & ~m) | (b & m));
    o2.set_word(w, (b & ~m) | (a & m));
  }
  return {o1, o2};
}

std::pair<Chromosome, Chromosome> uniform_crossover(const Chromosome& p1,
                                                    const Chromosome& p2, Rng& rng) {
  if (p1.size() != p2.size()) throw std::domain_error("uniform_crossover: length mismatch");
  Bitset mask(p1.size());
  for (std::size_t w = 0; w < mask.word_count(); ++w) mask.set_word(w, rng.next());
  return uniform_crossover(p1, p2, mask);
}

Chromosome inversion_mutation(Chromosome c, std::size_t i, std::size_t j) {
  if (i > j || j >= c.size()) throw std::domain_error("inversion_mutation: cut points out of range");
  while (i < j) {
    const bool bi = c.test(i), bj = c.test(j);
    if (bi != bj) {
      if (bi) {
        c.reset(i);
        c.set(j);
      } else {
        c.set(i);
        c.reset(j);
      }
    }
    ++i;
    --j;
  }
  return c;
}

Chromosome inversion_mutation(Chromosome c, Rng& rng) {
  const auto a = rng.next_below(c.size());
  const auto b = rng.next_below(c.size());
  return inversion_mutation(std::move(c), std::min(a, b), std::max(a, b));
}

std::pair<int, int> select_two_fittest(const std::array<int, 4>& fitness,
                                       const std::array<bool, 4>& is_offspring, Rng& rng,
                                       bool prefer_offspring) {
  // Fixed draw order keeps the rng stream independent of tie structure.
  std::array<std::uint64_t, 4> token;
  for (auto& t : token) t = rng.next();
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (fitness[a] != fitness[b]) return fitness[a] > fitness[b];
    if (prefer_offspring && is_offspring[a] != is_offspring[b]) return is_offspring[a];
    return token[a] < token[b];
  });
  return {order[0], order[1]};
}

GenerationLog evolve_generation(const Graph& g, std::vector<Chromosome>& population,
                                const FgaConfig& cfg, Rng& rng, SearchTracker& tracker,
                                std::int64_t generation_index) {
  cfg.validate();
  if (population.size() != static_cast<std::size_t>(cfg.population_size))
    throw std::invalid_argument("population size does not match config");

  rng.shuffle(population);
  std::vector<Chromosome> next;
  next.reserve(population.size());

  for (std::size_t i = 0; i + 1 < population.size(); i += 2) {
    const Chromosome& p1 = population[i];
    const Chromosome& p2 = population[i + 1];

    auto [o1, o2] = uniform_crossover(p1, p2, rng);
    o1 = inversion_mutation(std::move(o1), rng);
    o2 = inversion_mutation(std::move(o2), rng);
    o1 = extend(g, repair(g, std::move(o1), rng, TieRule::uniform_random, cfg.repair_degree),
                cfg.extend_mode, rng);
    o2 = extend(g, repair(g, std::move(o2), rng, TieRule::uniform_random, cfg.repair_degree),
                cfg.extend_mode, rng);

    // Parents are maximal cliques from the previous generation; their
    // fitness is just their size.
    const std::array<int, 4> fit{static_cast<int>(p1.count()), static_cast<int>(p2.count()),
                                 fitness(g, o1), fitness(g, o2)};
    tracker.record(o1, fit[2]);
    tracker.record(o2, fit[3]);

    const std::array<const Chromosome*, 4> family{&p1, &p2, &o1, &o2};
    auto [a, b] =
        select_two_fittest(fit, {false, false, true, true}, rng, cfg.prefer_offspring_on_ties);
    next.push_back(*family[static_cast<std::size_t>(a)]);
    next.push_back(*family[static_cast<std::size_t>(b)]);
  }

  population = std::move(next);
  return GenerationLog{generation_index, population, tracker.best_fitness, tracker.generated};
}

RunResult run_fga(const Graph& g, const FgaConfig& cfg, std::vector<GenerationLog>* logs) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  SearchTracker tracker;

  std::vector<Chromosome> population;
  population.reserve(static_cast<std::size_t>(cfg.population_size));
  for (int i = 0; i < cfg.population_size; ++i) {
    Chromosome c = random_chromosome(g.order(), rng);
    c = extend(g, repair(g, std::move(c), rng, TieRule::uniform_random, cfg.repair_degree),
               cfg.extend_mode, rng);
    tracker.record(c, fitness(g, c));
    population.push_back(std::move(c));
  }
  if (logs) logs->push_back({0, population, tracker.best_fitness, tracker.generated});

  std::int64_t generations = 0;
  while (generations < cfg.max_generations &&
         !(cfg.target_size && tracker.best_fitness >= *cfg.target_size)) {
    auto log = evolve_generation(g, population, cfg, rng, tracker, generations + 1);
    ++generations;
    if (logs) logs->push_back(std::move(log));
  }

  if (!is_maximal_clique(g, tracker.best))
    throw std::logic_error("run_fga: best chromosome failed maximality verification");

  RunResult r;
  r.graph = g.name();
  r.algorithm = "fga";
  r.seed = cfg.seed;
  r.best_clique = to_one_based(tracker.best);
  r.best_size = tracker.best_fitness;
  r.chromosomes_generated = tracker.generated;
  r.chromosomes_to_best = tracker.to_best;
  r.iterations = generations;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace mcp
