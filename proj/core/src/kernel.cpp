#include "mcp/kernel.hpp"

#include <stdexcept>
#include <vector>

namespace mcp {

namespace {

void check_length(const Graph& g, const Chromosome& c, const char* what) {
  if (c.size() != static_cast<std::size_t>(g.order()))
    throw std::domain_error(std::string(what) + ": chromosome length does not match graph order");
}

// Picks among `candidates` (ascending vertex order) the entry with the
// smallest key, breaking ties per rule.
int pick_min(const std::vector<int>& candidates, const std::vector<int>& key,
             Rng& rng, TieRule tie) {
  int best_key = key[static_cast<std::size_t>(candidates.front())];
  for (int v : candidates) best_key = std::min(best_key, key[static_cast<std::size_t>(v)]);
  if (tie == TieRule::lowest_index) {
    for (int v : candidates)
      if (key[static_cast<std::size_t>(v)] == best_key) return v;
  }
  int ties = 0;
  for (int v : candidates)
    if (key[static_cast<std::size_t>(v)] == best_key) ++ties;
  int pick = rng.index(static_cast<std::size_t>(ties));
  for (int v : candidates) {
    if (key[static_cast<std::size_t>(v)] == best_key && pick-- == 0) return v;
  }
  return candidates.front();  // unreachable
}

}  // namespace

Chromosome random_chromosome(int n, Rng& rng) {
  if (n < 1) throw std::domain_error("random_chromosome: length must be positive");
  Chromosome c(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c.word_count(); ++i) c.set_word(i, rng.next());
  return c;
}

int fitness(const Graph& g, const Chromosome& c) {
  check_length(g, c, "fitness");
  return is_clique(g, c) ? static_cast<int>(c.count()) : 0;
}

Chromosome repair(const Graph& g, Chromosome c, Rng& rng, TieRule tie, DegreeRule degree) {
  check_length(g, c, "repair");
  std::vector<int> members = c.to_vector();
  std::size_t k = members.size();

  // Induced degrees are maintained incrementally; the set is a clique iff
  // their sum equals k(k-1).
  std::vector<int> ideg(c.size(), 0);
  std::size_t degree_sum = 0;
  for (int v : members) {
    ideg[static_cast<std::size_t>(v)] = static_cast<int>(g.neighbors(v).count_and(c));
    degree_sum += static_cast<std::size_t>(ideg[static_cast<std::size_t>(v)]);
  }

  std::vector<int> gdeg;
  if (degree == DegreeRule::global) {
    gdeg.resize(c.size());
    for (int v : members) gdeg[static_cast<std::size_t>(v)] = g.degree(v);
  }

  while (degree_sum != k * (k - 1)) {
    const int victim = pick_min(members, degree == DegreeRule::induced ? ideg : gdeg, rng, tie);
    c.reset(static_cast<std::size_t>(victim));
    degree_sum -= 2 * static_cast<std::size_t>(ideg[static_cast<std::size_t>(victim)]);
    g.neighbors(victim).for_each([&](int w) {
      if (c.test(static_cast<std::size_t>(w))) --ideg[static_cast<std::size_t>(w)];
    });
    members.erase(std::find(members.begin(), members.end(), victim));
    --k;
  }
  return c;
}

Chromosome extend(const Graph& g, Chromosome c, ExtendMode mode, Rng& rng, TieRule tie) {
  check_length(g, c, "extend");
  if (!is_clique(g, c)) throw std::domain_error("extend: input is not a clique");

  // Vertices adjacent to every current member. Members drop out on their
  // own because adjacency excludes self.
  Bitset candidates = Bitset::full(c.size());
  c.for_each([&](int v) { candidates &= g.neighbors(v); });

  std::vector<int> pool;
  while (candidates.any()) {
    int pick;
    if (mode == ExtendMode::stochastic_uniform) {
      pick = candidates.select(rng.next_below(candidates.count()));
    } else {
      pool.clear();
      int best = -1;
      candidates.for_each([&](int v) {
        if (g.degree(v) > best) {
          best = g.degree(v);
          pool.clear();
        }
        if (g.degree(v) == best) pool.push_back(v);
      });
      if (pool.size() == 1 || tie == TieRule::lowest_index)
        pick = pool.front();
      else
        pick = pool[static_cast<std::size_t>(rng.index(pool.size()))];
    }
    c.set(static_cast<std::size_t>(pick));
    candidates &= g.neighbors(pick);
  }
  return c;
}

Chromosome prune(const Graph& g, Chromosome c, double p, Rng& rng) {
  check_length(g, c, "prune");
  if (p < 0.0 || p > 1.0) throw std::domain_error("prune: probability outside [0,1]");
  for (int v : c.to_vector())
    if (rng.bernoulli(p)) c.reset(static_cast<std::size_t>(v));
  return c;
}

}  // namespace mcp
