#include "mcp/oracle.hpp"

namespace mcp {

namespace {

struct BronKerbosch {
  const Graph& g;
  std::chrono::steady_clock::time_point deadline;
  const std::function<void(const Bitset&)>* visit = nullptr;  // enumeration mode
  int best = 0;                                               // max-clique mode
  Bitset best_set;
  std::uint32_t tick = 0;

  explicit BronKerbosch(const Graph& graph, const OracleLimits& limits)
      : g(graph), deadline(std::chrono::steady_clock::now() + limits.time_budget) {}

  void check_time() {
    if ((++tick & 0xff) == 0 && std::chrono::steady_clock::now() > deadline)
      throw OracleTimeout();
  }

  void recurse(Bitset& r, Bitset p, Bitset x) {
    check_time();
    if (p.none() && x.none()) {
      if (visit) {
        (*visit)(r);
      } else if (static_cast<int>(r.count()) > best) {
        best = static_cast<int>(r.count());
        best_set = r;
      }
      return;
    }
    if (!visit && static_cast<int>(r.count() + p.count()) <= best) return;

    // Pivot on the vertex of P|X covering most of P; only P \ N(pivot)
    // needs expansion.
    int pivot = -1;
    std::size_t cover = 0;
    bool first = true;
    (p | x).for_each([&](int u) {
      const std::size_t c = p.count_and(g.neighbors(u));
      if (first || c > cover) {
        pivot = u;
        cover = c;
        first = false;
      }
    });

    Bitset expand = p;
    expand.subtract(g.neighbors(pivot));
    expand.for_each([&](int v) {
      r.set(static_cast<std::size_t>(v));
      recurse(r, p & g.neighbors(v), x & g.neighbors(v));
      r.reset(static_cast<std::size_t>(v));
      p.reset(static_cast<std::size_t>(v));
      x.set(static_cast<std::size_t>(v));
    });
  }
};

void check_cap(const Graph& g, const OracleLimits& limits) {
  if (limits.max_vertices < 1) throw std::invalid_argument("max_vertices must be positive");
  if (g.order() > limits.max_vertices)
    throw std::domain_error("graph exceeds the exact-search vertex cap (" +
                            std::to_string(g.order()) + " > " +
                            std::to_string(limits.max_vertices) + ")");
}

}  // namespace

MaxCliqueResult max_clique_exact(const Graph& g, const OracleLimits& limits) {
  check_cap(g, limits);
  BronKerbosch bk(g, limits);
  bk.best_set = Bitset(static_cast<std::size_t>(g.order()));
  Bitset r(static_cast<std::size_t>(g.order()));
  bk.recurse(r, Bitset::full(static_cast<std::size_t>(g.order())),
             Bitset(static_cast<std::size_t>(g.order())));
  return {bk.best, bk.best_set};
}

void for_each_maximal_clique(const Graph& g, const OracleLimits& limits,
                             const std::function<void(const Bitset&)>& visit) {
  check_cap(g, limits);
  BronKerbosch bk(g, limits);
  bk.visit = &visit;
  Bitset r(static_cast<std::size_t>(g.order()));
  bk.recurse(r, Bitset::full(static_cast<std::size_t>(g.order())),
             Bitset(static_cast<std::size_t>(g.order())));
}

}  // namespace mcp
