#include "mcp/graph.hpp"

#include <stdexcept>

namespace mcp {

Graph::Graph(std::string name, int n, std::span<const std::pair<int, int>> edges)
    : name_(std::move(name)), n_(n) {
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    if (!adj_[su].test(sv)) {
      adj_[su].set(sv);
      adj_[sv].set(su);
      ++m_;
    }
  }
  degree_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    degree_[static_cast<std::size_t>(v)] = static_cast<int>(adj_[static_cast<std::size_t>(v)].count());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v = adj_[static_cast<std::size_t>(u)].find_next(u); v != -1;
         v = adj_[static_cast<std::size_t>(u)].find_next(v))
      out.emplace_back(u, v);
  }
  return out;
}

double density(const Graph& g) {
  if (g.order() < 2) throw std::domain_error("density requires at least two vertices");
  const double n = g.order();
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

namespace {

void check_span(const Graph& g, const Bitset& s, const char* what) {
  if (s.size() != static_cast<std::size_t>(g.order()))
    throw std::domain_error(std::string(what) + ": vertex set does not span the graph");
}

}  // namespace

bool is_clique(const Graph& g, const Bitset& s) {
  check_span(g, s, "is_clique");
  // A set of size k is a clique iff every member has induced degree k-1,
  // i.e. the induced degree sum is k(k-1).
  std::size_t k = 0, degree_sum = 0;
  s.for_each([&](int v) {
    ++k;
    degree_sum += g.neighbors(v).count_and(s);
  });
  return degree_sum == k * (k - 1);
}

bool is_maximal_clique(const Graph& g, const Bitset& s) {
  check_span(g, s, "is_maximal_clique");
  if (!is_clique(g, s)) return false;
  if (s.none()) return false;  // any single vertex extends the empty clique
  // Common neighborhood of all members; members exclude themselves since
  // adjacency has no self-loops.
  Bitset common = Bitset::full(s.size());
  s.for_each([&](int v) { common &= g.neighbors(v); });
  return common.none();
}

int induced_degree(const Graph& g, const Bitset& s, int v) {
  check_span(g, s, "induced_degree");
  if (v < 0 || static_cast<std::size_t>(v) >= s.size() || !s.test(static_cast<std::size_t>(v)))
    throw std::domain_error("induced_degree: vertex not in set");
  return static_cast<int>(g.neighbors(v).count_and(s));
}

Bitset make_vertex_set(const Graph& g, std::span<const int> vertices) {
  Bitset s(static_cast<std::size_t>(g.order()));
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw std::domain_error("vertex id out of range");
    s.set(static_cast<std::size_t>(v));
  }
  return s;
}

std::vector<int> to_one_based(const Bitset& s) {
  std::vector<int> out;
  out.reserve(s.count());
  s.for_each([&](int v) { out.push_back(v + 1); });
  return out;
}

}  // namespace mcp
