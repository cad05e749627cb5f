#pragma once

#include <chrono>
#include <functional>
#include <stdexcept>

#include "mcp/bitset.hpp"
#include "mcp/graph.hpp"

namespace mcp {

/// Exact search is exponential in the worst case, so instances are capped
/// by vertex count and wall time; exceeding either is an explicit error,
/// never a silent approximation.
struct OracleLimits {
  int max_vertices = 40;
  std::chrono::milliseconds time_budget{60'000};
};

class OracleTimeout : public std::runtime_error {
 public:
  OracleTimeout() : std::runtime_error("exact search exceeded its time budget") {}
};

struct MaxCliqueResult {
  int size = 0;
  Bitset members;  // one witness, 0-based
};

/// Exact maximum clique via recursive maximal-clique enumeration with
/// pivoting and best-size pruning. Throws std::domain_error when the graph
/// exceeds max_vertices and OracleTimeout past the time budget.
MaxCliqueResult max_clique_exact(const Graph& g, const OracleLimits& limits = {});

/// Visits every maximal clique exactly once (pivoting, no size pruning).
void for_each_maximal_clique(const Graph& g, const OracleLimits& limits,
                             const std::function<void(const Bitset&)>& visit);

}  // namespace mcp
