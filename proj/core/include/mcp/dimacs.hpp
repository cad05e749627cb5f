#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcp/graph.hpp"

namespace mcp {

/// Parse failure with the 1-based line it occurred on (0 = end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads DIMACS ASCII clique format: `c` comments, one `p edge <n> <m>`
/// problem line, `e <u> <v>` edge lines with 1-based endpoints. Vertices are
/// re-indexed to 0-based; duplicate edge lines and both orientations
/// collapse to one undirected edge. A declared edge count that disagrees
/// with the distinct count produces a warning; the distinct count wins.
Graph parse_dimacs(std::istream& in, const std::string& name,
                   std::vector<std::string>* warnings = nullptr);

/// parse_dimacs on a file; the graph name is the file stem.
Graph load_dimacs_file(const std::filesystem::path& path,
                       std::vector<std::string>* warnings = nullptr);

/// Writes the graph in DIMACS clique format with 1-based ids, edges sorted.
/// Output bytes are a pure function of the graph.
void write_dimacs(const Graph& g, std::ostream& out);

}  // namespace mcp
