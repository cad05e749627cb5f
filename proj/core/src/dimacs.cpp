#include "mcp/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mcp {

namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

Graph parse_dimacs(std::istream& in, const std::string& name,
                   std::vector<std::string>* warnings) {
  int n = -1;
  std::int64_t declared_m = -1;
  std::int64_t edge_lines = 0;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;

    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c") continue;

    if (tag == "p") {
      if (n != -1) throw ParseError(line_no, "duplicate problem line");
      std::string format;
      std::int64_t m = -1;
      if (!(ss >> format >> n >> m) || format != "edge")
        throw ParseError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
      std::string extra;
      if (ss >> extra) throw ParseError(line_no, "trailing token on problem line");
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
      declared_m = m;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }

    if (tag == "e") {
      if (n == -1) throw ParseError(line_no, "edge line before problem line");
      int u = 0, v = 0;
      if (!(ss >> u >> v)) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      std::string extra;
      if (ss >> extra) throw ParseError(line_no, "trailing token on edge line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex id out of range [1, " + std::to_string(n) + "]");
      if (u == v) throw ParseError(line_no, "self-loop rejected");
      edges.emplace_back(u - 1, v - 1);
      ++edge_lines;
      continue;
    }

    throw ParseError(line_no, "unrecognized line type '" + tag + "'");
  }

  if (n == -1) throw ParseError(line_no, "missing problem line");

  Graph g(name, n, edges);
  if (warnings && g.edge_count() != declared_m) {
    std::ostringstream w;
    w << name << ": problem line declares " << declared_m << " edges but the file has "
      << g.edge_count() << " distinct edges";
    if (edge_lines != g.edge_count())
      w << " (" << (edge_lines - g.edge_count()) << " duplicate edge lines collapsed)";
    w << "; using the distinct count";
    warnings->push_back(w.str());
  }
  return g;
}

Graph load_dimacs_file(const std::filesystem::path& path,
                       std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_dimacs(in, path.stem().string(), warnings);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  out << "c " << g.name() << "\n";
  out << "p edge " << g.order() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

}  // namespace mcp
