#include "mcp/solver.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "mcp/dimacs.hpp"

namespace mcp {

void write_log(std::ostream& out, std::span<const GenerationLog> logs) {
  for (const auto& log : logs) {
    out << "g " << log.generation << "\n";
    for (const auto& member : log.population) {
      const auto ids = to_one_based(member);
      for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
      out << "\n";
    }
  }
}

std::vector<LogRecord> read_log(std::istream& in) {
  std::vector<LogRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ss(line);
    if (line[0] == 'g') {
      char tag;
      std::int64_t gen;
      if (!(ss >> tag >> gen)) throw ParseError(line_no, "malformed generation header");
      records.push_back({gen, {}});
      continue;
    }
    if (records.empty()) throw ParseError(line_no, "member line before generation header");
    std::vector<int> ids;
    int v;
    while (ss >> v) {
      if (v < 1) throw ParseError(line_no, "vertex ids are 1-based");
      ids.push_back(v);
    }
    if (!ss.eof()) throw ParseError(line_no, "malformed member line");
    records.back().members.push_back(std::move(ids));
  }
  return records;
}

std::vector<LogRecord> to_records(std::span<const GenerationLog> logs) {
  std::vector<LogRecord> records;
  records.reserve(logs.size());
  for (const auto& log : logs) {
    LogRecord r{log.generation, {}};
    r.members.reserve(log.population.size());
    for (const auto& member : log.population) r.members.push_back(to_one_based(member));
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace mcp
