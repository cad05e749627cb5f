#include "mcp/trajectory.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace mcp {

namespace {

Trajectory count_records(std::span<const LogRecord> records, std::vector<int> nodes) {
  if (records.empty()) throw std::domain_error("trajectory requires at least one generation");
  if (nodes.empty()) throw std::domain_error("trajectory requires a non-empty best set");
  std::sort(nodes.begin(), nodes.end());

  Trajectory t;
  t.nodes = std::move(nodes);
  t.population_size = 0;
  for (const auto& rec : records)
    t.population_size = std::max(t.population_size, static_cast<int>(rec.members.size()));

  t.generations.reserve(records.size());
  t.counts.reserve(records.size());
  t.mean_frequency.reserve(records.size());
  for (const auto& rec : records) {
    std::vector<int> row(t.nodes.size(), 0);
    for (const auto& member : rec.members) {
      for (std::size_t i = 0; i < t.nodes.size(); ++i)
        if (std::find(member.begin(), member.end(), t.nodes[i]) != member.end()) ++row[i];
    }
    double sum = 0;
    for (int c : row) sum += c;
    t.generations.push_back(rec.generation);
    t.mean_frequency.push_back(sum / static_cast<double>(row.size()));
    t.counts.push_back(std::move(row));
  }
  return t;
}

}  // namespace

Trajectory node_frequency_trajectory(std::span<const GenerationLog> logs, const Bitset& best) {
  if (logs.empty()) throw std::domain_error("trajectory requires at least one generation");
  if (best.none()) throw std::domain_error("trajectory requires a non-empty best set");
  return count_records(to_records(logs), to_one_based(best));
}

Trajectory node_frequency_trajectory(std::span<const LogRecord> records,
                                     const std::vector<int>& best_one_based) {
  return count_records(records, best_one_based);
}

std::vector<int> best_member_of_log(std::span<const LogRecord> records) {
  std::vector<int> best;
  for (const auto& rec : records)
    for (const auto& member : rec.members)
      if (member.size() > best.size()) best = member;
  std::sort(best.begin(), best.end());
  return best;
}

void write_trajectory_csv(const Trajectory& t, std::ostream& out) {
  out << "generation,node,count\n";
  for (std::size_t g = 0; g < t.counts.size(); ++g)
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
      out << t.generations[g] << "," << t.nodes[i] << "," << t.counts[g][i] << "\n";
  char buf[64];
  for (std::size_t g = 0; g < t.counts.size(); ++g) {
    std::snprintf(buf, sizeof buf, "%.6g", t.mean_frequency[g]);
    out << t.generations[g] << ",mean," << buf << "\n";
  }
}

}  // namespace mcp
