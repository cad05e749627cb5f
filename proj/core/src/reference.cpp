#include "mcp/reference.hpp"

#include <array>
#include <cctype>
#include <cmath>

namespace mcp {

namespace {

// name, n, m, density, best_known, fga_max, fga_chrom, mc_max, mc_chrom,
// original_fga_max, reported_best
constexpr std::array<ReferenceEntry, 34> kTable{{
    {"C125.9", 125, 6963, 0.898, 34, 34, 113, 34, 46, 34, 34},
    {"C250.9", 250, 27984, 0.899, 44, 44, 8867, 44, 1595, 44, 44},
    {"C500.9", 500, 112332, 0.900, 57, 57, 147458, 57, 36020, 56, 57},
    {"C1000.9", 1000, 450079, 0.901, 68, 67, 379135, 66, 143089, 65, 68},
    {"C2000.9", 2000, 1799532, 0.900, 80, 75, 238288, 74, 27355, 74, 80},
    {"DSJC500_5", 500, 125248, 0.502, 13, 15, 121015, 15, 851, 15, 15},
    {"DSJC1000_5", 1000, 499652, 0.500, 15, 13, 7630, 13, 93, 13, 13},
    {"C2000.5", 2000, 999836, 0.500, 16, 16, 74217, 16, 3502, 16, 16},
    {"C4000.5", 4000, 4000268, 0.500, 18, 17, 110605, 17, 6125, 17, 18},
    {"brock200_2", 200, 9876, 0.496, 12, 12, 174045, 12, 575, 12, 12},
    {"brock200_4", 200, 13089, 0.658, 17, 16, 1668, 17, 6510, 16, 17},
    {"brock400_2", 400, 59786, 0.749, 29, 25, 81173, 29, 11579, 25, 29},
    {"brock400_4", 400, 59765, 0.749, 33, 25, 23050, 33, 2171, 25, 33},
    {"brock800_2", 800, 208166, 0.651, 24, 21, 125993, 21, 9114, 21, 24},
    {"brock800_4", 800, 207643, 0.650, 26, 21, 266016, 21, 10965, 20, 26},
    {"gen200_p0.9_44", 200, 17910, 0.900, 44, 44, 14435, 44, 4899, 44, 44},
    {"gen200_p0.9_55", 200, 17910, 0.900, 55, 55, 738, 55, 189, 55, 55},
    {"gen400_p0.9_55", 400, 71820, 0.900, 55, 52, 89909, 53, 151776, 55, 55},
    {"gen400_p0.9_65", 400, 71820, 0.900, 65, 65, 21141, 64, 29631, 65, 65},
    {"gen400_p0.9_75", 400, 71820, 0.900, 75, 75, 5646, 75, 885, 75, 75},
    {"hamming8-4", 256, 20864, 0.639, 16, 40, 14080, 40, 861, 40, 40},
    {"hamming10-4", 1024, 434176, 0.829, 40, 16, 3, 16, 1, 16, 16},
    {"keller4", 171, 9435, 0.649, 11, 11, 124, 11, 2, 11, 11},
    {"keller5", 776, 225990, 0.752, 27, 27, 28081, 27, 64, 27, 27},
    {"keller6", 3361, 4619898, 0.818, 59, 55, 232600, 56, 15958, 57, 59},
    {"p_hat300-1", 300, 10933, 0.244, 8, 8, 164, 8, 140, 8, 8},
    {"p_hat300-2", 300, 21928, 0.489, 25, 25, 109, 25, 82, 25, 25},
    {"p_hat300-3", 300, 33390, 0.744, 36, 36, 602, 36, 2201, 36, 36},
    {"p_hat700-1", 700, 60999, 0.249, 11, 11, 710, 11, 5236, 11, 11},
    {"p_hat700-2", 700, 121728, 0.498, 44, 44, 258, 44, 2468, 44, 44},
    {"p_hat700-3", 700, 183010, 0.748, 62, 62, 2589, 62, 492, 62, 62},
    {"p_hat1500-1", 1500, 284923, 0.253, 12, 11, 784, 12, 1778, 11, 12},
    {"p_hat1500-2", 1500, 568960, 0.506, 65, 65, 576, 65, 25330, 65, 65},
    {"p_hat1500-3", 1500, 847244, 0.754, 94, 94, 11399, 94, 8707, 94, 94},
}};

}  // namespace

bool ReferenceEntry::edges_consistent() const {
  const double n = vertices;
  const double d = 2.0 * static_cast<double>(edges) / (n * (n - 1.0));
  return std::llround(d * 1000.0) == std::llround(density * 1000.0);
}

std::span<const ReferenceEntry> reference_table() { return kTable; }

std::string normalize_graph_name(std::string_view name) {
  // strip directory and extension
  if (auto slash = name.find_last_of("/\\"); slash != std::string_view::npos)
    name.remove_prefix(slash + 1);
  for (std::string_view ext : {".b", ".clq", ".txt", ".col"}) {
    if (name.size() > ext.size() && name.ends_with(ext))
      name.remove_suffix(ext.size());
  }
  std::string out;
  out.reserve(name.size());
  for (char ch : name) {
    if (ch == '.' || ch == '-') ch = '_';
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

const ReferenceEntry* find_reference(std::string_view graph_name) {
  const std::string key = normalize_graph_name(graph_name);
  for (const auto& entry : kTable)
    if (normalize_graph_name(entry.name) == key) return &entry;
  return nullptr;
}

}  // namespace mcp
