// Writes synthetic and deterministically reconstructible benchmark graphs
// in DIMACS clique format.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "mcp/dimacs.hpp"
#include "mcp/generator.hpp"

namespace {

void write(const mcp::Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  mcp::write_dimacs(g, out);
  std::cout << "wrote " << path.string() << " (n=" << g.order() << ", m=" << g.edge_count()
            << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark graph generator"};
  app.require_subcommand(1);

  int n = 100, planted = 0, bits = 8, distance = 4, dim = 4;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string out_file, out_dir, name;
  bool with_keller6 = false;

  auto* gnp = app.add_subcommand("gnp", "Erdos-Renyi G(n,p), optional planted clique");
  gnp->add_option("--n", n)->required();
  gnp->add_option("--p", p)->required();
  gnp->add_option("--seed", seed);
  gnp->add_option("--planted", planted, "force a clique of this size");
  gnp->add_option("--name", name, "graph name (default gnp<n>_<seed>)");
  gnp->add_option("--out", out_file)->required();

  auto* hamming = app.add_subcommand("hamming", "binary words, edges at Hamming distance >= d");
  hamming->add_option("--bits", bits)->required();
  hamming->add_option("--distance", distance)->required();
  hamming->add_option("--out", out_file)->required();

  auto* keller = app.add_subcommand("keller", "benchmark keller<d> instance");
  keller->add_option("--dim", dim)->required();
  keller->add_option("--out", out_file)->required();

  auto* complete = app.add_subcommand("complete", "complete graph K_n");
  complete->add_option("--n", n)->required();
  complete->add_option("--out", out_file)->required();

  auto* cycle = app.add_subcommand("cycle", "cycle graph C_n");
  cycle->add_option("--n", n)->required();
  cycle->add_option("--out", out_file)->required();

  auto* suite = app.add_subcommand(
      "suite", "the deterministically reconstructible benchmark instances");
  suite->add_option("--out", out_dir, "output directory")->required();
  suite->add_flag("--with-keller6", with_keller6, "also write keller6 (large)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gnp) {
      if (name.empty())
        name = "gnp" + std::to_string(n) + "_" + std::to_string(seed);
      write(planted > 0 ? mcp::random_gnp_planted(name, n, p, planted, seed)
                        : mcp::random_gnp(name, n, p, seed),
            out_file);
    } else if (*hamming) {
      write(mcp::hamming_graph(bits, distance), out_file);
    } else if (*keller) {
      write(mcp::keller_graph(dim), out_file);
    } else if (*complete) {
      write(mcp::complete_graph(n), out_file);
    } else if (*cycle) {
      write(mcp::cycle_graph(n), out_file);
    } else if (*suite) {
      std::filesystem::create_directories(out_dir);
      const auto dir = std::filesystem::path(out_dir);
      write(mcp::keller_graph(4), dir / "keller4.clq");
      write(mcp::keller_graph(5), dir / "keller5.clq");
      write(mcp::hamming_graph(8, 4), dir / "hamming8-4.clq");
      write(mcp::hamming_graph(10, 4), dir / "hamming10-4.clq");
      if (with_keller6) write(mcp::keller_graph(6), dir / "keller6.clq");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
