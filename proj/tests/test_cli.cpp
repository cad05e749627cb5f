// End-to-end tests of the installed command line surface. The binary path
// arrives via the MAXCLIQUE_BIN environment variable, set by ctest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mcp/bench.hpp"
#include "mcp/dimacs.hpp"
#include "mcp/generator.hpp"

using namespace mcp;
namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

CommandResult run(const std::string& args) {
  const char* bin = std::getenv("MAXCLIQUE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "MAXCLIQUE_BIN must point at the maxclique binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("maxclique_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string write_graph(const TempDir& dir, const Graph& g, const std::string& filename) {
  const fs::path p = dir.path / filename;
  std::ofstream out(p);
  write_dimacs(g, out);
  return p.string();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("solve").exit_code == 2);
  CHECK(run("no-such-subcommand").exit_code == 2);
  CHECK(run("solve --graph x.clq --algo fga --no-such-flag").exit_code == 2);
  CHECK(run("").exit_code == 2);  // a subcommand is required
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("oracle prints the size and a 1-based witness") {
  TempDir dir;
  const std::string k5 = write_graph(dir, complete_graph(5), "k5.clq");
  const CommandResult r = run("oracle " + k5);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "5\n1 2 3 4 5\n");

  // the vertex cap is a runtime failure, not a usage error
  const std::string big = write_graph(dir, random_gnp("big", 45, 0.3, 1), "big.clq");
  CHECK(run("oracle " + big).exit_code == 1);
  CHECK(run("oracle " + big + " --max-vertices 50").exit_code == 0);
}

TEST_CASE("parse-check prints name, n, m, density") {
  TempDir dir;
  const std::string tri = write_graph(dir, complete_graph(3), "triangle.clq");
  const CommandResult r = run("parse-check " + tri);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "triangle 3 3 1.000\n");

  std::ofstream(dir.path / "bad.clq") << "p edge 2 1\ne 1 5\n";
  CHECK(run("parse-check " + (dir.path / "bad.clq").string()).exit_code == 1);
  CHECK(run("parse-check " + (dir.path / "absent.clq").string()).exit_code == 1);
}

TEST_CASE("solve prints a verifiable clique and is byte-stable") {
  TempDir dir;
  const Graph g = random_gnp("solveme", 40, 0.6, 9);
  const std::string file = write_graph(dir, g, "solveme.clq");

  const CommandResult fga = run("solve --graph " + file + " --algo fga --seed 1 --pop 8 --gens 5");
  CHECK(fga.exit_code == 0);
  {
    std::istringstream out(fga.output);
    int size = 0;
    REQUIRE(static_cast<bool>(out >> size));
    std::vector<int> clique0;
    int v;
    while (out >> v) clique0.push_back(v - 1);
    CHECK(static_cast<int>(clique0.size()) == size);
    CHECK(is_maximal_clique(g, make_vertex_set(g, clique0)));
  }

  const std::string mc_cmd = "solve --graph " + file + " --algo mc --seed 4 --budget 100";
  const CommandResult once = run(mc_cmd);
  const CommandResult twice = run(mc_cmd);
  CHECK(once.exit_code == 0);
  CHECK(once.output == twice.output);
}

TEST_CASE("solve writes logs that analyze consumes") {
  TempDir dir;
  const std::string file = write_graph(dir, random_gnp("traj", 30, 0.6, 2), "traj.clq");
  const std::string log = (dir.path / "run.log").string();
  const std::string csv = (dir.path / "out.csv").string();

  CHECK(run("solve --graph " + file + " --algo fga --seed 3 --pop 6 --gens 4 --log " + log)
            .exit_code == 0);
  CHECK(fs::exists(log));

  const CommandResult r = run("analyze --log " + log + " --out " + csv);
  CHECK(r.exit_code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "generation,node,count");

  CHECK(run("analyze --log " + (dir.path / "absent.log").string() + " --out " + csv).exit_code ==
        1);
}

TEST_CASE("bench runs a spec and emits the three artifacts deterministically") {
  TempDir dir;
  const std::string g1 = write_graph(dir, random_gnp("bg1", 25, 0.5, 1), "bg1.clq");
  const std::string g2 = write_graph(dir, complete_graph(8), "k8.clq");
  const std::string spec_path = (dir.path / "spec.json").string();
  std::ofstream(spec_path) << R"({
    "graphs": [")" << g1 << R"(", ")" << g2 << R"("],
    "algorithms": [
      {"id": "fga", "algo": "fga", "population": 6, "generations": 4},
      {"id": "mc", "algo": "mc", "budget": 54}
    ],
    "runs": 2,
    "base_seed": 5
  })";

  const std::string out1 = (dir.path / "out1").string();
  const std::string out2 = (dir.path / "out2").string();
  const CommandResult r1 = run("bench --spec " + spec_path + " --out " + out1 + " --workers 2");
  CHECK(r1.exit_code == 0);
  CHECK(fs::exists(fs::path(out1) / "report.csv"));
  CHECK(fs::exists(fs::path(out1) / "report.json"));
  CHECK(fs::exists(fs::path(out1) / "comparison.txt"));
  CHECK(r1.output.find("summary:") != std::string::npos);

  const CommandResult r2 = run("bench --spec " + spec_path + " --out " + out2 + " --workers 4");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const Report a = report_from_json(slurp(fs::path(out1) / "report.json"));
  Report b = report_from_json(slurp(fs::path(out2) / "report.json"));
  b.spec.workers = a.spec.workers;  // worker count is the only intended difference
  CHECK(a.same_outcome(b));
  CHECK(slurp(fs::path(out1) / "report.csv") == slurp(fs::path(out2) / "report.csv"));
}

TEST_CASE("bench ignores unreadable graphs but keeps going") {
  TempDir dir;
  const std::string ok = write_graph(dir, complete_graph(5), "ok.clq");
  const std::string spec_path = (dir.path / "spec.json").string();
  std::ofstream(spec_path) << R"({
    "graphs": [")" << (dir.path / "missing.clq").string() << R"(", ")" << ok << R"("],
    "algorithms": [{"id": "mc", "algo": "mc", "budget": 5}],
    "runs": 1
  })";
  const CommandResult r = run("bench --spec " + spec_path + " --out " + (dir.path / "o").string());
  CHECK(r.exit_code == 0);  // soft failure: cells marked, run completes
}
