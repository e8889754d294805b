#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "zdglab/cli.hpp"
#include "zdglab/error.hpp"

using namespace zdg;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "zdglab");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("invariants of Z6") {
  const auto r = run({"invariants", "Zn(6)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("shape: K_{1,2}") != std::string::npos);
  CHECK(r.out.find("alpha: 2 ") != std::string::npos);
  CHECK(r.out.find("gamma: 1 ") != std::string::npos);
  CHECK(r.out.find("omega: 2 ") != std::string::npos);
}

TEST_CASE("ideal option with comma labels") {
  const auto r = run({"invariants", "P(Zn(16),Zn(3))", "--ideal", "(0,1)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha: 13 ") != std::string::npos);
}

TEST_CASE("formula") {
  CHECK(run({"formula", "three", "6", "4", "4"}).out.rfind("value: 64\n", 0) == 0);
  CHECK(run({"formula", "three", "4", "6", "4"}).out.rfind("value: 64\n", 0) == 0);
  CHECK(run({"formula", "four", "4", "2", "2", "2"}).out.rfind("value: 80\n", 0) == 0);
  CHECK(run({"formula", "exact", "2", "2", "2", "2", "2"}).out.rfind("value: 160\n", 0) == 0);
  CHECK(run({"formula", "three", "6", "4"}).code == 2);
  CHECK(run({"formula", "seven", "1"}).code == 2);
}

TEST_CASE("verify tables exits 1 with discrepancies") {
  const auto r = run({"verify", "tables", "--format", "csv"});
  CHECK(r.code == 1);
  CHECK(r.out.find("PaperDiscrepancy") != std::string::npos);
}

TEST_CASE("verify writes into --out") {
  const auto dir = std::filesystem::temp_directory_path() / "zdglab_cli_out";
  std::filesystem::remove_all(dir);
  const auto r = run({"verify", "structure", "--n-max", "20", "--out", dir.string(), "--format", "markdown"});
  CHECK(std::filesystem::exists(dir / "structure.md"));
  CHECK(r.out.find("structure.md") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"invariants", "Zq(3)"}).code == 2);
  CHECK(run({"graph", "Zn(6)", "--ideal", "(7)"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("seed is ignored with a warning") {
  const auto a = run({"--seed", "7", "invariants", "Zn(12)"});
  const auto b = run({"invariants", "Zn(12)"});
  CHECK(a.out == b.out);
  CHECK(a.err.find("ignored") != std::string::npos);
}

TEST_CASE("identical invocations give identical output") {
  const auto a = run({"verify", "fields", "--max-size", "60", "--format", "csv"});
  const auto b = run({"verify", "fields", "--max-size", "60", "--format", "csv"});
  CHECK(a.out == b.out);
}

TEST_CASE("catalog") {
  const auto d = run({"catalog", "dump"});
  CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 107);
  CHECK(run({"catalog", "list"}).out.find("Z2xZ2xF4") != std::string::npos);
}

TEST_CASE("config files") {
  cli::Config c;
  cli::parse_config(c, "# comment\nbudget = 1000\nhamilton.guard=20\nformat=csv\n\n");
  CHECK(c.verify.budget.max_nodes == 1000);
  CHECK(c.verify.hamilton.guard == 20);
  CHECK(c.format == ReportFormat::Csv);
  CHECK_THROWS_AS(cli::parse_config(c, "nope=1"), Error);
  CHECK_THROWS_AS(cli::parse_config(c, "budget=0"), Error);
  CHECK_THROWS_AS(cli::parse_config(c, "budget"), Error);
}

TEST_CASE("top-level splitting") {
  CHECK(cli::split_top_level("(0,1),(1,0)") == std::vector<std::string>{"(0,1)", "(1,0)"});
  CHECK(cli::split_top_level("2, 3") == std::vector<std::string>{"2", "3"});
  CHECK(cli::split_top_level("X+1") == std::vector<std::string>{"X+1"});
}

TEST_CASE("graph export") {
  const auto dir = std::filesystem::temp_directory_path() / "zdglab_cli_graph";
  std::filesystem::create_directories(dir);
  const auto dot = (dir / "g.dot").string();
  const auto edges = (dir / "g.txt").string();
  const auto r = run({"graph", "Zn(8)", "--dot", dot, "--edges", edges});
  CHECK(r.code == 0);
  CHECK(std::filesystem::file_size(edges) > 0);
  CHECK(std::filesystem::file_size(dot) > 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("ring info") {
  const auto r = run({"ring", "info", "Zn(12)"});
  CHECK(r.out.find("units: 4") != std::string::npos);
  CHECK(r.out.find("zero-divisors: 7") != std::string::npos);
  CHECK(r.out.find("local: no") != std::string::npos);
  CHECK(r.out.find("decomposable: yes") != std::string::npos);
}

}
