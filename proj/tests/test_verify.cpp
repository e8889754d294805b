#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "zdglab/error.hpp"
#include "zdglab/verify.hpp"

using namespace zdg;

namespace {

Report strip_time(Report r) {
  r.timestamp.clear();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Finding* find(const Report& r, const std::string& subject_prefix, const std::string& metric) {
  for (const auto& f : r.findings)
    if (f.subject.rfind(subject_prefix, 0) == 0 && f.metric == metric) return &f;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("empty report renders") {
  Report r;
  r.title = "empty";
  const auto j = nlohmann::json::parse(render_report(r, ReportFormat::Json));
  CHECK(j["findings"].is_array());
  CHECK(j["findings"].empty());
  CHECK(exit_code(r) == 0);
}

TEST_CASE("one match gives one csv data row") {
  Report r;
  r.findings.push_back({Severity::Match, "s", "m", "1", "1", "{a,b}", "", "g"});
  const auto csv = render_report(r, ReportFormat::Csv);
  CHECK(csv == "severity,subject,metric,computed,expected,witness,note\nMatch,s,m,1,1,\"{a,b}\",\n");
}

TEST_CASE("exit codes") {
  Report r;
  r.findings.push_back({Severity::Inconclusive, "s", "m", "", "", "", "", ""});
  CHECK(exit_code(r) == 0);
  r.findings.push_back({Severity::PaperDiscrepancy, "s", "m2", "", "", "", "", ""});
  CHECK(exit_code(r) == 1);
  r.findings.push_back({Severity::ConstructionIssue, "s", "m3", "", "", "", "", ""});
  CHECK(exit_code(r) == 2);
}

TEST_CASE("table reproduction") {
  const auto r = reproduce_tables();
  CHECK(r.findings.size() == 106);
  CHECK(r.count(Severity::Match) >= 60);
  const auto* z6 = find(r, "v03#01 Z6", "row");
  REQUIRE(z6);
  CHECK(z6->severity == Severity::Match);
  const auto* bad = find(r, "v05#04 Z2xZ2[X]/(X^2)", "row");
  REQUIRE(bad);
  CHECK(bad->severity == Severity::PaperDiscrepancy);
  CHECK(bad->note.find("alpha computed 3, printed 2") != std::string::npos);
  for (const auto& f : r.findings) CHECK(f.severity != Severity::SolverAbort);

  const auto md = render_report(r, ReportFormat::Markdown);
  std::size_t last = 0;
  for (int v = 1; v <= 14; ++v) {
    const auto pos = md.find("## Vertices " + std::to_string(v) + "\n");
    REQUIRE(pos != std::string::npos);
    CHECK(pos > last);
    last = pos;
  }
}

TEST_CASE("reports are deterministic across worker counts") {
  VerifyOptions one, three;
  three.workers = 3;
  const auto a = strip_time(sweep_structure_theorems(60, one));
  const auto b = strip_time(sweep_structure_theorems(60, three));
  CHECK(render_report(a, ReportFormat::Json) == render_report(b, ReportFormat::Json));
  const auto c = strip_time(sweep_field_products(120, {2, 4}, three));
  const auto d = strip_time(sweep_field_products(120, {2, 4}, one));
  CHECK(render_report(c, ReportFormat::Csv) == render_report(d, ReportFormat::Csv));
}

TEST_CASE("journal resumes finished subjects") {
  const auto dir = std::filesystem::temp_directory_path() / "zdglab_journal_test";
  std::filesystem::remove_all(dir);
  VerifyOptions o;
  o.journal = (dir / "j.jsonl").string();
  const auto first = strip_time(sweep_structure_theorems(30, o));
  const auto lines = slurp(o.journal);
  CHECK(std::count(lines.begin(), lines.end(), '\n') > 20);
  const auto second = strip_time(sweep_structure_theorems(30, o));
  CHECK(render_report(first, ReportFormat::Csv) == render_report(second, ReportFormat::Csv));
  // No new lines: every subject came from the journal.
  CHECK(slurp(o.journal) == lines);
  std::filesystem::remove_all(dir);
}

TEST_CASE("write_report surfaces the path on failure") {
  Report r;
  try {
    write_report(r, ReportFormat::Json, "/proc/zdglab/none.json");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
    CHECK(std::string(e.what()).find("/proc/zdglab/none.json") != std::string::npos);
  }
}

TEST_CASE("field sweep flags the printed examples") {
  const auto r = sweep_field_products(100, {3, 3});
  const auto* nine = find(r, "example three Z5xZ2xZ2", "printed");
  REQUIRE(nine);
  CHECK(nine->severity == Severity::PaperDiscrepancy);
  CHECK(nine->computed == "12");
  CHECK(nine->expected == "9");
  const auto* f = find(r, "example three Z5xZ2xZ2", "formula");
  REQUIRE(f);
  CHECK(f->severity == Severity::Match);
}

TEST_CASE("ideal sweep on tiny rings") {
  const auto r = sweep_ideals(12);
  for (const auto& f : r.findings)
    if (f.metric == "bounds" || f.metric.rfind("transfer", 0) == 0 || f.metric == "example")
      CHECK(f.severity == Severity::Match);
  CHECK(find(r, "example Zn(16)", "example"));
}

TEST_CASE("helpers") {
  CHECK(normalize_shape("K_{10}") == normalize_shape("K_10"));
  CHECK(natural_less("Zn(9)", "Zn(10)"));
  CHECK(natural_less("v02#01", "v10#01"));
  CHECK_FALSE(natural_less("a", "a"));
  CHECK(parse_report_format("markdown") == ReportFormat::Markdown);
  CHECK_THROWS_AS(parse_report_format("xml"), Error);
}

TEST_CASE("property: exhaustive scan agrees with the oracle") {
  gen::Rng rng(99);
  for (int i = 0; i < 60; ++i) {
    const Graph g = gen::mixed_graph(rng, 14);
    const auto ex = exhaustive_invariants(g);
    CHECK(ex.alpha == static_cast<std::size_t>(oracle::alpha(g)));
    CHECK(ex.omega == static_cast<std::size_t>(oracle::omega(g)));
    CHECK(ex.gamma == static_cast<std::size_t>(oracle::gamma(g)));
  }
}

}
