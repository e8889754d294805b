#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zdglab/graph.hpp"
#include "zdglab/ring.hpp"
#include "zdglab/solver.hpp"

namespace zdg {

// Inconclusive covers guard skips and capped enumerations.
enum class Severity { Match, PaperDiscrepancy, SolverAbort, ConstructionIssue, Inconclusive };

const char* to_string(Severity s);

struct Finding {
  Severity severity = Severity::Match;
  std::string subject;
  std::string metric;
  std::string computed;
  std::string expected;
  std::string witness;
  std::string note;
  std::string group;  // markdown section
};

struct Report {
  std::string title;
  std::string tool_version;
  std::string timestamp;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<Finding> findings;

  std::map<Severity, std::size_t> counts() const;
  std::size_t count(Severity s) const;
};

struct VerifyOptions {
  SolveBudget budget;
  RingLimits limits;
  HamiltonOptions hamilton;
  std::size_t domination_guard = 64;
  std::size_t enumeration_cap = 10'000;
  /// Subjects run concurrently; 0 picks hardware concurrency.
  unsigned workers = 1;
  /// JSON-lines file of finished subjects; reused on the next run. Empty disables.
  std::string journal;
  /// Largest |R| for which sweep_field_products also solves the concrete graph.
  std::uint64_t concrete_max = 512;

  std::vector<std::pair<std::string, std::string>> snapshot() const;
};

inline constexpr const char* kToolVersion = "0.3.0";

Report reproduce_tables(const VerifyOptions& opts = {});
Report sweep_field_products(std::uint64_t max_ring_size, std::pair<std::size_t, std::size_t> k_range,
                            const VerifyOptions& opts = {});
Report sweep_ideals(std::uint64_t max_ring_size, const VerifyOptions& opts = {});
Report sweep_structure_theorems(std::uint32_t n_max, const VerifyOptions& opts = {});

enum class ReportFormat { Json, Csv, Markdown };
ReportFormat parse_report_format(const std::string& s);
const char* extension(ReportFormat f);

std::string render_report(const Report& r, ReportFormat f);
/// Throws Io with the path on failure.
void write_report(const Report& r, ReportFormat f, const std::string& path);

/// 0 clean, 1 discrepancies or aborts, 2 construction problems.
int exit_code(const Report& r);

/// "K_{10}" and "K_10" compare equal.
std::string normalize_shape(const std::string& s);

/// Digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b);

struct ExhaustiveInvariants {
  std::size_t alpha = 0, gamma = 0, omega = 0;
};

/// Plain 2^n scan; n <= 24.
ExhaustiveInvariants exhaustive_invariants(const Graph& g);

}  // namespace zdg
