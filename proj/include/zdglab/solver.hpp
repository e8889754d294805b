#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zdglab/bitset.hpp"
#include "zdglab/graph.hpp"

namespace zdg {

struct SolveBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> time_hint;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
};

enum class SolveStatus { Exact, Aborted };

const char* to_string(SolveStatus s);

struct SolveResult {
  std::uint64_t value = 0;  // total weight of the witness (its size when unweighted)
  Bitset witness;
  std::uint64_t nodes = 0;
  SolveStatus status = SolveStatus::Exact;

  bool exact() const { return status == SolveStatus::Exact; }
};

bool is_independent(const Graph& g, const Bitset& s);
bool is_clique(const Graph& g, const Bitset& s);
bool is_dominating(const Graph& g, const Bitset& s);

SolveResult max_clique(const Graph& g, const SolveBudget& budget = {});
SolveResult max_weight_clique(const Graph& g, std::span<const std::uint64_t> weights,
                              const SolveBudget& budget = {});
SolveResult max_independent_set(const Graph& g, const SolveBudget& budget = {});
SolveResult max_weight_independent_set(const Graph& g, std::span<const std::uint64_t> weights,
                                       const SolveBudget& budget = {});

struct IndependentSetEnumeration {
  std::size_t alpha = 0;
  std::vector<Bitset> sets;  // lexicographic order of member lists
  bool truncated = false;    // cap reached
  bool aborted = false;      // node budget ran out, list incomplete
};

IndependentSetEnumeration enumerate_maximum_independent_sets(const Graph& g,
                                                             std::size_t cap = 10'000,
                                                             const SolveBudget& budget = {});

SolveResult min_dominating_set(const Graph& g, const SolveBudget& budget = {},
                               std::size_t guard = 64);

}  // namespace zdg
