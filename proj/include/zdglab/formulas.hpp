#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdglab/graph.hpp"
#include "zdglab/ideal.hpp"
#include "zdglab/ring.hpp"
#include "zdglab/solver.hpp"

namespace zdg {

/// |F_i*| for a product of fields, largest first.
using Profile = std::vector<std::uint64_t>;

/// Index subsets of {1..k} are bitmasks: bit i stands for factor i+1.
using Subset = std::uint32_t;

void check_profile(const Profile& p);
std::uint64_t subset_weight(const Profile& p, Subset s);
/// "123" for {1,2,3}; comma-separated when k >= 10.
std::string subset_name(Subset s, std::size_t k);
Subset subset_of(std::initializer_list<int> indices);
bool is_intersecting(const std::vector<Subset>& family);
std::uint64_t family_weight(const Profile& p, const std::vector<Subset>& family);

struct FormulaPrediction {
  std::uint64_t value = 0;
  std::string theorem_id;
  std::string case_id;
  std::vector<Subset> witness_subsets;
};

std::uint64_t alpha_standard(const ShapeClass& shape);
std::uint64_t alpha_two_fields(std::uint64_t m, std::uint64_t n);
std::uint64_t alpha_field_times_z4(std::uint64_t m);

FormulaPrediction alpha_three_fields(const Profile& p);
FormulaPrediction alpha_four_fields(const Profile& p);

std::uint64_t five_field_t(const Profile& p);
std::array<std::uint64_t, 7> five_field_deltas(const Profile& p);
FormulaPrediction alpha_five_fields(const Profile& p);

struct ExactFamily {
  SolveResult result;
  std::vector<Subset> subsets;
};

/// α of the product via the maximum-weight intersecting family of index subsets.
ExactFamily alpha_field_product_exact(const Profile& p, const SolveBudget& budget = {});

/// The subset-disjointness graph with its weights (vertex i is subset i+1).
Graph disjointness_graph(const Profile& p, std::vector<std::uint64_t>& weights);

struct LowerBound {
  std::uint64_t value = 0;
  std::vector<Subset> witness_subsets;
  bool witness_is_independent = false;
  std::optional<std::pair<Subset, Subset>> disjoint_pair;
};

LowerBound general_lower_bound(const Profile& p);

struct LocalBounds {
  bool square_zero = false;
  std::optional<std::uint64_t> exact;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::size_t zero_divisors = 0;  // |Z*(R)|
  std::size_t ann_star = 0;       // |Ann(Z(R))*|
};

/// Throws InvalidParameter for non-local rings and fields.
LocalBounds local_ring_alpha_bounds(const Ring& ring);

enum class FormulaVerdict { Every, MaxOnly, Neither, Inconclusive };
const char* to_string(FormulaVerdict v);

struct IdealAnalysis {
  std::uint64_t alpha_quotient = 0;
  std::uint64_t alpha_ideal_graph = 0;
  std::size_t ideal_size = 0;
  bool exact = true;
  bool bound_ok = false;
  std::vector<std::uint64_t> formula_values;  // one per α-set of Γ(R/I), in enumeration order
  FormulaVerdict verdict = FormulaVerdict::Inconclusive;
  bool formula_matches = false;  // holds for every α-set
  bool lifts_independent = true;
  bool formula_sets_independent = true;
  bool enumeration_truncated = false;
};

/// Throws InvalidParameter when the ideal is improper or prime.
IdealAnalysis ideal_alpha_analysis(const Ring& ring, const Ideal& ideal,
                                   const SolveBudget& budget = {}, std::size_t cap = 10'000);

/// Fields GF(n_i + 1); throws InvalidParameter when some n_i + 1 is not a prime power.
std::vector<Ring> realize_profile(const Profile& p, const RingLimits& limits = {});
std::uint64_t profile_ring_size(const Profile& p);
/// Sorted profiles with k factors, each n_i + 1 a prime power, product of orders <= max_size.
std::vector<Profile> enumerate_profiles(std::size_t k, std::uint64_t max_size);

}  // namespace zdg
