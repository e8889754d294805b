#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zdglab/ring.hpp"

namespace zdg {

using Exponents = std::vector<std::uint32_t>;

/// Multivariate polynomial with coefficients in Z_n.
struct Polynomial {
  std::uint32_t modulus = 0;
  std::map<Exponents, std::uint32_t> terms;  // zero coefficients never stored

  bool is_zero() const { return terms.empty(); }
  void add_term(const Exponents& e, std::int64_t coeff);
};

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            std::uint32_t modulus);

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& vars);

/// Z_n[vars]/(relations). Every variable needs either a univariate relation
/// with unit leading coefficient, or must be nilpotent modulo the relations
/// (proved by reducing a power of it to zero); construction fails otherwise.
struct PresentedQuotientSpec {
  std::uint32_t modulus = 2;
  std::vector<std::string> variables;
  std::vector<Polynomial> relations;
  std::string name;
};

/// Parses `<n>;<vars>;<relations>` (the body of a Q(...) spec).
PresentedQuotientSpec parse_presented_quotient(std::string_view body);

Ring make_presented_quotient(const PresentedQuotientSpec& spec, const RingLimits& limits = {});

namespace detail {

/// The canonical-representative map of a presented quotient, exposed for tests.
struct QuotientModule {
  std::uint32_t modulus;
  std::vector<Exponents> basis;       // residue monomials, lowest degree first
  std::vector<std::uint32_t> coset;   // code -> coset index
  std::vector<std::uint64_t> reps;    // coset index -> code of canonical vector
  std::uint64_t canonical(std::uint64_t code) const { return reps[coset[code]]; }
};

QuotientModule build_quotient_module(const PresentedQuotientSpec& spec, const RingLimits& limits);

}  // namespace detail

}  // namespace zdg
