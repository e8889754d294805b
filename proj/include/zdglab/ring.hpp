#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zdg {

using Elem = std::uint32_t;

enum class Construction { Zn, GaloisField, PresentedQuotient, Product, Table };

const char* to_string(Construction c);

struct RingLimits {
  std::size_t size_bound = 512;
  /// Upper bound on the intermediate free module used by presented quotients.
  std::size_t work_bound = std::size_t{1} << 22;
};

/// A finite commutative ring with identity, stored as full operation tables.
/// Elements are addressed by dense indices 0..size()-1. Immutable once built.
class Ring {
 public:
  Ring(std::size_t size, std::vector<Elem> add_table, std::vector<Elem> mul_table,
       Elem zero, Elem one, std::vector<std::string> labels, Construction construction,
       std::string name);

  std::size_t size() const { return size_; }
  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Construction construction() const { return construction_; }
  const std::string& name() const { return name_; }

  /// Looks up an element by its display label (whitespace-insensitive).
  std::optional<Elem> find_label(std::string_view label) const;

 private:
  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_;
  Elem one_;
  std::vector<std::string> labels_;
  Construction construction_;
  std::string name_;
};

struct RingElement {
  const Ring* ring;
  Elem index;

  friend RingElement operator+(RingElement a, RingElement b) {
    return {a.ring, a.ring->add(a.index, b.index)};
  }
  friend RingElement operator*(RingElement a, RingElement b) {
    return {a.ring, a.ring->mul(a.index, b.index)};
  }
  friend bool operator==(RingElement a, RingElement b) { return a.index == b.index; }
};

Ring make_zn(std::uint32_t n, const RingLimits& limits = {});

/// GF(p^k). Without an explicit polynomial the fixed defaults are used for
/// F4 (X^2+X+1), F8 (X^3+X+1) and F9 (X^2+1); other orders take the first
/// monic irreducible in coefficient order. Coefficients are lowest degree first.
Ring make_gf(std::uint32_t p, std::uint32_t k,
             std::optional<std::vector<std::uint32_t>> irreducible = std::nullopt,
             const RingLimits& limits = {});

Ring make_product(std::span<const Ring> factors, const RingLimits& limits = {});

std::vector<Elem> units(const Ring& ring);
/// Nonzero x with xy = 0 for some nonzero y.
std::vector<Elem> zero_divisors(const Ring& ring);
std::vector<Elem> idempotents(const Ring& ring);
bool is_field(const Ring& ring);
bool is_decomposable(const Ring& ring);

/// Exhaustive check of the commutative ring axioms. Returns a description of
/// the first violation, or nullopt.
std::optional<std::string> find_axiom_violation(const Ring& ring);

bool is_prime(std::uint64_t n);
/// Returns (p, k) when q = p^k with k >= 1.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

// Polynomials over Z_p in one variable, coefficients lowest degree first.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace zdg
