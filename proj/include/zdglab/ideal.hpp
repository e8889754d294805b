#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zdglab/bitset.hpp"
#include "zdglab/ring.hpp"

namespace zdg {

/// An ideal of a ring, stored as a membership bitset over element indices.
/// The ring must outlive the ideal.
struct Ideal {
  const Ring* ring = nullptr;
  Bitset members;
  std::vector<Elem> generators;

  std::size_t size() const { return members.count(); }
  bool contains(Elem a) const { return members.test(a); }
};

Ideal ideal_from_generators(const Ring& ring, std::span<const Elem> gens);
Ideal zero_ideal(const Ring& ring);

/// Checks the ideal axioms on an arbitrary subset.
bool is_ideal(const Ring& ring, const Bitset& subset);

struct Quotient {
  Ring ring;
  std::vector<Elem> projection;  // element of R -> coset index in R/I
};

/// R/I as a table ring. Each coset is represented by its smallest element index.
Quotient quotient_ring(const Ring& ring, const Ideal& ideal);

bool is_proper(const Ring& ring, const Ideal& ideal);
bool is_prime_ideal(const Ring& ring, const Ideal& ideal);

/// {r : r*s = 0 for every s in subset}
std::vector<Elem> annihilator(const Ring& ring, std::span<const Elem> subset);

struct LocalStructure {
  bool is_local = false;
  std::optional<Ideal> maximal_ideal;
};

LocalStructure local_structure(const Ring& ring);

/// True when m*m = {0}.
bool square_is_zero(const Ring& ring, const Ideal& m);

/// All ideals, ordered by (size, member list).
std::vector<Ideal> enumerate_ideals(const Ring& ring, std::size_t size_guard = 64);

}  // namespace zdg
