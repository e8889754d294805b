#include "zdglab/ideal.hpp"

#include <algorithm>
#include <map>

#include "zdglab/error.hpp"

namespace zdg {

namespace {

// Additive closure of {r*g : r in R, g in members}; in a finite ring this is
// the ideal generated by `members`.
void close_ideal(const Ring& ring, Bitset& members) {
  members.set(ring.zero());
  const auto gens = members.members();
  for (auto g : gens)
    for (Elem r = 0; r < ring.size(); ++r) members.set(ring.mul(r, static_cast<Elem>(g)));
  std::vector<Elem> current;
  for (auto i : members.members()) current.push_back(static_cast<Elem>(i));
  for (std::size_t head = 0; head < current.size(); ++head)
    for (std::size_t j = 0; j <= head; ++j) {
      const Elem s = ring.add(current[head], current[j]);
      if (!members.test(s)) {
        members.set(s);
        current.push_back(s);
      }
    }
}

}  // namespace

Ideal ideal_from_generators(const Ring& ring, std::span<const Elem> gens) {
  Ideal ideal;
  ideal.ring = &ring;
  ideal.members = Bitset(ring.size());
  for (Elem g : gens) {
    if (g >= ring.size())
      throw Error(ErrorKind::InvalidParameter, "generator index out of range");
    ideal.members.set(g);
    ideal.generators.push_back(g);
  }
  close_ideal(ring, ideal.members);
  return ideal;
}

Ideal zero_ideal(const Ring& ring) {
  const Elem z = ring.zero();
  return ideal_from_generators(ring, std::span<const Elem>(&z, 1));
}

bool is_ideal(const Ring& ring, const Bitset& subset) {
  if (!subset.test(ring.zero())) return false;
  const auto m = subset.members();
  for (auto a : m) {
    if (!subset.test(ring.neg(static_cast<Elem>(a)))) return false;
    for (auto b : m)
      if (!subset.test(ring.add(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
    for (Elem r = 0; r < ring.size(); ++r)
      if (!subset.test(ring.mul(r, static_cast<Elem>(a)))) return false;
  }
  return true;
}

Quotient quotient_ring(const Ring& ring, const Ideal& ideal) {
  const std::size_t n = ring.size();
  constexpr Elem unassigned = ~Elem{0};
  std::vector<Elem> proj(n, unassigned);
  std::vector<Elem> reps;
  const auto members = ideal.members.members();
  for (Elem a = 0; a < n; ++a) {
    if (proj[a] != unassigned) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (auto m : members) proj[ring.add(a, static_cast<Elem>(m))] = id;
  }
  const std::size_t q = reps.size();
  if (q < 2) throw Error(ErrorKind::InvalidParameter, "quotient by an improper ideal");
  std::vector<Elem> add(q * q), mul(q * q);
  std::vector<std::string> labels(q);
  for (std::size_t i = 0; i < q; ++i) {
    labels[i] = ring.label(reps[i]) + "+I";
    for (std::size_t j = 0; j < q; ++j) {
      add[i * q + j] = proj[ring.add(reps[i], reps[j])];
      mul[i * q + j] = proj[ring.mul(reps[i], reps[j])];
    }
  }
  Ring r(q, std::move(add), std::move(mul), proj[ring.zero()], proj[ring.one()],
         std::move(labels), Construction::Table, ring.name() + "/I");
  return {std::move(r), std::move(proj)};
}

bool is_proper(const Ring& ring, const Ideal& ideal) { return !ideal.contains(ring.one()); }

bool is_prime_ideal(const Ring& ring, const Ideal& ideal) {
  if (!is_proper(ring, ideal)) return false;
  const std::size_t n = ring.size();
  for (Elem a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = a; b < n; ++b)
      if (!ideal.contains(b) && ideal.contains(ring.mul(a, b))) return false;
  }
  return true;
}

std::vector<Elem> annihilator(const Ring& ring, std::span<const Elem> subset) {
  std::vector<Elem> out;
  for (Elem r = 0; r < ring.size(); ++r)
    if (std::all_of(subset.begin(), subset.end(),
                    [&](Elem s) { return ring.mul(r, s) == ring.zero(); }))
      out.push_back(r);
  return out;
}

LocalStructure local_structure(const Ring& ring) {
  const auto u = units(ring);
  Bitset non_units(ring.size());
  non_units.set_all();
  for (Elem x : u) non_units.reset(x);
  LocalStructure ls;
  if (!is_ideal(ring, non_units)) return ls;
  ls.is_local = true;
  Ideal m;
  m.ring = &ring;
  m.members = non_units;
  for (auto i : non_units.members()) m.generators.push_back(static_cast<Elem>(i));
  ls.maximal_ideal = std::move(m);
  return ls;
}

bool square_is_zero(const Ring& ring, const Ideal& m) {
  const auto mem = m.members.members();
  for (auto a : mem)
    for (auto b : mem)
      if (ring.mul(static_cast<Elem>(a), static_cast<Elem>(b)) != ring.zero()) return false;
  return true;
}

std::vector<Ideal> enumerate_ideals(const Ring& ring, std::size_t size_guard) {
  if (ring.size() > size_guard)
    throw Error(ErrorKind::SizeLimit, "ideal enumeration limited to rings of size <= " +
                                          std::to_string(size_guard));
  auto key = [](const Bitset& b) { return b.members(); };
  std::map<std::vector<std::size_t>, Ideal> found;
  std::vector<Ideal> frontier;
  for (Elem a = 0; a < ring.size(); ++a) {
    auto id = ideal_from_generators(ring, std::span<const Elem>(&a, 1));
    if (found.emplace(key(id.members), id).second) frontier.push_back(id);
  }
  // Join pairs until nothing new appears.
  std::vector<Ideal> all = frontier;
  while (!frontier.empty()) {
    std::vector<Ideal> next;
    for (const auto& x : frontier)
      for (std::size_t j = 0; j < all.size(); ++j) {
        Ideal joined;
        joined.ring = &ring;
        joined.members = x.members | all[j].members;
        if (found.count(key(joined.members))) continue;
        close_ideal(ring, joined.members);
        joined.generators = x.generators;
        joined.generators.insert(joined.generators.end(), all[j].generators.begin(),
                                 all[j].generators.end());
        if (found.emplace(key(joined.members), joined).second) next.push_back(joined);
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<Ideal> out;
  for (auto& [k, v] : found) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a.members, b.members);
  });
  return out;
}

}  // namespace zdg
