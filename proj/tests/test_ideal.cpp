#include "doctest.h"

#include <numeric>

#include "gen.hpp"
#include "zdglab/error.hpp"
#include "zdglab/ideal.hpp"
#include "zdglab/ring_spec.hpp"

using namespace zdg;

namespace {

Ideal principal(const Ring& r, Elem g) { return ideal_from_generators(r, std::span<const Elem>(&g, 1)); }

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

}  // namespace

TEST_SUITE("ideal") {

TEST_CASE("ideals of Z_n are the divisor ideals") {
  for (int n : {2, 6, 12, 16, 30, 36}) {
    const Ring r = make_zn(n);
    const auto all = enumerate_ideals(r);
    CHECK(all.size() == static_cast<std::size_t>(divisor_count(n)));
    for (const auto& I : all) {
      CHECK(is_ideal(r, I.members));
      CHECK(n % I.size() == 0);
    }
    CHECK(all.front().size() == 1);
    CHECK(all.back().size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("principal ideal of Z_16 generated by 4") {
  const Ring r = make_zn(16);
  const Ideal I = principal(r, 4);
  CHECK(I.size() == 4);
  for (Elem x : {0u, 4u, 8u, 12u}) CHECK(I.contains(x));
  CHECK(is_proper(r, I));
  CHECK_FALSE(is_prime_ideal(r, I));
  CHECK(is_prime_ideal(r, principal(r, 2)));
}

TEST_CASE("quotients") {
  const Ring r = make_zn(12);
  const auto q = quotient_ring(r, principal(r, 4));
  CHECK(q.ring.size() == 4);
  CHECK(q.projection[5] == q.projection[1]);
  CHECK(q.ring.label(q.projection[6]) == "2+I");
  CHECK_THROWS_AS(quotient_ring(r, principal(r, 1)), Error);

  const Ring p = make_ring("P(Zn(6),Zn(3))");
  const Elem g = parse_element(p, "(0,1)");
  const auto q2 = quotient_ring(p, principal(p, g));
  CHECK(q2.ring.size() == 6);
}

TEST_CASE("prime ideals are exactly those with a domain quotient") {
  gen::Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto spec = gen::small_ring_spec(rng);
    CAPTURE(spec);
    const Ring r = make_ring(spec);
    for (const auto& I : enumerate_ideals(r)) {
      if (!is_proper(r, I)) continue;
      const auto q = quotient_ring(r, I);
      CHECK(is_prime_ideal(r, I) == is_field(q.ring));  // finite domains are fields
    }
  }
}

TEST_CASE("property: generated ideal is the smallest ideal containing the generators") {
  gen::Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const auto spec = gen::small_ring_spec(rng);
    const Ring r = make_ring(spec);
    const Elem a = std::uniform_int_distribution<Elem>(0, r.size() - 1)(rng);
    const Elem b = std::uniform_int_distribution<Elem>(0, r.size() - 1)(rng);
    const Elem gens[] = {a, b};
    const Ideal I = ideal_from_generators(r, gens);
    CAPTURE(spec);
    CHECK(is_ideal(r, I.members));
    CHECK(I.contains(a));
    CHECK(I.contains(b));
    for (const auto& J : enumerate_ideals(r))
      if (J.contains(a) && J.contains(b)) CHECK(I.members.is_subset_of(J.members));
  }
}

TEST_CASE("local structure") {
  const auto z8 = local_structure(make_zn(8));
  REQUIRE(z8.is_local);
  CHECK(z8.maximal_ideal->size() == 4);
  CHECK_FALSE(local_structure(make_zn(12)).is_local);
  const Ring q = make_ring("Q(2;X,Y;X^2,XY,Y^2)");
  const auto lq = local_structure(q);
  REQUIRE(lq.is_local);
  CHECK(square_is_zero(q, *lq.maximal_ideal));
  CHECK_FALSE(square_is_zero(make_zn(8), *z8.maximal_ideal));
}

TEST_CASE("annihilators") {
  const Ring r = make_zn(12);
  const Elem s[] = {4};
  CHECK(annihilator(r, s) == std::vector<Elem>{0, 3, 6, 9});
  const Elem all[] = {0, 1};
  CHECK(annihilator(r, all) == std::vector<Elem>{0});
}

TEST_CASE("bad generators are rejected") {
  const Ring r = make_zn(6);
  const Elem g = 9;
  CHECK_THROWS_AS(ideal_from_generators(r, std::span<const Elem>(&g, 1)), Error);
}

}
