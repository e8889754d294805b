#include "doctest.h"

#include "gen.hpp"
#include "oracle.hpp"
#include "zdglab/error.hpp"
#include "zdglab/formulas.hpp"
#include "zdglab/ring_spec.hpp"

using namespace zdg;

namespace {

std::uint64_t concrete_alpha(const Profile& p) {
  const Ring r = make_product(realize_profile(p));
  return max_independent_set(build_gamma(r)).value;
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("standard shapes") {
  CHECK(alpha_standard({ShapeTag::Complete, {5}}) == 1);
  CHECK(alpha_standard(classify_shape(build_gamma(make_ring("P(Zn(2),Zn(7))")))) == 6);
  CHECK(alpha_standard(classify_shape(build_gamma(make_ring("P(Zn(5),GF(2,2))")))) == 4);
  CHECK(alpha_standard(classify_shape(build_gamma(make_zn(27)))) == 6);
  CHECK(alpha_standard(classify_shape(build_gamma(make_zn(25)))) == 1);
  CHECK(alpha_standard({ShapeTag::Empty, {}}) == 0);
  CHECK_THROWS_AS(alpha_standard({ShapeTag::Other, {}}), Error);
  CHECK(alpha_two_fields(4, 6) == 6);
  CHECK(alpha_field_times_z4(4) == 8);
}

TEST_CASE("F x Z4 closed form matches the concrete graph") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto pk = prime_power(q);
    std::vector<Ring> fs{make_gf(pk->first, pk->second), make_zn(4)};
    const Graph g = build_gamma(make_product(fs));
    CHECK(alpha_field_times_z4(q - 1) == static_cast<std::uint64_t>(oracle::alpha(g)));
  }
}

TEST_CASE("worked three- and four-field values") {
  CHECK(alpha_three_fields({6, 4, 4}).value == 64);
  CHECK(alpha_three_fields({6, 4, 4}).case_id == "A1");
  // The example for Z5xZ2xZ2 prints 9; the theorem gives 12.
  CHECK(alpha_three_fields({4, 1, 1}).value == 12);
  CHECK(alpha_four_fields({4, 1, 1, 1}).value == 28);
  CHECK(alpha_four_fields({4, 2, 2, 2}).value == 80);
  // Z5xZ5xZ3xZ2: printed 88.
  CHECK(alpha_four_fields({4, 4, 2, 1}).value == 96);
  CHECK(oracle::field_product_alpha({4, 1, 1}) == 12);
  CHECK(oracle::field_product_alpha({4, 4, 2, 1}) == 96);
}

TEST_CASE("five-field cases") {
  struct Case {
    Profile p;
    std::uint64_t value;
    const char* id;
  };
  for (const auto& c : {Case{{4, 1, 1, 1, 1}, 60, "Delta1"}, Case{{4, 4, 4, 1, 1}, 384, "Delta2"},
                        Case{{6, 2, 2, 2, 2}, 400, "Delta3"}, Case{{6, 2, 2, 2, 1}, 280, "Delta4"},
                        Case{{6, 6, 2, 1, 1}, 456, "Delta2"}, Case{{2, 2, 2, 2, 2}, 160, "Delta7"},
                        Case{{1, 1, 1, 1, 1}, 15, "Delta1"}}) {
    const auto f = alpha_five_fields(c.p);
    CHECK(f.value == c.value);
    CHECK(f.case_id == c.id);
    CHECK(alpha_field_product_exact(c.p).result.value == c.value);
    CHECK(is_intersecting(f.witness_subsets));
    CHECK(family_weight(c.p, f.witness_subsets) == f.value);
  }
}

TEST_CASE("property: closed forms equal the brute-force family search") {
  for (std::size_t k = 2; k <= 4; ++k)
    for (const auto& p : enumerate_profiles(k, 200)) {
      CAPTURE(p.size());
      CAPTURE(p[0]);
      const auto want = oracle::field_product_alpha(p);
      const auto ex = alpha_field_product_exact(p);
      CHECK(ex.result.value == want);
      CHECK(is_intersecting(ex.subsets));
      if (k == 2) CHECK(alpha_two_fields(p[0], p[1]) == want);
      if (k == 3) CHECK(alpha_three_fields(p).value == want);
      if (k == 4) CHECK(alpha_four_fields(p).value == want);
    }
}

TEST_CASE("property: blow-up equals the concrete graph") {
  gen::Rng rng(31);
  std::vector<Profile> all;
  for (std::size_t k = 2; k <= 5; ++k)
    for (const auto& p : enumerate_profiles(k, 120)) all.push_back(p);
  for (int i = 0; i < 25; ++i) {
    const auto& p = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    CHECK(alpha_field_product_exact(p).result.value == concrete_alpha(p));
  }
  CHECK(concrete_alpha({1, 1, 1, 1, 1}) == 15);
}

TEST_CASE("profiles") {
  CHECK(enumerate_profiles(2, 200).size() == 129);
  CHECK(enumerate_profiles(3, 300).size() == 177);
  CHECK(enumerate_profiles(4, 300).size() == 96);
  CHECK(enumerate_profiles(5, 400).size() == 58);
  CHECK(profile_ring_size({4, 2, 2, 2}) == 135);
  CHECK_THROWS_AS(check_profile({1, 2}), Error);
  CHECK_THROWS_AS(realize_profile({5, 1}), Error);  // no field of order 6
  CHECK(subset_name(subset_of({1, 2, 3}), 5) == "123");
}

TEST_CASE("general lower bound checks its own family") {
  const auto lb = general_lower_bound({2, 2, 2, 2, 2});
  CHECK(lb.value == 176);
  CHECK_FALSE(lb.witness_is_independent);
  REQUIRE(lb.disjoint_pair);
  CHECK((lb.disjoint_pair->first & lb.disjoint_pair->second) == 0);
  CHECK(lb.value > alpha_field_product_exact({2, 2, 2, 2, 2}).result.value);
}

TEST_CASE("local rings") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Ring r = make_zn(p * p * p);
    const auto b = local_ring_alpha_bounds(r);
    CHECK_FALSE(b.square_zero);
    CHECK(b.upper == p * p - p);  // multiples of p that are not multiples of p^2
    CHECK(max_independent_set(build_gamma(r)).value == b.upper);
  }
  const auto sq = local_ring_alpha_bounds(make_zn(49));
  CHECK(sq.square_zero);
  CHECK(sq.exact == 1u);
  CHECK_THROWS_AS(local_ring_alpha_bounds(make_zn(12)), Error);
  CHECK_THROWS_AS(local_ring_alpha_bounds(make_zn(7)), Error);
}

TEST_CASE("ideal-based examples") {
  struct Case {
    const char* spec;
    const char* gen;
    std::uint64_t aq, ai;
  };
  for (const auto& c : {Case{"P(Zn(6),Zn(3))", "(0,1)", 2, 6}, Case{"Zn(16)", "4", 1, 1},
                        Case{"P(Zn(16),Zn(3))", "(0,1)", 5, 13}}) {
    const Ring r = make_ring(c.spec);
    const Elem g = parse_element(r, c.gen);
    const Ideal I = ideal_from_generators(r, std::span<const Elem>(&g, 1));
    const auto a = ideal_alpha_analysis(r, I);
    CHECK(a.alpha_quotient == c.aq);
    CHECK(a.alpha_ideal_graph == c.ai);
    CHECK(a.bound_ok);
    CHECK(a.verdict == FormulaVerdict::Every);
    CHECK(a.lifts_independent);
  }
  const Ring z = make_zn(12);
  const Elem two = 2;
  CHECK_THROWS_AS(ideal_alpha_analysis(z, ideal_from_generators(z, std::span<const Elem>(&two, 1))),
                  Error);  // prime
}

TEST_CASE("property: ideal graph alpha against brute force") {
  gen::Rng rng(12);
  for (int i = 0; i < 25; ++i) {
    const auto spec = gen::small_ring_spec(rng);
    const Ring r = make_ring(spec);
    for (const auto& I : enumerate_ideals(r)) {
      if (!is_proper(r, I) || is_prime_ideal(r, I) || I.size() == 1) continue;
      CAPTURE(spec);
      const auto a = ideal_alpha_analysis(r, I);
      const Graph gi = build_gamma_ideal(r, I);
      if (gi.n > 40) continue;
      CHECK(a.alpha_ideal_graph == static_cast<std::uint64_t>(oracle::alpha(gi)));
      CHECK(a.bound_ok);
    }
  }
}

}
