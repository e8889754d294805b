#include "zdglab/formulas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "zdglab/error.hpp"

namespace zdg {

void check_profile(const Profile& p) {
  if (p.empty()) throw Error(ErrorKind::InvalidParameter, "empty profile");
  if (p.size() > 20) throw Error(ErrorKind::InvalidParameter, "too many factors");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw Error(ErrorKind::InvalidParameter, "profile entries must be >= 1");
    if (i > 0 && p[i] > p[i - 1])
      throw Error(ErrorKind::InvalidParameter, "profile must be sorted largest first");
  }
}

std::uint64_t subset_weight(const Profile& p, Subset s) {
  std::uint64_t w = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (s >> i & 1U) w *= p[i];
  return w;
}

std::string subset_name(Subset s, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i)
    if (s >> i & 1U) {
      if (k >= 10 && !out.empty()) out += ",";
      out += std::to_string(i + 1);
    }
  return out;
}

Subset subset_of(std::initializer_list<int> indices) {
  Subset s = 0;
  for (int i : indices) s |= Subset{1} << (i - 1);
  return s;
}

bool is_intersecting(const std::vector<Subset>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if ((family[i] & family[j]) == 0) return false;
  return true;
}

std::uint64_t family_weight(const Profile& p, const std::vector<Subset>& family) {
  std::uint64_t w = 0;
  for (auto s : family) w += subset_weight(p, s);
  return w;
}

std::uint64_t alpha_standard(const ShapeClass& shape) {
  const auto& q = shape.params;
  switch (shape.tag) {
    case ShapeTag::Empty: return 0;
    case ShapeTag::Complete: return 1;
    case ShapeTag::CompleteBipartite:
    case ShapeTag::CompleteMultipartite: return *std::max_element(q.begin(), q.end());
    case ShapeTag::Star: return q[0];
    case ShapeTag::Bistar: return 2 * q[0];
    case ShapeTag::Path: return (q[0] + 1) / 2;
    case ShapeTag::Cycle: return q[0] / 2;
    case ShapeTag::Other: break;
  }
  throw Error(ErrorKind::UnsupportedShape, "no closed form for shape " + shape.name());
}

std::uint64_t alpha_two_fields(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidParameter, "field sizes must be >= 1");
  return std::max(m, n);
}

std::uint64_t alpha_field_times_z4(std::uint64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "field size must be >= 1");
  return std::max<std::uint64_t>(2 * m, 3);
}

FormulaPrediction alpha_three_fields(const Profile& p) {
  check_profile(p);
  if (p.size() != 3) throw Error(ErrorKind::InvalidParameter, "three-field formula needs k = 3");
  const auto n1 = p[0], n2 = p[1], n3 = p[2];
  FormulaPrediction f;
  f.theorem_id = "three-fields";
  f.value = n1 * n2 + n1 * n3 + std::max(n1, n2 * n3);
  if (n2 * n3 >= n1) {
    f.case_id = "A1";
    f.witness_subsets = {subset_of({1, 2}), subset_of({1, 3}), subset_of({2, 3})};
  } else {
    f.case_id = "A2";
    f.witness_subsets = {subset_of({1, 2}), subset_of({1, 3}), subset_of({1})};
  }
  return f;
}

FormulaPrediction alpha_four_fields(const Profile& p) {
  check_profile(p);
  if (p.size() != 4) throw Error(ErrorKind::InvalidParameter, "four-field formula needs k = 4");
  const auto n1 = p[0], n2 = p[1], n3 = p[2], n4 = p[3];
  const auto s = n2 * n3 + n2 * n4 + n3 * n4;
  const std::vector<Subset> common = {subset_of({1, 2, 3}), subset_of({1, 2, 4}),
                                      subset_of({1, 3, 4}), subset_of({1, 2}),
                                      subset_of({1, 3})};
  struct Case {
    bool holds;
    std::uint64_t value;
    std::vector<Subset> extra;
  };
  const Case cases[3] = {
      {n1 >= n2 * n3 * n4, n1 * (s + n2 + n3 + n4 + 1), {subset_of({1, 4}), subset_of({1})}},
      {n1 <= n2 * n3 * n4 && n1 * n4 >= n2 * n3, n1 * (s + n2 + n3 + n4) + n2 * n3 * n4,
       {subset_of({1, 4}), subset_of({2, 3, 4})}},
      {n1 * n4 <= n2 * n3, n1 * (s + n2 + n3) + n2 * n3 + n2 * n3 * n4,
       {subset_of({2, 3}), subset_of({2, 3, 4})}},
  };
  FormulaPrediction f;
  f.theorem_id = "four-fields";
  int chosen = -1;
  for (int c = 0; c < 3; ++c) {
    if (!cases[c].holds) continue;
    if (chosen < 0) {
      chosen = c;
    } else if (cases[c].value != cases[chosen].value) {
      throw std::logic_error("four-field cases disagree on a boundary");
    }
  }
  if (chosen < 0) throw std::logic_error("no four-field case applies");
  static const char* names[] = {"I1", "I2", "I3"};
  f.case_id = names[chosen];
  f.value = cases[chosen].value;
  f.witness_subsets = common;
  f.witness_subsets.insert(f.witness_subsets.end(), cases[chosen].extra.begin(),
                           cases[chosen].extra.end());
  return f;
}

std::uint64_t five_field_t(const Profile& p) {
  check_profile(p);
  if (p.size() != 5) throw Error(ErrorKind::InvalidParameter, "five-field formula needs k = 5");
  std::uint64_t triples = 0, pairs = 0;
  for (int i = 1; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (!(i == 3 && j == 4)) pairs += p[i] * p[j];
      for (int k = j + 1; k < 5; ++k) triples += p[i] * p[j] * p[k];
    }
  return p[0] * triples + p[0] * pairs;
}

std::array<std::uint64_t, 7> five_field_deltas(const Profile& p) {
  check_profile(p);
  if (p.size() != 5) throw Error(ErrorKind::InvalidParameter, "five-field formula needs k = 5");
  const auto n1 = p[0], n2 = p[1], n3 = p[2], n4 = p[3], n5 = p[4];
  return {
      n1 * (n4 * n5 + n2 + n3 + n4 + n5 + 1),
      n2 * (n3 * n4 * n5 + n3 * n4 + n3 * n5 + n1 + n3) + n1 * n3,
      n1 * (n4 * n5 + n2 + n3 + n4 + n5) + n2 * n3 * n4 * n5,
      n1 * (n4 * n5 + n2 + n3 + n4) + n2 * (n3 * n4 * n5 + n3 * n4),
      n1 * (n4 * n5 + n2 + n3) + n2 * (n3 * n4 * n5 + n3 * n4 + n3 * n5),
      n1 * (n4 * n5 + n2) + n2 * (n3 * n4 * n5 + n3 * n4 + n3 * n5 + n4 * n5),
      (n1 + n3) * n4 * n5 + n2 * (n3 * n4 * n5 + n3 * n4 + n3 * n5 + n4 * n5),
  };
}

FormulaPrediction alpha_five_fields(const Profile& p) {
  const auto t = five_field_t(p);
  const auto d = five_field_deltas(p);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] > d[arg]) arg = i;

  FormulaPrediction f;
  f.theorem_id = "five-fields";
  f.case_id = "Delta" + std::to_string(arg + 1);
  f.value = t + d[arg];
  // Base family: every E_{1ijk}, and E_{1ij} except E_{145}.
  for (int i = 2; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      if (!(i == 4 && j == 5)) f.witness_subsets.push_back(subset_of({1, i, j}));
      for (int k = j + 1; k <= 5; ++k) f.witness_subsets.push_back(subset_of({1, i, j, k}));
    }
  const Subset a[6] = {subset_of({1}),    subset_of({2, 3}), subset_of({1, 2}),
                       subset_of({1, 3}), subset_of({1, 4}), subset_of({1, 5})};
  const Subset b[6] = {subset_of({2, 3, 4, 5}), subset_of({1, 4, 5}), subset_of({3, 4, 5}),
                       subset_of({2, 4, 5}),    subset_of({2, 3, 5}), subset_of({2, 3, 4})};
  // Per case, which of the six slots take the B set.
  static const bool use_b[7][6] = {
      {false, true, false, false, false, false}, {true, false, false, false, true, true},
      {true, true, false, false, false, false},  {true, true, false, false, false, true},
      {true, true, false, false, true, true},    {true, true, false, true, true, true},
      {true, true, true, true, true, true},
  };
  for (int s = 0; s < 6; ++s) f.witness_subsets.push_back(use_b[arg][s] ? b[s] : a[s]);
  return f;
}

Graph disjointness_graph(const Profile& p, std::vector<std::uint64_t>& weights) {
  check_profile(p);
  const std::size_t k = p.size();
  const Subset full = (Subset{1} << k) - 1;
  Graph g(full - 1);
  weights.assign(g.n, 0);
  for (Subset s = 1; s < full; ++s) {
    g.labels[s - 1] = "E" + subset_name(s, k);
    weights[s - 1] = subset_weight(p, s);
    for (Subset t = s + 1; t < full; ++t)
      if ((s & t) == 0) g.add_edge(s - 1, t - 1);
  }
  return g;
}

ExactFamily alpha_field_product_exact(const Profile& p, const SolveBudget& budget) {
  check_profile(p);
  if (p.size() < 2) throw Error(ErrorKind::InvalidParameter, "need at least two factors");
  if (p.size() > 12) throw Error(ErrorKind::SizeLimit, "subset graph too large");
  std::vector<std::uint64_t> w;
  const Graph g = disjointness_graph(p, w);
  ExactFamily out;
  out.result = max_weight_independent_set(g, w, budget);
  for (auto v : out.result.witness.members()) out.subsets.push_back(static_cast<Subset>(v + 1));
  return out;
}

LowerBound general_lower_bound(const Profile& p) {
  check_profile(p);
  const std::size_t k = p.size();
  if (k < 2) throw Error(ErrorKind::InvalidParameter, "need at least two factors");
  const std::size_t h = (k - 1) / 2;
  const Subset full = (Subset{1} << k) - 1;
  LowerBound lb;
  for (Subset s = 1; s < full; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if ((size == h && (s & 1U)) || (size >= h + 1 && size <= k - 1)) lb.witness_subsets.push_back(s);
  }
  std::sort(lb.witness_subsets.begin(), lb.witness_subsets.end(), [](Subset a, Subset b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  lb.value = family_weight(p, lb.witness_subsets);
  lb.witness_is_independent = true;
  for (std::size_t i = 0; i < lb.witness_subsets.size() && lb.witness_is_independent; ++i)
    for (std::size_t j = i + 1; j < lb.witness_subsets.size(); ++j)
      if ((lb.witness_subsets[i] & lb.witness_subsets[j]) == 0) {
        lb.witness_is_independent = false;
        lb.disjoint_pair = {lb.witness_subsets[i], lb.witness_subsets[j]};
        break;
      }
  return lb;
}

LocalBounds local_ring_alpha_bounds(const Ring& ring) {
  const auto ls = local_structure(ring);
  if (!ls.is_local) throw Error(ErrorKind::InvalidParameter, ring.name() + " is not local");
  const auto& m = *ls.maximal_ideal;
  if (m.size() <= 1) throw Error(ErrorKind::InvalidParameter, ring.name() + " is a field");
  LocalBounds b;
  std::vector<Elem> z;
  for (auto i : m.members.members()) z.push_back(static_cast<Elem>(i));
  b.zero_divisors = z.size() - 1;
  b.ann_star = annihilator(ring, z).size() - 1;
  b.square_zero = square_is_zero(ring, m);
  if (b.square_zero) {
    b.exact = 1;
    b.lower = b.upper = 1;
  } else {
    b.lower = 2;
    b.upper = b.zero_divisors - b.ann_star;
  }
  return b;
}

const char* to_string(FormulaVerdict v) {
  switch (v) {
    case FormulaVerdict::Every: return "every";
    case FormulaVerdict::MaxOnly: return "max-only";
    case FormulaVerdict::Neither: return "neither";
    case FormulaVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

IdealAnalysis ideal_alpha_analysis(const Ring& ring, const Ideal& ideal, const SolveBudget& budget,
                                   std::size_t cap) {
  if (!is_proper(ring, ideal))
    throw Error(ErrorKind::InvalidParameter, "ideal analysis needs a proper ideal");
  if (is_prime_ideal(ring, ideal))
    throw Error(ErrorKind::InvalidParameter, "ideal is prime; both graphs are empty");
  const Quotient q = quotient_ring(ring, ideal);
  const Graph gq = build_gamma(q.ring);
  const Graph gi = build_gamma_ideal(ring, ideal);

  IdealAnalysis a;
  a.ideal_size = ideal.size();
  const auto rq = max_independent_set(gq, budget);
  const auto ri = max_independent_set(gi, budget);
  a.alpha_quotient = rq.value;
  a.alpha_ideal_graph = ri.value;
  a.exact = rq.exact() && ri.exact();
  a.bound_ok = a.alpha_quotient <= a.alpha_ideal_graph &&
               a.alpha_ideal_graph <= a.ideal_size * a.alpha_quotient;

  const auto en = enumerate_maximum_independent_sets(gq, cap, budget);
  a.enumeration_truncated = en.truncated || en.aborted;
  if (en.aborted) a.exact = false;

  // Coset representative (smallest element) of each quotient element.
  std::vector<Elem> rep(q.ring.size(), ~Elem{0});
  for (Elem x = 0; x < ring.size(); ++x)
    if (rep[q.projection[x]] == ~Elem{0}) rep[q.projection[x]] = x;

  for (const auto& s : en.sets) {
    std::size_t a_count = 0;
    Bitset lifted(gi.n), formula_set(gi.n);
    for (auto v : s.members()) {
      const Elem coset = gq.elements[v];
      const Elem r = rep[coset];
      const bool sq_in_i = ideal.contains(ring.mul(r, r));
      a_count += sq_in_i;
      if (auto gv = gi.vertex_of(r)) lifted.set(*gv);
      else a.lifts_independent = false;
      for (Elem x = 0; x < ring.size(); ++x) {
        if (q.projection[x] != coset) continue;
        if (sq_in_i && x != r) continue;
        if (auto gv = gi.vertex_of(x)) formula_set.set(*gv);
        else a.formula_sets_independent = false;
      }
    }
    if (!is_independent(gi, lifted)) a.lifts_independent = false;
    if (!is_independent(gi, formula_set)) a.formula_sets_independent = false;
    a.formula_values.push_back(a_count + a.ideal_size * (a.alpha_quotient - a_count));
  }

  if (!a.exact || a.enumeration_truncated || a.formula_values.empty()) {
    a.verdict = FormulaVerdict::Inconclusive;
  } else {
    const bool every = std::all_of(a.formula_values.begin(), a.formula_values.end(),
                                   [&](std::uint64_t v) { return v == a.alpha_ideal_graph; });
    const auto mx = *std::max_element(a.formula_values.begin(), a.formula_values.end());
    a.verdict = every ? FormulaVerdict::Every
                      : (mx == a.alpha_ideal_graph ? FormulaVerdict::MaxOnly : FormulaVerdict::Neither);
  }
  a.formula_matches = a.verdict == FormulaVerdict::Every;
  return a;
}

std::uint64_t profile_ring_size(const Profile& p) {
  std::uint64_t s = 1;
  for (auto n : p) s *= n + 1;
  return s;
}

std::vector<Ring> realize_profile(const Profile& p, const RingLimits& limits) {
  check_profile(p);
  if (profile_ring_size(p) > limits.size_bound)
    throw Error(ErrorKind::SizeLimit, "product exceeds the ring size bound");
  std::vector<Ring> fields;
  for (auto n : p) {
    const auto pk = prime_power(n + 1);
    if (!pk)
      throw Error(ErrorKind::InvalidParameter,
                  "no field with " + std::to_string(n + 1) + " elements");
    fields.push_back(make_gf(pk->first, pk->second, std::nullopt, limits));
  }
  return fields;
}

std::vector<Profile> enumerate_profiles(std::size_t k, std::uint64_t max_size) {
  std::vector<std::uint64_t> orders;
  for (std::uint64_t q = 2; q <= max_size; ++q)
    if (prime_power(q)) orders.push_back(q);
  std::vector<Profile> out;
  Profile cur;
  auto rec = [&](auto&& self, std::uint64_t bound, std::uint64_t max_n) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    const std::size_t left = k - cur.size() - 1;
    for (auto it = orders.rbegin(); it != orders.rend(); ++it) {
      const auto q = *it;
      if (q - 1 > max_n) continue;
      // remaining factors need at least 2 each
      std::uint64_t need = q;
      for (std::size_t i = 0; i < left; ++i) need *= 2;
      if (need > bound) continue;
      cur.push_back(q - 1);
      self(self, bound / q, q - 1);
      cur.pop_back();
    }
  };
  rec(rec, max_size, max_size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zdg
