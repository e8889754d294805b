#include "zdglab/presented.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <tuple>

#include "zdglab/error.hpp"

namespace zdg {

void Polynomial::add_term(const Exponents& e, std::int64_t coeff) {
  const auto n = static_cast<std::int64_t>(modulus);
  std::int64_t c = coeff % n;
  if (c < 0) c += n;
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, static_cast<std::uint32_t>(c));
    return;
  }
  const auto sum = static_cast<std::uint32_t>((it->second + c) % n);
  if (sum == 0)
    terms.erase(it);
  else
    it->second = sum;
}

namespace {

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

// Residue monomial order: total degree, then X before Y before Z.
bool basis_less(const Exponents& a, const Exponents& b) {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::Parse, "cannot parse polynomial '" + std::string(text) + "': " + why);
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            std::uint32_t modulus) {
  Polynomial poly;
  poly.modulus = modulus;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) parse_fail(text, "empty");

  std::size_t pos = 0;
  auto read_int = [&]() -> std::uint64_t {
    std::uint64_t v = 0;
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > 1'000'000'000ULL) parse_fail(text, "number too large");
      ++pos;
    }
    if (pos == start) parse_fail(text, "expected a number");
    return v;
  };

  bool first = true;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      parse_fail(text, "expected '+' or '-'");
    }
    first = false;
    std::uint64_t coeff = 1;
    bool have_factor = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = read_int();
      have_factor = true;
    }
    Exponents e(vars.size(), 0);
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = coeff * read_int() % modulus;
        have_factor = true;
        continue;
      }
      std::size_t best = vars.size(), best_len = 0;
      for (std::size_t v = 0; v < vars.size(); ++v)
        if (vars[v].size() > best_len && s.compare(pos, vars[v].size(), vars[v]) == 0) {
          best = v;
          best_len = vars[v].size();
        }
      if (best == vars.size()) parse_fail(text, "unknown symbol at '" + s.substr(pos) + "'");
      pos += best_len;
      std::uint64_t exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exp = read_int();
      }
      e[best] += static_cast<std::uint32_t>(exp);
      have_factor = true;
    }
    if (!have_factor) parse_fail(text, "dangling sign");
    poly.add_term(e, sign * static_cast<std::int64_t>(coeff % modulus));
  }
  return poly;
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, std::uint32_t>> terms(p.terms.begin(), p.terms.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return basis_less(a.first, b.first); });
  const bool short_names = std::all_of(vars.begin(), vars.end(),
                                       [](const std::string& v) { return v.size() == 1; });
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += "+";
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty() && !short_names) mono += "*";
      mono += vars[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += std::to_string(c) + mono;
  }
  return out;
}

PresentedQuotientSpec parse_presented_quotient(std::string_view body) {
  auto parts = split_top_level(body, ';');
  if (parts.size() != 3)
    throw Error(ErrorKind::Parse, "Q(...) expects <n>;<vars>;<relations>");
  PresentedQuotientSpec spec;
  const std::string mod = trim(parts[0]);
  if (mod.empty() || !std::all_of(mod.begin(), mod.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw Error(ErrorKind::Parse, "Q(...): bad modulus '" + mod + "'");
  spec.modulus = static_cast<std::uint32_t>(std::stoul(mod));
  if (spec.modulus < 2) throw Error(ErrorKind::InvalidParameter, "Q(...): modulus must be >= 2");
  for (const auto& v : split_top_level(parts[1], ',')) {
    auto name = trim(v);
    if (name.empty() || !std::all_of(name.begin(), name.end(), [](char c) {
          return std::isalpha(static_cast<unsigned char>(c));
        }))
      throw Error(ErrorKind::Parse, "Q(...): bad variable name '" + name + "'");
    spec.variables.push_back(name);
  }
  for (const auto& r : split_top_level(parts[2], ',')) {
    auto rel = trim(r);
    if (rel.empty()) continue;
    spec.relations.push_back(parse_polynomial(rel, spec.variables, spec.modulus));
  }
  spec.name = "Z" + mod + "[" + trim(parts[1]) + "]/(" + trim(parts[2]) + ")";
  return spec;
}

namespace detail {
namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Solves q * a == c (mod n); returns nullopt if no solution.
std::optional<std::uint32_t> divide_mod(std::uint32_t c, std::uint32_t a, std::uint32_t n) {
  const std::int64_t g = gcd64(a, n);
  if (c % g != 0) return std::nullopt;
  const std::int64_t m = n / g;
  const std::int64_t a1 = (a / g) % m, c1 = (c / g) % m;
  if (m == 1) return 0;
  // extended Euclid for inverse of a1 mod m
  std::int64_t t = 0, new_t = 1, r = m, new_r = a1;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += m;
  return static_cast<std::uint32_t>((t * c1) % m);
}

bool is_unit_mod(std::uint32_t a, std::uint32_t n) { return std::gcd(a, n) == 1; }

// Graded order with variables ranked by `rank` (rank[0] is the largest variable).
struct TermOrder {
  std::vector<std::size_t> rank;
  bool less(const Exponents& a, const Exponents& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (auto v : rank)
      if (a[v] != b[v]) return a[v] < b[v];
    return false;
  }
};

bool divides(const Exponents& d, const Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

// Division by the relation set. Reduces a term whenever a leading monomial
// divides it and its coefficient is a multiple of the leading coefficient.
// A zero remainder proves membership in the ideal.
bool reduces_to_zero(Polynomial f, const std::vector<Polynomial>& rels, const TermOrder& order) {
  struct Lead {
    Exponents mono;
    std::uint32_t coeff;
  };
  std::vector<Lead> leads;
  for (const auto& r : rels) {
    if (r.is_zero()) {
      leads.push_back({{}, 0});
      continue;
    }
    auto it = std::max_element(r.terms.begin(), r.terms.end(), [&](const auto& a, const auto& b) {
      return order.less(a.first, b.first);
    });
    leads.push_back({it->first, it->second});
  }
  for (int step = 0; step < 200000; ++step) {
    if (f.is_zero()) return true;
    // Largest reducible term first.
    std::vector<Exponents> monos;
    for (const auto& [m, c] : f.terms) monos.push_back(m);
    std::sort(monos.begin(), monos.end(),
              [&](const Exponents& a, const Exponents& b) { return order.less(b, a); });
    bool reduced = false;
    for (const auto& m : monos) {
      const std::uint32_t c = f.terms.at(m);
      for (std::size_t r = 0; r < rels.size() && !reduced; ++r) {
        if (leads[r].coeff == 0 || !divides(leads[r].mono, m)) continue;
        auto q = divide_mod(c, leads[r].coeff, f.modulus);
        if (!q) continue;
        Exponents shift(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) shift[i] = m[i] - leads[r].mono[i];
        for (const auto& [rm, rc] : rels[r].terms) {
          Exponents e(m.size());
          for (std::size_t i = 0; i < m.size(); ++i) e[i] = rm[i] + shift[i];
          f.add_term(e, -static_cast<std::int64_t>(std::uint64_t{*q} * rc % f.modulus));
        }
        reduced = true;
      }
      if (reduced) break;
    }
    if (!reduced) return false;
  }
  return false;
}

struct Reducer {
  std::uint32_t modulus;
  std::vector<std::uint32_t> bound;                      // B_v
  std::vector<bool> nilpotent;                           // X_v^B_v lies in the ideal
  std::vector<std::vector<std::uint32_t>> tail;          // X_v^B_v = -sum tail[j] X_v^j
  std::vector<Exponents> basis;
  std::vector<std::size_t> radix_pos;  // mixed-radix index of exponent -> basis position

  std::size_t mono_key(const Exponents& e) const {
    std::size_t key = 0;
    for (std::size_t v = 0; v < e.size(); ++v) key = key * bound[v] + e[v];
    return key;
  }

  std::vector<std::uint32_t> reduce(const Polynomial& p) const {
    std::vector<std::uint32_t> out(basis.size(), 0);
    std::map<Exponents, std::uint32_t> work(p.terms.begin(), p.terms.end());
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const Exponents e = node.key();
      const std::uint32_t c = node.mapped();
      std::size_t over = e.size();
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] >= bound[v]) {
          over = v;
          break;
        }
      if (over == e.size()) {
        auto& slot = out[radix_pos[mono_key(e)]];
        slot = static_cast<std::uint32_t>((slot + c) % modulus);
        continue;
      }
      if (nilpotent[over]) continue;
      // X^B -> -sum tail_j X^j
      for (std::uint32_t j = 0; j < bound[over]; ++j) {
        const std::uint32_t t = tail[over][j];
        if (t == 0) continue;
        Exponents f = e;
        f[over] = e[over] - bound[over] + j;
        const auto add = static_cast<std::uint32_t>(
            (std::uint64_t{modulus - t} * c) % modulus);
        if (add == 0) continue;
        auto it = work.find(f);
        if (it == work.end()) {
          work.emplace(f, add);
        } else {
          it->second = (it->second + add) % modulus;
          if (it->second == 0) work.erase(it);
        }
      }
    }
    return out;
  }
};

Reducer make_reducer(const PresentedQuotientSpec& spec) {
  const std::size_t nv = spec.variables.size();
  const std::uint32_t n = spec.modulus;
  Reducer red;
  red.modulus = n;
  red.bound.assign(nv, 0);
  red.nilpotent.assign(nv, false);
  red.tail.assign(nv, {});

  for (std::size_t v = 0; v < nv; ++v) {
    // Lowest-degree univariate relation in X_v with a unit leading coefficient.
    std::uint32_t best_deg = 0;
    const Polynomial* best = nullptr;
    for (const auto& r : spec.relations) {
      if (r.is_zero()) continue;
      bool univariate = true;
      std::uint32_t deg = 0;
      for (const auto& [e, c] : r.terms) {
        for (std::size_t w = 0; w < nv; ++w)
          if (w != v && e[w] != 0) univariate = false;
        deg = std::max(deg, e[v]);
      }
      if (!univariate || deg == 0) continue;
      const Exponents lead = [&] {
        Exponents x(nv, 0);
        x[v] = deg;
        return x;
      }();
      if (!is_unit_mod(r.terms.at(lead), n)) continue;
      if (!best || deg < best_deg) {
        best = &r;
        best_deg = deg;
      }
    }
    if (best) {
      Exponents lead(nv, 0);
      lead[v] = best_deg;
      const auto inv = *divide_mod(1, best->terms.at(lead), n);
      red.bound[v] = best_deg;
      red.tail[v].assign(best_deg, 0);
      for (const auto& [e, c] : best->terms)
        if (e[v] < best_deg)
          red.tail[v][e[v]] = static_cast<std::uint32_t>(std::uint64_t{c} * inv % n);
      continue;
    }
    // Otherwise look for a nilpotency certificate X_v^d -> 0.
    std::vector<std::size_t> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> orders;
    do {
      orders.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::uint32_t d = 1; d <= 16 && red.bound[v] == 0; ++d) {
      Polynomial power;
      power.modulus = n;
      Exponents e(nv, 0);
      e[v] = d;
      power.add_term(e, 1);
      for (const auto& o : orders)
        if (reduces_to_zero(power, spec.relations, TermOrder{o})) {
          red.bound[v] = d;
          red.nilpotent[v] = true;
          break;
        }
    }
    if (red.bound[v] == 0)
      throw Error(ErrorKind::ConstructionFailure,
                  "variable " + spec.variables[v] +
                      " has no monic relation and is not provably nilpotent in " + spec.name);
  }

  // Residue basis.
  std::size_t count = 1;
  for (auto b : red.bound) count *= b;
  for (std::size_t key = 0; key < count; ++key) {
    Exponents e(nv);
    std::size_t rest = key;
    for (std::size_t v = nv; v-- > 0;) {
      e[v] = static_cast<std::uint32_t>(rest % red.bound[v]);
      rest /= red.bound[v];
    }
    red.basis.push_back(e);
  }
  std::sort(red.basis.begin(), red.basis.end(), basis_less);
  red.radix_pos.assign(count, 0);
  for (std::size_t i = 0; i < red.basis.size(); ++i) red.radix_pos[red.mono_key(red.basis[i])] = i;
  return red;
}

}  // namespace

QuotientModule build_quotient_module(const PresentedQuotientSpec& spec, const RingLimits& limits) {
  if (spec.variables.empty())
    throw Error(ErrorKind::InvalidParameter, "presented quotient needs at least one variable");
  const Reducer red = make_reducer(spec);
  const std::uint32_t n = spec.modulus;
  const std::size_t d = red.basis.size();

  std::uint64_t module_size = 1;
  for (std::size_t i = 0; i < d; ++i) {
    module_size *= n;
    if (module_size > limits.work_bound)
      throw Error(ErrorKind::SizeLimit, "free module for " + spec.name + " exceeds work bound");
  }

  auto encode = [&](const std::vector<std::uint32_t>& digits) {
    std::uint64_t code = 0;
    for (auto c : digits) code = code * n + c;
    return code;
  };
  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint32_t> digits(d);
    for (std::size_t i = d; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(code % n);
      code /= n;
    }
    return digits;
  };

  // Generators of the relation subgroup: basis monomial times relation.
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& b : red.basis)
    for (const auto& r : spec.relations) {
      Polynomial prod;
      prod.modulus = n;
      for (const auto& [e, c] : r.terms) {
        Exponents f(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i] + b[i];
        prod.add_term(f, c);
      }
      auto g = red.reduce(prod);
      if (std::any_of(g.begin(), g.end(), [](std::uint32_t x) { return x != 0; }))
        gens.push_back(std::move(g));
    }

  // Additive closure of the generators.
  std::vector<bool> in_h(module_size, false);
  std::vector<std::vector<std::uint32_t>> h_elems;
  in_h[0] = true;
  h_elems.push_back(std::vector<std::uint32_t>(d, 0));
  for (std::size_t head = 0; head < h_elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<std::uint32_t> s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = (h_elems[head][i] + g[i]) % n;
      const auto code = encode(s);
      if (!in_h[code]) {
        in_h[code] = true;
        h_elems.push_back(std::move(s));
      }
    }
  }

  QuotientModule qm;
  qm.modulus = n;
  qm.basis = red.basis;
  constexpr std::uint32_t unassigned = ~std::uint32_t{0};
  qm.coset.assign(module_size, unassigned);
  for (std::uint64_t code = 0; code < module_size; ++code) {
    if (qm.coset[code] != unassigned) continue;
    const auto id = static_cast<std::uint32_t>(qm.reps.size());
    qm.reps.push_back(code);
    const auto v = decode(code);
    std::vector<std::uint32_t> s(d);
    for (const auto& h : h_elems) {
      for (std::size_t i = 0; i < d; ++i) s[i] = (v[i] + h[i]) % n;
      qm.coset[encode(s)] = id;
    }
  }
  return qm;
}

}  // namespace detail

Ring make_presented_quotient(const PresentedQuotientSpec& spec, const RingLimits& limits) {
  const auto qm = detail::build_quotient_module(spec, limits);
  const std::size_t size = qm.reps.size();
  if (size > limits.size_bound)
    throw Error(ErrorKind::SizeLimit, spec.name + " has " + std::to_string(size) +
                                          " elements, above the size bound");
  if (size < 2) throw Error(ErrorKind::ConstructionFailure, spec.name + " is the zero ring");

  const std::uint32_t n = qm.modulus;
  const std::size_t d = qm.basis.size();
  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint32_t> digits(d);
    for (std::size_t i = d; i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(code % n);
      code /= n;
    }
    return digits;
  };
  auto encode = [&](const std::vector<std::uint64_t>& digits) {
    std::uint64_t code = 0;
    for (auto c : digits) code = code * n + (c % n);
    return code;
  };

  // Rebuild the reducer-backed product of basis monomials.
  const auto red = detail::make_reducer(spec);
  std::vector<std::vector<std::vector<std::uint32_t>>> prod(d, std::vector<std::vector<std::uint32_t>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Polynomial p;
      p.modulus = n;
      Exponents e(qm.basis[i].size());
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = qm.basis[i][v] + qm.basis[j][v];
      p.add_term(e, 1);
      prod[i][j] = prod[j][i] = red.reduce(p);
    }

  std::vector<std::vector<std::uint32_t>> digits(size);
  for (std::size_t a = 0; a < size; ++a) digits[a] = decode(qm.reps[a]);

  std::vector<Elem> add(size * size), mul(size * size);
  std::vector<std::uint64_t> acc(d);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a; b < size; ++b) {
      for (std::size_t i = 0; i < d; ++i) acc[i] = digits[a][i] + digits[b][i];
      add[a * size + b] = add[b * size + a] = qm.coset[encode(acc)];
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (digits[a][i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
          if (digits[b][j] == 0) continue;
          const std::uint64_t c = std::uint64_t{digits[a][i]} * digits[b][j] % n;
          for (std::size_t k = 0; k < d; ++k) acc[k] = (acc[k] + c * prod[i][j][k]) % n;
        }
      }
      mul[a * size + b] = mul[b * size + a] = qm.coset[encode(acc)];
    }

  std::vector<std::string> labels(size);
  for (std::size_t a = 0; a < size; ++a) {
    Polynomial p;
    p.modulus = n;
    for (std::size_t i = 0; i < d; ++i) p.add_term(qm.basis[i], digits[a][i]);
    labels[a] = format_polynomial(p, spec.variables);
  }
  std::vector<std::uint64_t> one(d, 0);
  one[0] = 1;  // basis[0] is the constant monomial
  return Ring(size, std::move(add), std::move(mul), 0, qm.coset[encode(one)], std::move(labels),
              Construction::PresentedQuotient, spec.name);
}

}  // namespace zdg
