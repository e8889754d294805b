#include "zdglab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "zdglab/error.hpp"
#include "zdglab/presented.hpp"

namespace zdg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::ConstructionFailure: return "construction-failure";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::UnsupportedShape: return "unsupported-shape";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Io: return "io-error";
  }
  return "error";
}

const char* to_string(Construction c) {
  switch (c) {
    case Construction::Zn: return "Zn";
    case Construction::GaloisField: return "GaloisField";
    case Construction::PresentedQuotient: return "PresentedQuotient";
    case Construction::Product: return "Product";
    case Construction::Table: return "Table";
  }
  return "?";
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

void check_size(std::size_t size, const RingLimits& limits) {
  if (size > limits.size_bound)
    throw Error(ErrorKind::SizeLimit, "ring of size " + std::to_string(size) +
                                          " exceeds the size bound " +
                                          std::to_string(limits.size_bound));
}

}  // namespace

Ring::Ring(std::size_t size, std::vector<Elem> add_table, std::vector<Elem> mul_table, Elem zero,
           Elem one, std::vector<std::string> labels, Construction construction, std::string name)
    : size_(size),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      neg_(size, 0),
      zero_(zero),
      one_(one),
      labels_(std::move(labels)),
      construction_(construction),
      name_(std::move(name)) {
  if (size_ == 0 || add_.size() != size_ * size_ || mul_.size() != size_ * size_ ||
      labels_.size() != size_ || zero_ >= size_ || one_ >= size_)
    throw Error(ErrorKind::ConstructionFailure, "inconsistent ring tables for " + name_);
  if (zero_ == one_)
    throw Error(ErrorKind::ConstructionFailure, "ring " + name_ + " has 1 = 0");
  for (Elem a = 0; a < size_; ++a) {
    bool found = false;
    for (Elem b = 0; b < size_ && !found; ++b) {
      if (add(a, b) == zero_) {
        neg_[a] = b;
        found = true;
      }
    }
    if (!found)
      throw Error(ErrorKind::ConstructionFailure,
                  "element " + labels_[a] + " of " + name_ + " has no additive inverse");
  }
}

std::optional<Elem> Ring::find_label(std::string_view label) const {
  const std::string want = strip_spaces(label);
  for (Elem a = 0; a < size_; ++a)
    if (strip_spaces(labels_[a]) == want) return a;
  return std::nullopt;
}

Ring make_zn(std::uint32_t n, const RingLimits& limits) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "Z_n requires n >= 2");
  check_size(n, limits);
  std::vector<Elem> add(std::size_t{n} * n), mul(std::size_t{n} * n);
  std::vector<std::string> labels(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::uint32_t b = 0; b < n; ++b) {
      add[std::size_t{a} * n + b] = (a + b) % n;
      mul[std::size_t{a} * n + b] =
          static_cast<Elem>((std::uint64_t{a} * b) % n);
    }
  }
  return Ring(n, std::move(add), std::move(mul), 0, 1, std::move(labels), Construction::Zn,
              "Z" + std::to_string(n));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

namespace {

// Remainder of a modulo monic b over Z_p, both lowest degree first.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, std::span<const std::uint32_t> b,
                                    std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = static_cast<std::uint32_t>(
            (a[shift + i] + std::uint64_t{p - lead} * b[i]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  if (poly.size() < 2) return false;
  const std::size_t k = poly.size() - 1;
  if (poly.back() % p != 1) return false;
  // Try every monic divisor of degree 1..k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> div(d + 1, 0);
    div[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      auto r = poly_mod(std::vector<std::uint32_t>(poly.begin(), poly.end()), div, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

Ring make_gf(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> irreducible,
             const RingLimits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParameter, "GF: p must be prime");
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "GF: k must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    check_size(q, limits);
  }
  std::vector<std::uint32_t> poly;
  if (irreducible) {
    poly = *irreducible;
    for (auto& c : poly) c %= p;
    if (poly.size() != k + 1 || poly.back() != 1)
      throw Error(ErrorKind::InvalidParameter, "GF: polynomial must be monic of degree k");
    if (!is_irreducible_mod_p(poly, p))
      throw Error(ErrorKind::InvalidParameter, "GF: polynomial is reducible over Z_p");
  } else if (p == 2 && k == 2) {
    poly = {1, 1, 1};
  } else if (p == 2 && k == 3) {
    poly = {1, 1, 0, 1};
  } else if (p == 3 && k == 2) {
    poly = {1, 0, 1};
  } else {
    poly.assign(k + 1, 0);
    poly[k] = 1;
    std::uint64_t count = q;  // p^k candidate tails
    bool found = false;
    for (std::uint64_t code = 0; code < count && !found; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        poly[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      found = is_irreducible_mod_p(poly, p);
    }
    if (!found) throw Error(ErrorKind::ConstructionFailure, "GF: no irreducible polynomial found");
  }

  PresentedQuotientSpec spec;
  spec.modulus = p;
  spec.variables = {"X"};
  Polynomial rel;
  rel.modulus = p;
  for (std::uint32_t i = 0; i <= k; ++i) rel.add_term({i}, poly[i]);
  spec.relations.push_back(rel);
  spec.name = k == 1 ? "Z" + std::to_string(p) : "F" + std::to_string(q);
  Ring r = make_presented_quotient(spec, limits);
  std::vector<Elem> add(r.size() * r.size()), mul(r.size() * r.size());
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b) {
      add[a * r.size() + b] = r.add(a, b);
      mul[a * r.size() + b] = r.mul(a, b);
    }
  return Ring(r.size(), std::move(add), std::move(mul), r.zero(), r.one(), r.labels(),
              Construction::GaloisField, spec.name);
}

Ring make_product(std::span<const Ring> factors, const RingLimits& limits) {
  if (factors.size() < 2)
    throw Error(ErrorKind::InvalidParameter, "product needs at least two factors");
  std::size_t size = 1;
  for (const auto& f : factors) {
    size *= f.size();
    check_size(size, limits);
  }
  const std::size_t k = factors.size();
  // Mixed radix, first factor most significant.
  std::vector<std::vector<Elem>> digits(size, std::vector<Elem>(k));
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rest = idx;
    for (std::size_t j = k; j-- > 0;) {
      digits[idx][j] = static_cast<Elem>(rest % factors[j].size());
      rest /= factors[j].size();
    }
  }
  auto encode = [&](const std::vector<Elem>& d) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < k; ++j) idx = idx * factors[j].size() + d[j];
    return static_cast<Elem>(idx);
  };
  std::vector<Elem> add(size * size), mul(size * size);
  std::vector<Elem> tmp(k);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      for (std::size_t j = 0; j < k; ++j) tmp[j] = factors[j].add(digits[a][j], digits[b][j]);
      add[a * size + b] = add[b * size + a] = encode(tmp);
      for (std::size_t j = 0; j < k; ++j) tmp[j] = factors[j].mul(digits[a][j], digits[b][j]);
      mul[a * size + b] = mul[b * size + a] = encode(tmp);
    }
  }
  std::vector<std::string> labels(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::string s = "(";
    for (std::size_t j = 0; j < k; ++j) {
      if (j) s += ",";
      s += factors[j].label(digits[idx][j]);
    }
    labels[idx] = s + ")";
  }
  std::vector<Elem> zero(k), one(k);
  std::string name;
  for (std::size_t j = 0; j < k; ++j) {
    zero[j] = factors[j].zero();
    one[j] = factors[j].one();
    if (j) name += "x";
    name += factors[j].name();
  }
  return Ring(size, std::move(add), std::move(mul), encode(zero), encode(one), std::move(labels),
              Construction::Product, name);
}

std::vector<Elem> units(const Ring& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a)
    for (Elem b = 0; b < ring.size(); ++b)
      if (ring.mul(a, b) == ring.one()) {
        out.push_back(a);
        break;
      }
  return out;
}

std::vector<Elem> zero_divisors(const Ring& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (a == ring.zero()) continue;
    for (Elem b = 0; b < ring.size(); ++b)
      if (b != ring.zero() && ring.mul(a, b) == ring.zero()) {
        out.push_back(a);
        break;
      }
  }
  return out;
}

std::vector<Elem> idempotents(const Ring& ring) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a)
    if (ring.mul(a, a) == a) out.push_back(a);
  return out;
}

bool is_field(const Ring& ring) {
  return zero_divisors(ring).empty() && units(ring).size() == ring.size() - 1;
}

bool is_decomposable(const Ring& ring) {
  for (Elem e : idempotents(ring))
    if (e != ring.zero() && e != ring.one()) return true;
  return false;
}

std::optional<std::string> find_axiom_violation(const Ring& ring) {
  const std::size_t n = ring.size();
  auto name = [&](Elem a) { return ring.label(a); };
  for (Elem a = 0; a < n; ++a) {
    if (ring.add(a, ring.zero()) != a) return "zero is not an additive identity at " + name(a);
    if (ring.mul(a, ring.one()) != a) return "one is not a multiplicative identity at " + name(a);
    if (ring.add(a, ring.neg(a)) != ring.zero()) return "missing additive inverse of " + name(a);
    for (Elem b = 0; b < n; ++b) {
      if (ring.add(a, b) != ring.add(b, a)) return "addition not commutative";
      if (ring.mul(a, b) != ring.mul(b, a)) return "multiplication not commutative";
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = ring.add(a, b);
      const Elem ab_prod = ring.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (ring.add(ab_sum, c) != ring.add(a, ring.add(b, c)))
          return "addition not associative at (" + name(a) + "," + name(b) + "," + name(c) + ")";
        if (ring.mul(ab_prod, c) != ring.mul(a, ring.mul(b, c)))
          return "multiplication not associative at (" + name(a) + "," + name(b) + "," + name(c) +
                 ")";
        if (ring.mul(a, ring.add(b, c)) != ring.add(ab_prod, ring.mul(a, c)))
          return "distributivity fails at (" + name(a) + "," + name(b) + "," + name(c) + ")";
      }
    }
  return std::nullopt;
}

}  // namespace zdg
