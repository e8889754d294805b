#include "zdglab/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "zdglab/catalog.hpp"
#include "zdglab/error.hpp"
#include "zdglab/presented.hpp"

namespace zdg {

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw Error(ErrorKind::Parse, "unbalanced parentheses in ring spec");
    if (c == ',' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw Error(ErrorKind::Parse, "unbalanced parentheses in ring spec");
  out.push_back(strip(cur));
  return out;
}

std::uint32_t to_uint(const std::string& s, const char* what) {
  if (s.empty() || s.size() > 9 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorKind::Parse, std::string("expected an integer for ") + what + ", got '" + s + "'");
  return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

Ring make_ring(std::string_view spec_in, const RingLimits& limits) {
  const std::string spec = strip(spec_in);
  if (spec.rfind("cat:", 0) == 0) {
    const auto& entry = catalog_lookup(strip(spec.substr(4)));
    return make_ring(entry.spec, limits);
  }
  const auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')')
    throw Error(ErrorKind::Parse, "cannot parse ring spec '" + spec + "'");
  const std::string head = strip(spec.substr(0, open));
  const std::string body = spec.substr(open + 1, spec.size() - open - 2);

  if (head == "Zn") {
    const auto args = split_args(body);
    if (args.size() != 1) throw Error(ErrorKind::Parse, "Zn expects one argument");
    return make_zn(to_uint(args[0], "n"), limits);
  }
  if (head == "GF") {
    const auto args = split_args(body);
    if (args.size() < 2 || args.size() > 3)
      throw Error(ErrorKind::Parse, "GF expects <p>,<k>[,<poly>]");
    const auto p = to_uint(args[0], "p"), k = to_uint(args[1], "k");
    std::optional<std::vector<std::uint32_t>> poly;
    if (args.size() == 3) {
      if (!is_prime(p)) throw Error(ErrorKind::InvalidParameter, "GF: p must be prime");
      const auto parsed = parse_polynomial(args[2], {"X"}, p);
      std::uint32_t deg = 0;
      for (const auto& [e, c] : parsed.terms) deg = std::max(deg, e[0]);
      std::vector<std::uint32_t> coeffs(deg + 1, 0);
      for (const auto& [e, c] : parsed.terms) coeffs[e[0]] = c;
      poly = coeffs;
    }
    return make_gf(p, k, poly, limits);
  }
  if (head == "Q") return make_presented_quotient(parse_presented_quotient(body), limits);
  if (head == "P") {
    const auto args = split_args(body);
    if (args.size() < 2) throw Error(ErrorKind::Parse, "P expects at least two factors");
    std::vector<Ring> factors;
    for (const auto& a : args) factors.push_back(make_ring(a, limits));
    return make_product(factors, limits);
  }
  throw Error(ErrorKind::Parse, "unknown ring constructor '" + head + "'");
}

Elem parse_element(const Ring& ring, std::string_view text) {
  if (auto e = ring.find_label(text)) return *e;
  const std::string s = strip(text);
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const auto v = std::stoul(s);
    if (v < ring.size()) return static_cast<Elem>(v);
  }
  throw Error(ErrorKind::Parse, "no element '" + s + "' in " + ring.name());
}

}  // namespace zdg
