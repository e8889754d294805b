#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "zdglab/graph.hpp"
#include "zdglab/ring.hpp"

namespace oracle {

struct Small {
  int n = 0;
  std::vector<std::uint64_t> adj;  // open neighbourhoods
};

inline Small from(const zdg::Graph& g) {
  Small s;
  s.n = static_cast<int>(g.n);
  s.adj.assign(g.n, 0);
  for (std::size_t u = 0; u < g.n; ++u)
    for (std::size_t v = 0; v < g.n; ++v)
      if (u != v && g.adjacent(u, v)) s.adj[u] |= std::uint64_t{1} << v;
  return s;
}

inline Small complement(const Small& g) {
  Small c = g;
  const std::uint64_t all = g.n == 64 ? ~0ull : (std::uint64_t{1} << g.n) - 1;
  for (int v = 0; v < g.n; ++v) c.adj[v] = all & ~g.adj[v] & ~(std::uint64_t{1} << v);
  return c;
}

inline int alpha_rec(const Small& g, std::uint64_t cand) {
  if (!cand) return 0;
  const int v = std::countr_zero(cand);
  const std::uint64_t bit = std::uint64_t{1} << v;
  const int with = 1 + alpha_rec(g, cand & ~bit & ~g.adj[v]);
  const int without = alpha_rec(g, cand & ~bit);
  return std::max(with, without);
}

inline int alpha(const Small& g) {
  return g.n ? alpha_rec(g, g.n == 64 ? ~0ull : (std::uint64_t{1} << g.n) - 1) : 0;
}

inline int omega(const Small& g) { return alpha(complement(g)); }

inline bool choose(const Small& g, int from, int left, std::uint64_t covered, std::uint64_t all) {
  if (covered == all) return true;
  if (left == 0) return false;
  for (int v = from; v < g.n; ++v)
    if (choose(g, v + 1, left - 1, covered | g.adj[v] | (std::uint64_t{1} << v), all)) return true;
  return false;
}

inline int gamma(const Small& g) {
  const std::uint64_t all = g.n == 64 ? ~0ull : (std::uint64_t{1} << g.n) - 1;
  for (int k = 0; k <= g.n; ++k)
    if (choose(g, 0, k, 0, all)) return k;
  return g.n;
}

inline int alpha(const zdg::Graph& g) { return alpha(from(g)); }
inline int omega(const zdg::Graph& g) { return omega(from(g)); }
inline int gamma(const zdg::Graph& g) { return gamma(from(g)); }

inline std::uint64_t weighted_alpha(const Small& g, const std::vector<std::uint64_t>& w) {
  std::uint64_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
    bool ok = true;
    std::uint64_t total = 0;
    for (int v = 0; v < g.n && ok; ++v)
      if (m >> v & 1) {
        ok = !(g.adj[v] & m);
        total += w[v];
      }
    if (ok) best = std::max(best, total);
  }
  return best;
}

/// Every maximum independent set, as sorted vertex lists.
inline std::vector<std::vector<int>> all_max_independent(const Small& g) {
  const int a = alpha(g);
  std::vector<std::vector<int>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
    if (std::popcount(m) != a) continue;
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if (m >> v & 1) ok = !(g.adj[v] & m);
    if (!ok) continue;
    std::vector<int> s;
    for (int v = 0; v < g.n; ++v)
      if (m >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Γ(Z_n) from integer arithmetic: vertex list and adjacency.
struct ZnGraph {
  std::vector<int> vertices;
  std::vector<std::vector<bool>> adj;
};

inline ZnGraph gamma_zn(int n) {
  ZnGraph z;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (x * y % n == 0) {
        z.vertices.push_back(x);
        break;
      }
  const auto m = z.vertices.size();
  z.adj.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      z.adj[i][j] = i != j && z.vertices[i] * z.vertices[j] % n == 0;
  return z;
}

/// Γ(R) straight from the multiplication table.
inline Small gamma_from_table(const zdg::Ring& r, std::vector<zdg::Elem>* verts = nullptr) {
  std::vector<zdg::Elem> vs;
  for (zdg::Elem x = 0; x < r.size(); ++x) {
    if (x == r.zero()) continue;
    for (zdg::Elem y = 0; y < r.size(); ++y)
      if (y != r.zero() && r.mul(x, y) == r.zero()) {
        vs.push_back(x);
        break;
      }
  }
  Small s;
  s.n = static_cast<int>(vs.size());
  s.adj.assign(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j && r.mul(vs[i], vs[j]) == r.zero()) s.adj[i] |= std::uint64_t{1} << j;
  if (verts) *verts = vs;
  return s;
}

/// α of a product of fields with |F_i*| = p[i]: best intersecting family of
/// nonempty proper index subsets, by trying every family. k <= 4.
inline std::uint64_t field_product_alpha(const std::vector<std::uint64_t>& p) {
  const int k = static_cast<int>(p.size());
  std::vector<unsigned> subsets;
  std::vector<std::uint64_t> weight;
  for (unsigned s = 1; s + 1 < (1u << k); ++s) {
    std::uint64_t w = 1;
    for (int i = 0; i < k; ++i)
      if (s >> i & 1) w *= p[i];
    subsets.push_back(s);
    weight.push_back(w);
  }
  const auto m = subsets.size();
  std::uint64_t best = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << m); ++fam) {
    bool ok = true;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(fam >> i & 1)) continue;
      total += weight[i];
      for (std::size_t j = i + 1; j < m && ok; ++j)
        if ((fam >> j & 1) && !(subsets[i] & subsets[j])) ok = false;
    }
    if (ok) best = std::max(best, total);
  }
  return best;
}

inline bool is_hamiltonian(const Small& g) {
  if (g.n < 3) return false;
  std::vector<int> perm(g.n);
  for (int i = 0; i < g.n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < g.n && ok; ++i) ok = g.adj[perm[i]] >> perm[(i + 1) % g.n] & 1;
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

}  // namespace oracle
