#pragma once

// Small hand-rolled generators for property tests. Fixed seeds only.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zdglab/graph.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline zdg::Graph random_graph(Rng& rng, std::size_t n, double density) {
  zdg::Graph g(n);
  std::bernoulli_distribution edge(density);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

/// Mixed sizes 0..max_n and densities from sparse to nearly complete.
inline zdg::Graph mixed_graph(Rng& rng, std::size_t max_n) {
  static const double densities[] = {0.05, 0.15, 0.3, 0.5, 0.7, 0.85, 0.95};
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_n)(rng);
  const double d = densities[std::uniform_int_distribution<int>(0, 6)(rng)];
  return random_graph(rng, n, d);
}

inline std::vector<std::uint64_t> weights(Rng& rng, std::size_t n, std::uint64_t max_w) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = std::uniform_int_distribution<std::uint64_t>(1, max_w)(rng);
  return w;
}

/// Spec strings for small rings: Z_n, fields, and two-factor products.
inline std::string small_ring_spec(Rng& rng) {
  static const char* atoms[] = {"Zn(2)", "Zn(3)", "Zn(4)", "Zn(5)", "Zn(6)", "Zn(8)", "Zn(9)",
                                "GF(2,2)", "Q(2;X;X^2)", "Q(3;X;X^2)", "Q(2;X;X^3)"};
  const int pick = std::uniform_int_distribution<int>(0, 13)(rng);
  if (pick < 11) return atoms[pick];
  const int a = std::uniform_int_distribution<int>(0, 6)(rng);
  const int b = std::uniform_int_distribution<int>(0, 6)(rng);
  return std::string("P(") + atoms[a] + "," + atoms[b] + ")";
}

}  // namespace gen
