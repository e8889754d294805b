#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdglab/bitset.hpp"
#include "zdglab/ideal.hpp"
#include "zdglab/ring.hpp"

namespace zdg {

/// Simple undirected graph with bitset adjacency rows. Zero-divisor graphs
/// also carry, per vertex, the ring element it stands for.
struct Graph {
  std::size_t n = 0;
  std::vector<Bitset> adj;
  std::vector<std::string> labels;
  std::vector<Elem> elements;
  std::string ring_spec;
  std::string ideal_spec = "zero";

  Graph() = default;
  explicit Graph(std::size_t vertices);

  bool adjacent(std::size_t u, std::size_t v) const { return adj[u].test(v); }
  void add_edge(std::size_t u, std::size_t v);
  std::size_t degree(std::size_t v) const { return adj[v].count(); }
  std::size_t edge_count() const;
  std::optional<std::size_t> vertex_of(Elem e) const;
  Graph complement() const;
};

/// Γ(R): nonzero zero-divisors, adjacent when the product is 0.
Graph build_gamma(const Ring& ring, const std::string& ring_spec = {});
/// Γ_I(R): x outside I with xy in I for some y outside I; adjacency xy in I.
Graph build_gamma_ideal(const Ring& ring, const Ideal& ideal, const std::string& ring_spec = {},
                        const std::string& ideal_spec = {});

enum class ShapeTag {
  Empty,
  Complete,
  CompleteBipartite,
  CompleteMultipartite,
  Star,
  Bistar,
  Path,
  Cycle,
  Other
};

struct ShapeClass {
  ShapeTag tag = ShapeTag::Other;
  std::vector<std::size_t> params;  // part sizes, largest first; n for the others

  std::string name() const;
  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

ShapeClass classify_shape(const Graph& g);

/// nullopt = infinite (acyclic).
std::optional<std::size_t> girth(const Graph& g);
/// nullopt = infinite (disconnected).
std::optional<std::size_t> diameter(const Graph& g);
std::optional<std::size_t> is_regular(const Graph& g);
/// Non-increasing.
std::vector<std::size_t> degree_sequence(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

struct HamiltonOptions {
  std::size_t guard = 24;
  std::uint64_t node_budget = 20'000'000;
};

/// Exact backtracking. Throws SizeLimit above the guard and ResourceLimit when
/// the budget runs out.
bool is_hamiltonian(const Graph& g, const HamiltonOptions& opts = {});

std::string export_dot(const Graph& g);
std::string export_edge_list(const Graph& g);
/// File-name-safe slug of a ring spec.
std::string slug(const std::string& spec);

}  // namespace zdg
