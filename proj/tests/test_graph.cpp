#include "doctest.h"

#include "gen.hpp"
#include "oracle.hpp"
#include "zdglab/error.hpp"
#include "zdglab/graph.hpp"
#include "zdglab/ring_spec.hpp"

using namespace zdg;

namespace {

Graph from_edges(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("Γ(Z_n) matches integer arithmetic") {
  for (int n = 2; n <= 60; ++n) {
    CAPTURE(n);
    const Graph g = build_gamma(make_zn(n));
    const auto z = oracle::gamma_zn(n);
    REQUIRE(g.n == z.vertices.size());
    for (std::size_t i = 0; i < g.n; ++i) {
      CHECK(g.labels[i] == std::to_string(z.vertices[i]));
      for (std::size_t j = 0; j < g.n; ++j) CHECK(g.adjacent(i, j) == z.adj[i][j]);
    }
  }
}

TEST_CASE("Γ_I(R) follows its definition") {
  const Ring r = make_ring("P(Zn(6),Zn(3))");
  const Elem gen = parse_element(r, "(0,1)");
  const Ideal I = ideal_from_generators(r, std::span<const Elem>(&gen, 1));
  const Graph g = build_gamma_ideal(r, I);
  CHECK(g.n == 9);
  for (std::size_t u = 0; u < g.n; ++u) {
    CHECK_FALSE(I.contains(g.elements[u]));
    for (std::size_t v = 0; v < g.n; ++v)
      if (u != v) CHECK(g.adjacent(u, v) == I.contains(r.mul(g.elements[u], g.elements[v])));
  }
  CHECK(build_gamma_ideal(r, zero_ideal(r)).n == build_gamma(r).n);
}

TEST_CASE("shape classification") {
  CHECK(classify_shape(Graph(0)).name() == "empty");
  CHECK(classify_shape(build_gamma(make_zn(4))).name() == "K_1");
  CHECK(classify_shape(build_gamma(make_zn(25))).name() == "K_4");
  CHECK(classify_shape(build_gamma(make_zn(6))).name() == "K_{1,2}");
  CHECK(classify_shape(build_gamma(make_ring("P(Zn(3),Zn(3))"))).name() == "K_{2,2}");
  CHECK(classify_shape(build_gamma(make_ring("P(Zn(3),GF(2,2))"))).name() == "K_{2,3}");
  CHECK(classify_shape(build_gamma(make_zn(27))).name() == "K_{1,1,6}");
  CHECK(classify_shape(cycle(5)).name() == "C_5");
  CHECK(classify_shape(from_edges(4, {{0, 1}, {1, 2}, {2, 3}})).name() == "P_4");
  CHECK(classify_shape(from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})).name() == "other");
}

TEST_CASE("girth, diameter, regularity") {
  CHECK_FALSE(girth(build_gamma(make_zn(8))));
  CHECK(girth(cycle(7)) == 7u);
  CHECK(girth(build_gamma(make_zn(25))) == 3u);
  CHECK(diameter(cycle(6)) == 3u);
  CHECK_FALSE(diameter(from_edges(3, {{0, 1}})));
  CHECK(is_regular(cycle(5)) == 2u);
  CHECK_FALSE(is_regular(build_gamma(make_zn(6))));
  CHECK(degree_sequence(build_gamma(make_zn(8))) == std::vector<std::size_t>{2, 1, 1});
  CHECK(is_bipartite(build_gamma(make_ring("P(Zn(3),Zn(5))"))));
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(is_connected(build_gamma(make_zn(200))));
}

TEST_CASE("property: hamiltonicity agrees with permutation search") {
  gen::Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    const Graph g = gen::random_graph(rng, n, 0.55);
    CHECK(is_hamiltonian(g) == oracle::is_hamiltonian(oracle::from(g)));
  }
  CHECK(is_hamiltonian(build_gamma(make_zn(49))));
  CHECK_FALSE(is_hamiltonian(build_gamma(make_zn(9))));
  CHECK_THROWS_AS(is_hamiltonian(cycle(30)), Error);
}

TEST_CASE("exports") {
  const Graph g = build_gamma(make_zn(6));
  CHECK(export_edge_list(g) == "0 1\n1 2\n");
  const auto dot = export_dot(g);
  CHECK(dot.find("\"2\" -- \"3\"") != std::string::npos);
  CHECK(dot.find("\"3\" -- \"4\"") != std::string::npos);
  Graph lone(2);
  lone.labels = {"a", "b"};
  const auto d2 = export_dot(lone);
  CHECK(d2.find("\"a\";") != std::string::npos);
  CHECK(slug("P(Zn(2),Zn(4))").find('(') == std::string::npos);
}

TEST_CASE("complement") {
  gen::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = gen::mixed_graph(rng, 12);
    const Graph c = g.complement();
    CHECK(g.edge_count() + c.edge_count() == g.n * (g.n - (g.n ? 1 : 0)) / 2);
    for (std::size_t u = 0; u < g.n; ++u)
      for (std::size_t v = 0; v < g.n; ++v)
        if (u != v) CHECK(g.adjacent(u, v) != c.adjacent(u, v));
  }
}

}
