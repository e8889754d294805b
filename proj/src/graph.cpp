#include "zdglab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "zdglab/error.hpp"

namespace zdg {

Graph::Graph(std::size_t vertices) : n(vertices), adj(vertices, Bitset(vertices)) {
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adj[u].set(v);
  adj[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (const auto& row : adj) s += row.count();
  return s / 2;
}

std::optional<std::size_t> Graph::vertex_of(Elem e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

Graph Graph::complement() const {
  Graph c = *this;
  for (std::size_t i = 0; i < n; ++i) {
    c.adj[i] = ~adj[i];
    c.adj[i].reset(i);
  }
  return c;
}

namespace {

Graph build_on(const Ring& ring, const std::vector<Elem>& verts,
               const std::function<bool(Elem)>& in_target) {
  Graph g(verts.size());
  g.elements = verts;
  for (std::size_t i = 0; i < verts.size(); ++i) g.labels[i] = ring.label(verts[i]);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (in_target(ring.mul(verts[i], verts[j]))) g.add_edge(i, j);
  return g;
}

}  // namespace

Graph build_gamma(const Ring& ring, const std::string& ring_spec) {
  Graph g = build_on(ring, zero_divisors(ring), [&](Elem p) { return p == ring.zero(); });
  g.ring_spec = ring_spec.empty() ? ring.name() : ring_spec;
  return g;
}

Graph build_gamma_ideal(const Ring& ring, const Ideal& ideal, const std::string& ring_spec,
                        const std::string& ideal_spec) {
  if (!is_proper(ring, ideal))
    throw Error(ErrorKind::InvalidParameter, "ideal-based graph needs a proper ideal");
  std::vector<Elem> verts;
  for (Elem x = 0; x < ring.size(); ++x) {
    if (ideal.contains(x)) continue;
    for (Elem y = 0; y < ring.size(); ++y)
      if (!ideal.contains(y) && ideal.contains(ring.mul(x, y))) {
        verts.push_back(x);
        break;
      }
  }
  Graph g = build_on(ring, verts, [&](Elem p) { return ideal.contains(p); });
  g.ring_spec = ring_spec.empty() ? ring.name() : ring_spec;
  if (!ideal_spec.empty()) {
    g.ideal_spec = ideal_spec;
  } else {
    std::string gens;
    for (Elem e : ideal.generators) gens += (gens.empty() ? "" : ",") + ring.label(e);
    g.ideal_spec = "(" + gens + ")";
  }
  return g;
}

std::string ShapeClass::name() const {
  auto join = [&] {
    std::string s;
    for (auto p : params) s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
  };
  switch (tag) {
    case ShapeTag::Empty: return "empty";
    case ShapeTag::Complete: return "K_" + std::to_string(params[0]);
    case ShapeTag::CompleteBipartite:
    case ShapeTag::CompleteMultipartite: {
      auto p = params;
      std::sort(p.begin(), p.end());
      std::string s;
      for (auto x : p) s += (s.empty() ? "" : ",") + std::to_string(x);
      return "K_{" + s + "}";
    }
    case ShapeTag::Star: return "K_{1," + std::to_string(params[0]) + "}";
    case ShapeTag::Bistar: return "bistar(" + join() + ")";
    case ShapeTag::Path: return "P_" + std::to_string(params[0]);
    case ShapeTag::Cycle: return "C_" + std::to_string(params[0]);
    case ShapeTag::Other: return "other";
  }
  return "other";
}

namespace {

// Parts of a complete multipartite graph (non-adjacency classes), or nullopt.
std::optional<std::vector<std::size_t>> multipartite_parts(const Graph& g) {
  std::vector<int> part(g.n, -1);
  std::vector<std::size_t> sizes;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (part[v] >= 0) continue;
    Bitset cls = ~g.adj[v];  // includes v
    const int id = static_cast<int>(sizes.size());
    std::size_t count = 0;
    for (auto u = cls.find_first(); u != Bitset::npos; u = cls.find_next(u)) {
      if (part[u] >= 0) return std::nullopt;
      // every member must have exactly the same non-neighborhood
      Bitset other = ~g.adj[u];
      if (!(other == cls)) return std::nullopt;
      part[u] = id;
      ++count;
    }
    sizes.push_back(count);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace

ShapeClass classify_shape(const Graph& g) {
  const std::size_t n = g.n;
  if (n == 0) return {ShapeTag::Empty, {}};
  const std::size_t m = g.edge_count();
  if (m == n * (n - 1) / 2) return {ShapeTag::Complete, {n}};
  if (auto parts = multipartite_parts(g); parts && parts->size() >= 2) {
    if (parts->size() == 2) {
      if ((*parts)[1] == 1 && (*parts)[0] >= 2) return {ShapeTag::Star, {(*parts)[0]}};
      return {ShapeTag::CompleteBipartite, *parts};
    }
    return {ShapeTag::CompleteMultipartite, *parts};
  }
  const bool connected = is_connected(g);
  const auto degs = degree_sequence(g);
  // Two adjacent centres with k >= 2 leaves each.
  if (connected && n >= 6 && n % 2 == 0 && m == n - 1) {
    const std::size_t k = (n - 2) / 2;
    std::vector<std::size_t> centres;
    for (std::size_t v = 0; v < n; ++v)
      if (g.degree(v) == k + 1) centres.push_back(v);
    if (centres.size() == 2 && g.adjacent(centres[0], centres[1]) && degs[2] == 1)
      return {ShapeTag::Bistar, {k}};
  }
  if (connected && n >= 3 && m == n && degs.front() == 2 && degs.back() == 2)
    return {ShapeTag::Cycle, {n}};
  if (connected && m == n - 1 && degs.front() <= 2) return {ShapeTag::Path, {n}};
  return {ShapeTag::Other, {}};
}

std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(g.n), parent(g.n);
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  for (std::size_t s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[s] = 0;
    parent[s] = unseen;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto v = g.adj[u].find_first(); v != Bitset::npos; v = g.adj[u].find_next(v)) {
        if (dist[v] == unseen) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (parent[u] != v) {
          const auto len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

namespace {

std::vector<std::size_t> bfs(const Graph& g, std::size_t s) {
  std::vector<std::size_t> dist(g.n, static_cast<std::size_t>(-1));
  dist[s] = 0;
  std::deque<std::size_t> q{s};
  while (!q.empty()) {
    const auto u = q.front();
    q.pop_front();
    for (auto v = g.adj[u].find_first(); v != Bitset::npos; v = g.adj[u].find_next(v))
      if (dist[v] == static_cast<std::size_t>(-1)) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t s = 0; s < g.n; ++s)
    for (auto x : bfs(g, s)) {
      if (x == static_cast<std::size_t>(-1)) return std::nullopt;
      d = std::max(d, x);
    }
  return d;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  const auto d = bfs(g, 0);
  return std::none_of(d.begin(), d.end(),
                      [](std::size_t x) { return x == static_cast<std::size_t>(-1); });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n, -1);
  for (std::size_t s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto v = g.adj[u].find_first(); v != Bitset::npos; v = g.adj[u].find_next(v)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::size_t> is_regular(const Graph& g) {
  if (g.n == 0) return std::nullopt;
  const auto d = g.degree(0);
  for (std::size_t v = 1; v < g.n; ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.n);
  for (std::size_t v = 0; v < g.n; ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

namespace {

struct HamiltonSearch {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  Bitset unvisited;
  std::size_t start = 0;

  bool extend(std::size_t end, std::size_t remaining) {
    if (++nodes > budget)
      throw Error(ErrorKind::ResourceLimit, "hamiltonicity search exceeded its node budget");
    if (remaining == 0) return g.adjacent(end, start);
    // Every unvisited vertex still needs two usable neighbours.
    Bitset open = unvisited;
    open.set(end);
    open.set(start);
    for (auto w = unvisited.find_first(); w != Bitset::npos; w = unvisited.find_next(w)) {
      const auto usable = (g.adj[w] & open).count();
      if (usable < 2 && !(remaining == 1 && usable >= 1)) return false;
    }
    Bitset next = g.adj[end] & unvisited;
    std::vector<std::size_t> order = next.members();
    // Fewest remaining options first.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return (g.adj[a] & unvisited).count() < (g.adj[b] & unvisited).count();
    });
    for (auto v : order) {
      unvisited.reset(v);
      if (extend(v, remaining - 1)) return true;
      unvisited.set(v);
    }
    return false;
  }
};

}  // namespace

bool is_hamiltonian(const Graph& g, const HamiltonOptions& opts) {
  if (g.n > opts.guard)
    throw Error(ErrorKind::SizeLimit, "hamiltonicity check limited to " +
                                          std::to_string(opts.guard) + " vertices");
  if (g.n < 3) return false;
  if (!is_connected(g)) return false;
  for (std::size_t v = 0; v < g.n; ++v)
    if (g.degree(v) < 2) return false;
  if (is_bipartite(g)) {
    // Unequal sides rule out a spanning cycle.
    std::vector<int> color(g.n, -1);
    color[0] = 0;
    std::deque<std::size_t> q{0};
    std::size_t zeros = 1;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto v = g.adj[u].find_first(); v != Bitset::npos; v = g.adj[u].find_next(v))
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          zeros += color[v] == 0;
          q.push_back(v);
        }
    }
    if (2 * zeros != g.n) return false;
  }
  HamiltonSearch s{g, opts.node_budget, 0, Bitset(g.n), 0};
  s.unvisited.set_all();
  s.unvisited.reset(0);
  return s.extend(0, g.n - 1);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t i = 0; i < g.n; ++i)
    if (g.degree(i) == 0) os << "  " << quoted(g.labels[i]) << ";\n";
  for (std::size_t i = 0; i < g.n; ++i)
    for (auto j = g.adj[i].find_next(i); j != Bitset::npos; j = g.adj[i].find_next(j))
      os << "  " << quoted(g.labels[i]) << " -- " << quoted(g.labels[j]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_edge_list(const Graph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.n; ++i)
    for (auto j = g.adj[i].find_next(i); j != Bitset::npos; j = g.adj[i].find_next(j))
      os << i << ' ' << j << '\n';
  return os.str();
}

std::string slug(const std::string& spec) {
  std::string out;
  for (char c : spec) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out.push_back(c);
    else if (!out.empty() && out.back() != '_')
      out.push_back('_');
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "graph" : out;
}

}  // namespace zdg
