#include "zdglab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "zdglab/error.hpp"

namespace zdg {

const char* to_string(SolveStatus s) { return s == SolveStatus::Exact ? "exact" : "aborted"; }

bool is_independent(const Graph& g, const Bitset& s) {
  for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v))
    if (g.adj[v].intersects(s)) return false;
  return true;
}

bool is_clique(const Graph& g, const Bitset& s) {
  for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) {
    Bitset others = s;
    others.reset(v);
    if (!others.is_subset_of(g.adj[v])) return false;
  }
  return true;
}

bool is_dominating(const Graph& g, const Bitset& s) {
  for (std::size_t v = 0; v < g.n; ++v)
    if (!s.test(v) && !g.adj[v].intersects(s)) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Limits {
  std::uint64_t max_nodes;
  std::optional<Clock::time_point> deadline;
};

Limits limits_of(const SolveBudget& b) {
  Limits l{b.max_nodes, std::nullopt};
  if (b.time_hint) l.deadline = Clock::now() + *b.time_hint;
  return l;
}

unsigned worker_count(const SolveBudget& b) {
  if (b.workers != 0) return b.workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Weighted clique instance after reductions, vertices renumbered in search order.
struct Reduced {
  std::size_t m = 0;
  std::vector<Bitset> adj;
  std::vector<std::uint64_t> w;
  std::vector<std::vector<std::size_t>> members;  // original vertices per position
};

// True twins merge (weights add); a non-adjacent vertex whose neighbourhood is
// contained in a heavier one's is dropped. Both preserve the optimum.
Reduced reduce_for_clique(const Graph& g, std::span<const std::uint64_t> weights) {
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> closed;
  for (std::size_t v = 0; v < g.n; ++v) {
    Bitset nb = g.adj[v];
    nb.set(v);
    closed[nb.words()].push_back(v);
  }
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [k, vs] : closed) groups.push_back(vs);
  std::sort(groups.begin(), groups.end());  // by smallest member
  const std::size_t k = groups.size();
  std::vector<std::uint64_t> gw(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (auto v : groups[i]) gw[i] += weights[v];
  std::vector<Bitset> gadj(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(groups[i][0], groups[j][0])) {
        gadj[i].set(j);
        gadj[j].set(i);
      }

  std::vector<bool> keep(k, true);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k && keep[u]; ++v) {
      if (u == v || gadj[u].test(v) || !gadj[u].is_subset_of(gadj[v])) continue;
      const bool same_nb = gadj[u] == gadj[v];
      if (gw[u] < gw[v] || (gw[u] == gw[v] && (!same_nb || v < u))) keep[u] = false;
    }

  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < k; ++i)
    if (keep[i]) alive.push_back(i);
  auto live_degree = [&](std::size_t i) {
    std::size_t d = 0;
    for (auto j : alive) d += gadj[i].test(j);
    return d;
  };
  std::vector<std::size_t> deg(k);
  for (auto i : alive) deg[i] = live_degree(i);
  std::stable_sort(alive.begin(), alive.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

  Reduced r;
  r.m = alive.size();
  r.adj.assign(r.m, Bitset(r.m));
  for (std::size_t p = 0; p < r.m; ++p) {
    r.w.push_back(gw[alive[p]]);
    r.members.push_back(groups[alive[p]]);
    for (std::size_t q = 0; q < r.m; ++q)
      if (gadj[alive[p]].test(alive[q])) r.adj[p].set(q);
  }
  return r;
}

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> best{0};
  std::atomic<bool> stop{false};
  Limits limits;
};

// Greedy sequential colouring; returns vertices grouped by colour and the
// prefix bounds (sum of class maxima over each prefix).
void colour(const Reduced& r, const Bitset& p, std::vector<std::size_t>& order,
            std::vector<std::uint64_t>& bound) {
  order.clear();
  bound.clear();
  Bitset uncoloured = p;
  std::uint64_t done = 0;
  while (uncoloured.any()) {
    Bitset q = uncoloured;
    std::uint64_t cls_max = 0;
    for (auto v = q.find_first(); v != Bitset::npos; v = q.find_next(v)) {
      uncoloured.reset(v);
      q.subtract(r.adj[v]);
      cls_max = std::max(cls_max, r.w[v]);
      order.push_back(v);
      bound.push_back(done + cls_max);
    }
    done += cls_max;
  }
}

class CliqueTask {
 public:
  CliqueTask(const Reduced& r, Shared& shared) : r_(r), sh_(shared) {}

  void run(std::size_t root, const Bitset& cand) {
    current_.push_back(root);
    if (cand.none())
      record(r_.w[root]);
    else
      expand(cand, r_.w[root]);
    current_.pop_back();
  }

  std::uint64_t best() const { return best_; }
  const std::vector<std::size_t>& best_set() const { return best_set_; }

 private:
  bool out_of_budget() {
    if (sh_.stop.load(std::memory_order_relaxed)) return true;
    const auto n = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    bool over = n > sh_.limits.max_nodes;
    if (!over && sh_.limits.deadline && (n & 1023) == 0) over = Clock::now() > *sh_.limits.deadline;
    if (over) sh_.stop.store(true);
    return over;
  }

  void record(std::uint64_t value) {
    if (value <= best_) return;
    best_ = value;
    best_set_ = current_;
    auto g = sh_.best.load();
    while (g < value && !sh_.best.compare_exchange_weak(g, value)) {
    }
  }

  void expand(Bitset p, std::uint64_t cw) {
    if (out_of_budget()) return;
    std::vector<std::size_t> order;
    std::vector<std::uint64_t> bound;
    colour(r_, p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      const auto ub = cw + bound[i];
      if (ub <= best_ || ub < sh_.best.load(std::memory_order_relaxed)) return;
      if (sh_.stop.load(std::memory_order_relaxed)) return;
      const auto v = order[i];
      current_.push_back(v);
      Bitset np = p & r_.adj[v];
      if (np.none())
        record(cw + r_.w[v]);
      else
        expand(std::move(np), cw + r_.w[v]);
      current_.pop_back();
      p.reset(v);
    }
  }

  const Reduced& r_;
  Shared& sh_;
  std::uint64_t best_ = 0;
  std::vector<std::size_t> best_set_;
  std::vector<std::size_t> current_;
};

SolveResult solve_clique(const Graph& g, std::span<const std::uint64_t> weights,
                         const SolveBudget& budget) {
  if (weights.size() != g.n) throw Error(ErrorKind::InvalidParameter, "weight count mismatch");
  if (std::any_of(weights.begin(), weights.end(), [](std::uint64_t w) { return w == 0; }))
    throw Error(ErrorKind::InvalidParameter, "weights must be positive");
  SolveResult res;
  res.witness = Bitset(g.n);
  if (g.n == 0) return res;

  const Reduced r = reduce_for_clique(g, weights);
  Shared sh;
  sh.limits = limits_of(budget);

  // Root: one task per branching vertex, in the order a sequential search visits them.
  std::vector<std::size_t> order;
  std::vector<std::uint64_t> bound;
  Bitset all(r.m);
  all.set_all();
  colour(r, all, order, bound);
  const std::size_t tasks = order.size();
  std::vector<std::uint64_t> task_best(tasks, 0);
  std::vector<std::vector<std::size_t>> task_set(tasks);
  std::vector<Bitset> prefix(tasks, Bitset(r.m));
  for (std::size_t i = 1; i < tasks; ++i) {
    prefix[i] = prefix[i - 1];
    prefix[i].set(order[i - 1]);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks || sh.stop.load()) return;
      const std::size_t i = tasks - 1 - t;
      if (bound[i] < sh.best.load()) continue;
      CliqueTask task(r, sh);
      task.run(order[i], prefix[i] & r.adj[order[i]]);
      task_best[t] = task.best();
      task_set[t] = task.best_set();
    }
  };
  const unsigned nw = std::min<std::size_t>(worker_count(budget), std::max<std::size_t>(tasks, 1));
  if (nw <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < nw; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::size_t winner = tasks;
  for (std::size_t t = 0; t < tasks; ++t)
    if (winner == tasks || task_best[t] > task_best[winner]) winner = t;
  if (winner < tasks && task_best[winner] > 0)
    for (auto p : task_set[winner])
      for (auto v : r.members[p]) res.witness.set(v);
  res.value = 0;
  for (auto v : res.witness.members()) res.value += weights[v];
  res.nodes = sh.nodes.load();
  res.status = sh.stop.load() ? SolveStatus::Aborted : SolveStatus::Exact;
  if (!is_clique(g, res.witness)) throw std::logic_error("clique witness failed verification");
  return res;
}

}  // namespace

SolveResult max_weight_clique(const Graph& g, std::span<const std::uint64_t> weights,
                              const SolveBudget& budget) {
  return solve_clique(g, weights, budget);
}

SolveResult max_clique(const Graph& g, const SolveBudget& budget) {
  const std::vector<std::uint64_t> ones(g.n, 1);
  return solve_clique(g, ones, budget);
}

SolveResult max_weight_independent_set(const Graph& g, std::span<const std::uint64_t> weights,
                                       const SolveBudget& budget) {
  auto res = solve_clique(g.complement(), weights, budget);
  if (!is_independent(g, res.witness))
    throw std::logic_error("independent set witness failed verification");
  return res;
}

SolveResult max_independent_set(const Graph& g, const SolveBudget& budget) {
  const std::vector<std::uint64_t> ones(g.n, 1);
  return max_weight_independent_set(g, ones, budget);
}

namespace {

// Number of cliques in a greedy clique cover of `cand`: an upper bound on
// how many independent vertices it can still contribute.
std::size_t clique_cover_bound(const Graph& g, Bitset cand) {
  std::size_t cliques = 0;
  while (cand.any()) {
    const auto u = cand.find_first();
    cand.reset(u);
    Bitset ext = cand & g.adj[u];
    while (ext.any()) {
      const auto x = ext.find_first();
      cand.reset(x);
      ext.reset(x);
      ext &= g.adj[x];
    }
    ++cliques;
  }
  return cliques;
}

struct Enumerator {
  const Graph& g;
  std::size_t alpha;
  std::size_t cap;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  IndependentSetEnumeration& out;

  void dfs(Bitset current, std::size_t size, Bitset cand) {
    if (out.truncated || out.aborted) return;
    if (++nodes > max_nodes) {
      out.aborted = true;
      return;
    }
    if (size == alpha) {
      if (out.sets.size() == cap) {
        out.truncated = true;
        return;
      }
      out.sets.push_back(current);
      return;
    }
    if (size + clique_cover_bound(g, cand) < alpha) return;
    const auto v = cand.find_first();
    Bitset without = cand;
    without.reset(v);
    Bitset with = without;
    with.subtract(g.adj[v]);
    current.set(v);
    dfs(current, size + 1, with);
    current.reset(v);
    dfs(current, size, without);
  }
};

}  // namespace

IndependentSetEnumeration enumerate_maximum_independent_sets(const Graph& g, std::size_t cap,
                                                             const SolveBudget& budget) {
  IndependentSetEnumeration out;
  const auto mis = max_independent_set(g, budget);
  out.alpha = mis.value;
  if (!mis.exact()) {
    out.aborted = true;
    return out;
  }
  if (g.n == 0) {
    out.sets.push_back(Bitset(0));
    return out;
  }
  Bitset all(g.n);
  all.set_all();
  Enumerator e{g, out.alpha, cap, budget.max_nodes, 0, out};
  e.dfs(Bitset(g.n), 0, all);
  return out;
}

namespace {

struct Dominator {
  const Graph& g;
  std::vector<Bitset> closed;
  Bitset all;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::size_t best_size;
  Bitset best;

  // Disjoint closed neighbourhoods of uncovered vertices each need their own dominator.
  std::size_t lower_bound(const Bitset& covered) const {
    Bitset uncovered = all;
    uncovered.subtract(covered);
    if (uncovered.none()) return 0;
    std::vector<std::size_t> us = uncovered.members();
    std::stable_sort(us.begin(), us.end(), [&](std::size_t a, std::size_t b) {
      return closed[a].count() < closed[b].count();
    });
    Bitset used(g.n);
    std::size_t packing = 0;
    for (auto u : us)
      if (!closed[u].intersects(used)) {
        used |= closed[u];
        ++packing;
      }
    std::size_t max_gain = 0;
    for (std::size_t v = 0; v < g.n; ++v)
      max_gain = std::max(max_gain, (closed[v] & uncovered).count());
    const std::size_t by_gain = (uncovered.count() + max_gain - 1) / max_gain;
    return std::max(packing, by_gain);
  }

  void search(Bitset chosen, std::size_t size, const Bitset& covered) {
    if (aborted) return;
    if (++nodes > max_nodes) {
      aborted = true;
      return;
    }
    if (covered == all) {
      if (size < best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + lower_bound(covered) >= best_size) return;
    Bitset uncovered = all;
    uncovered.subtract(covered);
    std::size_t pick = Bitset::npos, pick_n = 0;
    for (auto u = uncovered.find_first(); u != Bitset::npos; u = uncovered.find_next(u))
      if (pick == Bitset::npos || closed[u].count() < pick_n) {
        pick = u;
        pick_n = closed[u].count();
      }
    std::vector<std::size_t> cands = closed[pick].members();
    std::vector<std::size_t> gain(g.n);
    for (auto c : cands) gain[c] = (closed[c] & uncovered).count();
    std::stable_sort(cands.begin(), cands.end(),
                     [&](std::size_t a, std::size_t b) { return gain[a] > gain[b]; });
    for (auto c : cands) {
      chosen.set(c);
      search(chosen, size + 1, covered | closed[c]);
      chosen.reset(c);
      if (aborted) return;
    }
  }
};

}  // namespace

SolveResult min_dominating_set(const Graph& g, const SolveBudget& budget, std::size_t guard) {
  Dominator d{g, {}, Bitset(g.n), budget.max_nodes, 0, false, 0, Bitset(g.n)};
  d.all.set_all();
  for (std::size_t v = 0; v < g.n; ++v) {
    Bitset c = g.adj[v];
    c.set(v);
    d.closed.push_back(std::move(c));
  }
  // Greedy incumbent: most newly covered, lowest index on ties.
  Bitset covered(g.n);
  while (!(covered == d.all)) {
    std::size_t bv = 0, bg = 0;
    for (std::size_t v = 0; v < g.n; ++v) {
      const auto gain = (d.closed[v] & ~covered).count();
      if (gain > bg) {
        bg = gain;
        bv = v;
      }
    }
    d.best.set(bv);
    covered |= d.closed[bv];
  }
  d.best_size = d.best.count();

  SolveResult res;
  if (g.n > guard) {
    res.status = SolveStatus::Aborted;
  } else {
    // Search for strictly smaller sets; the greedy set stands if none exists.
    d.search(Bitset(g.n), 0, Bitset(g.n));
    res.status = d.aborted ? SolveStatus::Aborted : SolveStatus::Exact;
  }
  res.witness = d.best;
  res.value = d.best.count();
  res.nodes = d.nodes;
  if (!is_dominating(g, res.witness)) throw std::logic_error("dominating set failed verification");
  return res;
}

}  // namespace zdg
