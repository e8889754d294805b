#include "zdglab/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cctype>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "zdglab/catalog.hpp"
#include "zdglab/error.hpp"
#include "zdglab/formulas.hpp"
#include "zdglab/ideal.hpp"
#include "zdglab/ring_spec.hpp"

namespace zdg {

namespace {

using Json = nlohmann::ordered_json;

struct Subject {
  std::string id;
  std::string group;
  std::function<std::vector<Finding>()> run;
};

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string braces(const std::vector<std::string>& xs) { return "{" + join(xs) + "}"; }

template <class T>
std::string num_list(const std::vector<T>& xs, const char* open = "(", const char* close = ")") {
  std::vector<std::string> s;
  for (auto x : xs) s.push_back(std::to_string(x));
  return open + join(s) + close;
}

std::string label_set(const Graph& g, const Bitset& s) {
  std::vector<std::string> out;
  for (auto v : s.members()) out.push_back(g.labels[v]);
  return braces(out);
}

std::string family_str(const std::vector<Subset>& fam, std::size_t k) {
  std::vector<std::string> out;
  for (auto s : fam) out.push_back("E" + subset_name(s, k));
  return braces(out);
}

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Finding make(Severity sev, const Subject& s, std::string metric, std::string computed,
             std::string expected, std::string witness = {}, std::string note = {}) {
  return {sev, s.id, std::move(metric), std::move(computed), std::move(expected),
          std::move(witness), std::move(note), s.group};
}

Severity judge(bool exact, bool ok) {
  if (!exact) return Severity::SolverAbort;
  return ok ? Severity::Match : Severity::PaperDiscrepancy;
}

Json to_json(const Finding& f) {
  return Json{{"severity", to_string(f.severity)}, {"subject", f.subject},
              {"metric", f.metric},                {"computed", f.computed},
              {"expected", f.expected},            {"witness", f.witness},
              {"note", f.note},                    {"group", f.group}};
}

Severity parse_severity(const std::string& s) {
  for (auto sev : {Severity::Match, Severity::PaperDiscrepancy, Severity::SolverAbort,
                   Severity::ConstructionIssue, Severity::Inconclusive})
    if (s == to_string(sev)) return sev;
  throw Error(ErrorKind::Parse, "unknown severity " + s);
}

Finding from_json(const Json& j) {
  Finding f;
  f.severity = parse_severity(j.at("severity").get<std::string>());
  f.subject = j.at("subject").get<std::string>();
  f.metric = j.at("metric").get<std::string>();
  f.computed = j.at("computed").get<std::string>();
  f.expected = j.at("expected").get<std::string>();
  f.witness = j.at("witness").get<std::string>();
  f.note = j.at("note").get<std::string>();
  f.group = j.at("group").get<std::string>();
  return f;
}

std::string config_key(const Report& r) {
  Json c = Json::object();
  for (const auto& [k, v] : r.config) c[k] = v;
  return c.dump();
}

std::map<std::string, std::vector<Finding>> load_journal(const std::string& path,
                                                         const Report& r) {
  std::map<std::string, std::vector<Finding>> done;
  std::ifstream in(path);
  if (!in) return done;
  const auto key = config_key(r);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto j = Json::parse(line);
      if (j.at("sweep") != r.title || j.at("config").dump() != key) continue;
      std::vector<Finding> fs;
      for (const auto& f : j.at("findings")) fs.push_back(from_json(f));
      done[j.at("subject").get<std::string>()] = std::move(fs);
    } catch (const std::exception&) {
      // torn last line after a crash
    }
  }
  return done;
}

std::vector<Finding> run_guarded(const Subject& s) {
  try {
    return s.run();
  } catch (const Error& e) {
    return {make(Severity::ConstructionIssue, s, "construction", to_string(e.kind()), "",
                 "", e.what())};
  } catch (const std::exception& e) {
    return {make(Severity::ConstructionIssue, s, "construction", "internal", "", "", e.what())};
  }
}

Report run_subjects(const std::string& title, const std::vector<Subject>& subjects,
                    const VerifyOptions& opts) {
  Report r;
  r.title = title;
  r.tool_version = kToolVersion;
  r.timestamp = now_utc();
  r.config = opts.snapshot();

  std::map<std::string, std::vector<Finding>> done;
  if (!opts.journal.empty()) done = load_journal(opts.journal, r);
  std::mutex journal_mu;
  std::ofstream journal;
  if (!opts.journal.empty()) {
    const auto parent = std::filesystem::path(opts.journal).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    journal.open(opts.journal, std::ios::app);
    if (!journal) throw Error(ErrorKind::Io, "cannot open journal " + opts.journal);
  }
  const auto key = Json::parse(config_key(r));

  std::vector<std::vector<Finding>> results(subjects.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < subjects.size();) {
      const auto& s = subjects[i];
      if (auto it = done.find(s.id); it != done.end()) {
        results[i] = it->second;
        continue;
      }
      results[i] = run_guarded(s);
      if (journal.is_open()) {
        Json line{{"sweep", title}, {"config", key}, {"subject", s.id}};
        line["findings"] = Json::array();
        for (const auto& f : results[i]) line["findings"].push_back(to_json(f));
        std::lock_guard lock(journal_mu);
        journal << line.dump() << '\n';
        journal.flush();
      }
    }
  };
  unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, subjects.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (auto& fs : results)
    for (auto& f : fs) r.findings.push_back(std::move(f));
  std::stable_sort(r.findings.begin(), r.findings.end(), [](const Finding& a, const Finding& b) {
    if (a.subject != b.subject) return natural_less(a.subject, b.subject);
    return a.metric < b.metric;
  });
  return r;
}

SolveBudget subject_budget(const VerifyOptions& opts) {
  SolveBudget b = opts.budget;
  // Parallelism lives at the subject level.
  if (opts.workers != 1) b.workers = 1;
  return b;
}

// ---- tables ----

std::map<int, std::vector<std::size_t>> figure_references(const VerifyOptions& opts) {
  struct Seen {
    std::map<std::vector<std::size_t>, int> votes;
    std::optional<std::vector<std::size_t>> caption;
  };
  std::map<int, Seen> seen;
  for (const auto& e : catalog_all()) {
    std::set<int> figs;
    for (const auto& row : e.rows)
      if (row.figure) figs.insert(*row.figure);
    if (e.caption_figure) figs.insert(*e.caption_figure);
    if (figs.empty()) continue;
    std::vector<std::size_t> degs;
    try {
      degs = degree_sequence(build_gamma(make_ring(e.spec, opts.limits)));
    } catch (const Error&) {
      continue;
    }
    for (int f : figs) {
      ++seen[f].votes[degs];
      if (e.caption_figure == f) seen[f].caption = degs;
    }
  }
  std::map<int, std::vector<std::size_t>> refs;
  for (const auto& [fig, s] : seen) {
    int best = 0;
    for (const auto& [d, v] : s.votes) best = std::max(best, v);
    if (s.caption && s.votes.at(*s.caption) == best) {
      refs[fig] = *s.caption;
      continue;
    }
    for (const auto& [d, v] : s.votes)
      if (v == best) {
        refs[fig] = d;
        break;
      }
  }
  return refs;
}

struct RowValues {
  std::size_t ring_size = 0, n = 0;
  std::string shape;
  std::size_t alpha = 0, gamma = 0, omega = 0;
};

std::string row_string(const RowValues& v) {
  std::ostringstream os;
  os << "|R|=" << v.ring_size << " n=" << v.n << " shape=" << v.shape << " alpha=" << v.alpha
     << " gamma=" << v.gamma << " omega=" << v.omega;
  return os.str();
}

std::vector<Finding> table_row(const Subject& s, const CatalogEntry& e, const TableRow& row,
                               const std::map<int, std::vector<std::size_t>>& refs,
                               const VerifyOptions& opts) {
  const Ring ring = make_ring(e.spec, opts.limits);
  const Graph g = build_gamma(ring, e.spec);
  const auto budget = subject_budget(opts);
  const auto a = max_independent_set(g, budget);
  const auto d = min_dominating_set(g, budget, opts.domination_guard);
  const auto c = max_clique(g, budget);
  const auto shape = classify_shape(g);
  const auto degs = degree_sequence(g);

  RowValues got{ring.size(), g.n, shape.name(), a.value, d.value, c.value};
  RowValues want{row.ring_size, static_cast<std::size_t>(row.vertices), row.shape,
                 row.alpha, row.gamma, row.omega};
  bool shape_ok;
  if (row.figure) {
    auto it = refs.find(*row.figure);
    shape_ok = it != refs.end() && it->second == degs;
    if (shape_ok) got.shape = row.shape;
    else got.shape += " deg" + num_list(degs);
  } else {
    shape_ok = normalize_shape(got.shape) == normalize_shape(row.shape);
  }

  std::vector<std::string> diffs;
  auto cmp = [&](const char* what, std::size_t x, std::size_t y) {
    if (x != y)
      diffs.push_back(std::string(what) + " computed " + std::to_string(x) + ", printed " +
                      std::to_string(y));
  };
  cmp("|R|", got.ring_size, want.ring_size);
  cmp("n", got.n, want.n);
  if (!shape_ok) diffs.push_back("shape computed " + got.shape + ", printed " + row.shape);
  cmp("alpha", got.alpha, want.alpha);
  cmp("gamma", got.gamma, want.gamma);
  cmp("omega", got.omega, want.omega);

  const std::string witness = "alpha " + label_set(g, a.witness) + "; gamma " +
                              label_set(g, d.witness) + "; omega " + label_set(g, c.witness);
  const bool exact = a.exact() && d.exact() && c.exact();
  if (!exact) {
    std::vector<std::string> which;
    if (!a.exact()) which.push_back("alpha");
    if (!d.exact()) which.push_back("gamma");
    if (!c.exact()) which.push_back("omega");
    return {make(Severity::SolverAbort, s, "row", row_string(got), row_string(want), witness,
                 "aborted: " + join(which))};
  }
  if (diffs.empty())
    return {make(Severity::Match, s, "row", row_string(got), row_string(want), witness)};

  std::string note = join(diffs, "; ");
  Severity sev = Severity::PaperDiscrepancy;
  if (g.n <= 20) {
    const auto ex = exhaustive_invariants(g);
    if (ex.alpha == a.value && ex.gamma == d.value && ex.omega == c.value) {
      note += "; exhaustive 2^n check agrees";
    } else {
      sev = Severity::SolverAbort;
      note += "; exhaustive 2^n check disagrees (" + std::to_string(ex.alpha) + "," +
              std::to_string(ex.gamma) + "," + std::to_string(ex.omega) + ")";
    }
  }
  return {make(sev, s, "row", row_string(got), row_string(want), witness, note)};
}

// ---- field products ----

struct Example {
  std::string label;
  Profile profile;
  std::optional<std::uint64_t> printed;
  std::string printed_case;
};

const std::vector<Example>& field_examples() {
  static const std::vector<Example> ex = {
      {"three Z5xZ2xZ2", {4, 1, 1}, 9, "A2"},
      {"three Z7xZ5xZ5", {6, 4, 4}, 64, "A1"},
      {"four Z5xZ2xZ2xZ2", {4, 1, 1, 1}, 28, "I1"},
      {"four Z5xZ3xZ3xZ3", {4, 2, 2, 2}, 80, "I2"},
      {"four Z5xZ5xZ3xZ2", {4, 4, 2, 1}, 88, "I3"},
      {"five (i) Z5xZ2^4", {4, 1, 1, 1, 1}, {}, "Delta1"},
      {"five (ii) Z5^3xZ2^2", {4, 4, 4, 1, 1}, {}, "Delta2"},
      {"five (iii) Z7xZ3^4", {6, 2, 2, 2, 2}, {}, "Delta3"},
      {"five (iv) Z7xZ3^3xZ2", {6, 2, 2, 2, 1}, {}, "Delta4"},
      {"five (v) Z5^3xZ2^2", {4, 4, 4, 1, 1}, {}, "Delta5"},
      {"five (vi) Z7^2xZ3xZ2^2", {6, 6, 2, 1, 1}, {}, "Delta6"},
      {"five (vii) Z3^5", {2, 2, 2, 2, 2}, {}, "Delta7"},
  };
  return ex;
}

std::optional<FormulaPrediction> closed_form(const Profile& p) {
  switch (p.size()) {
    case 2: {
      FormulaPrediction f;
      f.value = alpha_two_fields(p[0], p[1]);
      f.theorem_id = "two-fields";
      return f;
    }
    case 3: return alpha_three_fields(p);
    case 4: return alpha_four_fields(p);
    case 5: return alpha_five_fields(p);
    default: return std::nullopt;
  }
}

std::uint64_t formula_for_case(const Profile& p, const std::string& case_id) {
  if (p.size() == 5 && case_id.rfind("Delta", 0) == 0) {
    const auto deltas = five_field_deltas(p);
    return five_field_t(p) + deltas.at(std::stoul(case_id.substr(5)) - 1);
  }
  return 0;
}

// Concrete Γ of the realized product: MIS plus the E-set adjacency rule.
std::vector<Finding> concrete_checks(const Subject& s, const Profile& p, const ExactFamily& ex,
                                     const VerifyOptions& opts) {
  std::vector<Finding> out;
  const auto fields = realize_profile(p, opts.limits);
  const Ring ring = make_product(fields, opts.limits);
  const Graph g = build_gamma(ring);
  const auto mis = max_independent_set(g, subject_budget(opts));
  out.push_back(make(judge(mis.exact() && ex.result.exact(), mis.value == ex.result.value), s,
                     "concrete", std::to_string(mis.value), std::to_string(ex.result.value),
                     "", "MIS of the " + std::to_string(g.n) + "-vertex graph vs blow-up"));

  std::vector<Subset> support(g.n, 0);
  for (std::size_t v = 0; v < g.n; ++v) {
    std::size_t rest = g.elements[v];
    for (std::size_t j = fields.size(); j-- > 0;) {
      if (rest % fields[j].size() != fields[j].zero()) support[v] |= Subset{1} << j;
      rest /= fields[j].size();
    }
  }
  std::string bad;
  for (std::size_t u = 0; u < g.n && bad.empty(); ++u)
    for (std::size_t v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v) != ((support[u] & support[v]) == 0)) {
        bad = g.labels[u] + " " + g.labels[v];
        break;
      }
  out.push_back(make(bad.empty() ? Severity::Match : Severity::PaperDiscrepancy, s, "e-sets",
                     bad.empty() ? "adjacent iff disjoint supports" : "violated",
                     "adjacent iff disjoint supports", bad));
  return out;
}

std::vector<Finding> profile_findings(const Subject& s, const Profile& p,
                                      const VerifyOptions& opts) {
  std::vector<Finding> out;
  const auto k = p.size();
  const auto ex = alpha_field_product_exact(p, subject_budget(opts));
  const auto exact_str = std::to_string(ex.result.value);
  const auto fam = family_str(ex.subsets, k);

  if (auto f = closed_form(p)) {
    std::string note = f->theorem_id;
    if (!f->case_id.empty()) note += " case " + f->case_id;
    out.push_back(make(judge(ex.result.exact(), f->value == ex.result.value), s, "formula",
                       exact_str, std::to_string(f->value), fam, note));
  }

  const auto lb = general_lower_bound(p);
  std::string note = lb.witness_is_independent ? "family intersecting" : "family not intersecting";
  if (lb.disjoint_pair)
    note += ": E" + subset_name(lb.disjoint_pair->first, k) + " and E" +
            subset_name(lb.disjoint_pair->second, k) + " are disjoint";
  out.push_back(make(judge(ex.result.exact(), lb.value <= ex.result.value), s, "lower-bound",
                     exact_str, ">= " + std::to_string(lb.value), family_str(lb.witness_subsets, k),
                     note));

  if (profile_ring_size(p) <= std::min<std::uint64_t>(opts.concrete_max, opts.limits.size_bound)) {
    auto c = concrete_checks(s, p, ex, opts);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Finding> example_findings(const Subject& s, const Example& e,
                                      const VerifyOptions& opts) {
  auto out = profile_findings(s, e.profile, opts);
  const auto ex = alpha_field_product_exact(e.profile, subject_budget(opts));
  const auto pred = closed_form(e.profile);
  const auto fam = family_str(ex.subsets, e.profile.size());
  out.push_back(make(pred->case_id == e.printed_case ? Severity::Match : Severity::PaperDiscrepancy,
                     s, "case", pred->case_id, e.printed_case, "",
                     "case selected by the closed form vs case named in the example"));
  if (e.printed) {
    out.push_back(make(judge(ex.result.exact(), *e.printed == ex.result.value), s, "printed",
                       std::to_string(ex.result.value), std::to_string(*e.printed), fam));
  } else {
    const auto claimed = formula_for_case(e.profile, e.printed_case);
    out.push_back(make(judge(ex.result.exact(), claimed == ex.result.value), s, "printed",
                       std::to_string(ex.result.value), "t+" + e.printed_case + "=" +
                       std::to_string(claimed), fam));
  }
  return out;
}

// ---- ideals ----

std::string ideal_label(const Ring& ring, const Ideal& I) {
  std::vector<std::string> gens;
  for (auto g : I.generators) gens.push_back(ring.label(g));
  return "(" + join(gens, ";") + ")";
}

std::vector<Finding> ideal_findings(const Subject& s, const Ring& ring, const Ideal& I,
                                    const VerifyOptions& opts) {
  std::vector<Finding> out;
  const auto a = ideal_alpha_analysis(ring, I, subject_budget(opts), opts.enumeration_cap);
  const std::string pair =
      "alpha_q=" + std::to_string(a.alpha_quotient) + " alpha_I=" + std::to_string(a.alpha_ideal_graph);

  out.push_back(make(judge(a.exact, a.bound_ok), s, "bounds",
                     pair + " |I|=" + std::to_string(a.ideal_size),
                     std::to_string(a.alpha_quotient) + " <= alpha_I <= " +
                         std::to_string(a.ideal_size * a.alpha_quotient)));
  out.push_back(make(judge(a.exact, a.lifts_independent), s, "lift",
                     a.lifts_independent ? "independent" : "not independent", "independent", "",
                     "representatives of every alpha-set of the quotient"));
  out.push_back(make(judge(a.exact, a.formula_sets_independent), s, "formula-set",
                     a.formula_sets_independent ? "independent" : "not independent", "independent",
                     "", "the set built from each alpha-set"));

  const auto values = num_list(a.formula_values, "{", "}");
  const std::string verdict = std::string("verdict ") + to_string(a.verdict);
  auto formula = [&](const char* metric, bool ok) {
    Severity sev = a.verdict == FormulaVerdict::Inconclusive ? Severity::Inconclusive
                                                             : judge(a.exact, ok);
    if (!a.exact) sev = Severity::SolverAbort;
    out.push_back(make(sev, s, metric, std::to_string(a.alpha_ideal_graph), values, "",
                       verdict + (a.enumeration_truncated ? ", enumeration capped" : "")));
  };
  formula("formula-every", a.verdict == FormulaVerdict::Every);
  formula("formula-some",
          a.verdict == FormulaVerdict::Every || a.verdict == FormulaVerdict::MaxOnly);

  // Adjacency transfer between Γ_I(R) and Γ(R/I), over all pairs outside I.
  const Quotient q = quotient_ring(ring, I);
  const Graph gq = build_gamma(q.ring);
  const Graph gi = build_gamma_ideal(ring, I);
  std::array<std::string, 3> bad;
  std::array<std::size_t, 3> checked{};
  auto gi_adj = [&](Elem x, Elem y) {
    auto u = gi.vertex_of(x), v = gi.vertex_of(y);
    return u && v && gi.adjacent(*u, *v);
  };
  for (Elem x = 0; x < ring.size(); ++x) {
    if (I.contains(x)) continue;
    for (Elem y = x + 1; y < ring.size(); ++y) {
      if (I.contains(y)) continue;
      const Elem cx = q.projection[x], cy = q.projection[y];
      const std::string w = ring.label(x) + " " + ring.label(y);
      if (cx != cy) {
        auto u = gq.vertex_of(cx), v = gq.vertex_of(cy);
        const bool q_adj = u && v && gq.adjacent(*u, *v);
        if (q_adj) {
          ++checked[0];
          if (!gi_adj(x, y) && bad[0].empty()) bad[0] = w;
        }
        if (gi_adj(x, y)) {
          ++checked[1];
          if (!q_adj && bad[1].empty()) bad[1] = w;
        }
      } else if (gi_adj(x, y)) {
        ++checked[2];
        if ((!I.contains(ring.mul(x, x)) || !I.contains(ring.mul(y, y))) && bad[2].empty())
          bad[2] = w;
      }
    }
  }
  const char* names[3] = {"transfer-i", "transfer-ii", "transfer-iii"};
  const char* claims[3] = {"adjacent cosets lift to adjacent elements",
                           "adjacent elements in distinct cosets give adjacent cosets",
                           "adjacent elements in one coset square into I"};
  for (int t = 0; t < 3; ++t)
    out.push_back(make(bad[t].empty() ? Severity::Match : Severity::PaperDiscrepancy, s, names[t],
                       bad[t].empty() ? "holds" : "violated", "holds", bad[t],
                       std::string(claims[t]) + ", " + std::to_string(checked[t]) + " pairs"));
  return out;
}

struct IdealExample {
  std::string spec;
  std::string generator;
  std::uint64_t alpha_quotient, alpha_ideal;
};

const std::vector<IdealExample>& ideal_examples() {
  static const std::vector<IdealExample> ex = {
      {"P(Zn(6),Zn(3))", "(0,1)", 2, 6},
      {"Zn(16)", "4", 1, 1},
      {"P(Zn(16),Zn(3))", "(0,1)", 5, 13},
  };
  return ex;
}

std::vector<std::string> ideal_universe(std::uint64_t max_size) {
  std::vector<std::string> specs;
  std::set<std::string> seen;
  auto add = [&](const std::string& s) {
    if (seen.insert(s).second) specs.push_back(s);
  };
  struct Base {
    std::string spec;
    std::uint64_t size;
  };
  std::vector<Base> base;
  for (std::uint32_t n = 2; n <= max_size; ++n) base.push_back({"Zn(" + std::to_string(n) + ")", n});
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}})
  {
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    base.push_back({"GF(" + std::to_string(p) + "," + std::to_string(k) + ")", q});
  }
  base.push_back({"Q(2;X;X^2)", 4});
  base.push_back({"Q(3;X;X^2)", 9});
  base.push_back({"Q(2;X;X^3)", 8});
  base.push_back({"Q(2;X,Y;X^2,XY,Y^2)", 8});
  std::erase_if(base, [&](const Base& b) { return b.size > max_size; });
  for (const auto& b : base) add(b.spec);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      const auto s2 = base[i].size * base[j].size;
      if (s2 > max_size) continue;
      add("P(" + base[i].spec + "," + base[j].spec + ")");
      for (std::size_t l = j; l < base.size(); ++l)
        if (s2 * base[l].size <= max_size)
          add("P(" + base[i].spec + "," + base[j].spec + "," + base[l].spec + ")");
    }
  for (const auto& e : catalog_all()) add("cat:" + e.name);
  return specs;
}

// ---- structure ----

std::optional<bool> hamiltonian(const Graph& g, std::size_t alpha, const VerifyOptions& opts,
                                std::string& how) {
  // A Hamiltonian graph has alpha <= n/2.
  if (g.n >= 3 && 2 * alpha > g.n) {
    how = "alpha > n/2";
    return false;
  }
  if (g.n > opts.hamilton.guard) {
    how = "above hamiltonicity guard";
    return std::nullopt;
  }
  try {
    how = "backtracking";
    return is_hamiltonian(g, opts.hamilton);
  } catch (const Error& e) {
    how = e.what();
    return std::nullopt;
  }
}

std::vector<Finding> structure_findings(const Subject& s, const std::string& spec, bool is_zn,
                                        const VerifyOptions& opts) {
  std::vector<Finding> out;
  const Ring ring = make_ring(spec, opts.limits);
  const Graph g = build_gamma(ring, spec);
  if (g.n == 0) return out;
  const auto a = max_independent_set(g, subject_budget(opts));
  const auto alpha = a.value;
  const auto wit = label_set(g, a.witness);
  const std::string alpha_str = std::to_string(alpha);

  if (!girth(g)) {
    const auto z1 = g.n - 1;
    out.push_back(make(judge(a.exact(), alpha == z1 || alpha == 3), s, "acyclic", alpha_str,
                       "{" + std::to_string(z1) + ",3}", wit, classify_shape(g).name()));
  }
  if (auto r = is_regular(g)) {
    out.push_back(make(judge(a.exact(), alpha == 1 || alpha == *r), s, "regular", alpha_str,
                       "{1," + std::to_string(*r) + "}", wit,
                       "degree " + std::to_string(*r) + ", " + classify_shape(g).name()));
  }
  std::string how;
  const auto ham = a.exact() ? hamiltonian(g, alpha, opts, how) : std::nullopt;
  if (is_zn) {
    if (!ham) {
      out.push_back(make(a.exact() ? Severity::Inconclusive : Severity::SolverAbort, s,
                         "hamiltonian-iff", "unknown", "hamiltonian iff alpha=1", wit, how));
    } else {
      out.push_back(make(judge(true, *ham == (alpha == 1)), s, "hamiltonian-iff",
                         std::string(*ham ? "hamiltonian" : "not hamiltonian") + ", alpha=" + alpha_str,
                         "hamiltonian iff alpha=1", wit, how));
    }
  }
  if (is_decomposable(ring)) {
    if (!ham) {
      out.push_back(make(a.exact() ? Severity::Inconclusive : Severity::SolverAbort, s,
                         "decomposable-hamiltonian", "unknown", "", wit, how));
    } else if (*ham) {
      out.push_back(make(judge(true, 2 * alpha == g.n), s, "decomposable-hamiltonian", alpha_str,
                         std::to_string(g.n) + "/2", wit, how));
    }
  }
  if (const auto ls = local_structure(ring); ls.is_local && ls.maximal_ideal->size() > 1) {
    const auto b = local_ring_alpha_bounds(ring);
    if (b.square_zero) {
      out.push_back(make(judge(a.exact(), alpha == 1), s, "local", alpha_str, "1", wit, "m^2 = 0"));
    } else {
      out.push_back(make(judge(a.exact(), b.lower <= alpha && alpha <= b.upper), s, "local",
                         alpha_str, "[" + std::to_string(b.lower) + "," + std::to_string(b.upper) + "]",
                         wit,
                         "|Z*|=" + std::to_string(b.zero_divisors) +
                             " |Ann(Z)*|=" + std::to_string(b.ann_star)));
    }
  }
  return out;
}

// ---- rendering ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

const Severity kSeverities[] = {Severity::Match, Severity::PaperDiscrepancy, Severity::SolverAbort,
                                Severity::ConstructionIssue, Severity::Inconclusive};

}  // namespace

const char* to_string(Severity s) {
  switch (s) {
    case Severity::Match: return "Match";
    case Severity::PaperDiscrepancy: return "PaperDiscrepancy";
    case Severity::SolverAbort: return "SolverAbort";
    case Severity::ConstructionIssue: return "ConstructionIssue";
    case Severity::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::map<Severity, std::size_t> Report::counts() const {
  std::map<Severity, std::size_t> c;
  for (auto s : kSeverities) c[s] = 0;
  for (const auto& f : findings) ++c[f.severity];
  return c;
}

std::size_t Report::count(Severity s) const { return counts().at(s); }

std::vector<std::pair<std::string, std::string>> VerifyOptions::snapshot() const {
  return {
      {"budget.max_nodes", std::to_string(budget.max_nodes)},
      {"ring.size_bound", std::to_string(limits.size_bound)},
      {"ring.work_bound", std::to_string(limits.work_bound)},
      {"hamilton.guard", std::to_string(hamilton.guard)},
      {"hamilton.node_budget", std::to_string(hamilton.node_budget)},
      {"domination.guard", std::to_string(domination_guard)},
      {"enumeration.cap", std::to_string(enumeration_cap)},
      {"fields.concrete_max", std::to_string(concrete_max)},
  };
}

Report reproduce_tables(const VerifyOptions& opts) {
  const auto refs = figure_references(opts);
  std::vector<Subject> subjects;
  std::map<int, int> per_group;
  for (const auto& e : catalog_all())
    for (const auto& row : e.rows) {
      char id[32];
      std::snprintf(id, sizeof id, "v%02d#%02d ", row.vertices, ++per_group[row.vertices]);
      Subject s{id + e.name, "Vertices " + std::to_string(row.vertices), {}};
      s.run = [s, &e, &row, &refs, &opts] { return table_row(s, e, row, refs, opts); };
      subjects.push_back(std::move(s));
    }
  return run_subjects("tables", subjects, opts);
}

Report sweep_field_products(std::uint64_t max_ring_size,
                            std::pair<std::size_t, std::size_t> k_range,
                            const VerifyOptions& opts) {
  std::vector<Subject> subjects;
  for (std::size_t k = std::max<std::size_t>(2, k_range.first); k <= k_range.second; ++k)
    for (const auto& p : enumerate_profiles(k, max_ring_size)) {
      Subject s{"k" + std::to_string(k) + " " + num_list(p), "k = " + std::to_string(k), {}};
      s.run = [s, p, &opts] { return profile_findings(s, p, opts); };
      subjects.push_back(std::move(s));
    }
  for (const auto& e : field_examples()) {
    Subject s{"example " + e.label + " " + num_list(e.profile), "examples", {}};
    s.run = [s, &e, &opts] { return example_findings(s, e, opts); };
    subjects.push_back(std::move(s));
  }
  return run_subjects("fields", subjects, opts);
}

Report sweep_ideals(std::uint64_t max_ring_size, const VerifyOptions& opts) {
  std::vector<Subject> subjects;
  // One subject per ring; each covers all of its proper non-prime ideals.
  for (const auto& spec : ideal_universe(max_ring_size)) {
    Subject s{spec, spec, {}};
    s.run = [s, spec, max_ring_size, &opts] {
      const Ring ring = make_ring(spec, opts.limits);
      std::vector<Finding> out;
      if (ring.size() > max_ring_size) return out;
      for (const auto& I : enumerate_ideals(ring, std::max<std::uint64_t>(64, max_ring_size))) {
        if (!is_proper(ring, I) || is_prime_ideal(ring, I)) continue;
        Subject sub{spec + " I=" + ideal_label(ring, I), spec, {}};
        auto fs = ideal_findings(sub, ring, I, opts);
        out.insert(out.end(), fs.begin(), fs.end());
      }
      return out;
    };
    subjects.push_back(std::move(s));
  }
  for (const auto& e : ideal_examples()) {
    Subject s{"example " + e.spec + " I=(" + e.generator + ")", "examples", {}};
    s.run = [s, &e, &opts] {
      const Ring ring = make_ring(e.spec, opts.limits);
      const Elem gen = parse_element(ring, e.generator);
      const Ideal I = ideal_from_generators(ring, std::span<const Elem>(&gen, 1));
      auto out = ideal_findings(s, ring, I, opts);
      const auto a = ideal_alpha_analysis(ring, I, subject_budget(opts), opts.enumeration_cap);
      const auto got = "(" + std::to_string(a.alpha_quotient) + "," +
                       std::to_string(a.alpha_ideal_graph) + ")";
      const auto want = "(" + std::to_string(e.alpha_quotient) + "," +
                        std::to_string(e.alpha_ideal) + ")";
      out.push_back(make(judge(a.exact, got == want), s, "example", got, want, "",
                         "(alpha quotient, alpha ideal graph)"));
      return out;
    };
    subjects.push_back(std::move(s));
  }
  return run_subjects("ideals", subjects, opts);
}

Report sweep_structure_theorems(std::uint32_t n_max, const VerifyOptions& opts) {
  std::vector<Subject> subjects;
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    const std::string spec = "Zn(" + std::to_string(n) + ")";
    Subject s{spec, "Z_n", {}};
    s.run = [s, spec, &opts] { return structure_findings(s, spec, true, opts); };
    subjects.push_back(std::move(s));
  }
  for (const auto& e : catalog_all()) {
    Subject s{"cat:" + e.name, "catalog", {}};
    s.run = [s, &opts] { return structure_findings(s, s.id, false, opts); };
    subjects.push_back(std::move(s));
  }
  return run_subjects("structure", subjects, opts);
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  throw Error(ErrorKind::Parse, "unknown format '" + s + "' (json|csv|markdown)");
}

const char* extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Markdown: return "md";
  }
  return "txt";
}

std::string render_report(const Report& r, ReportFormat f) {
  std::ostringstream os;
  const auto counts = r.counts();
  switch (f) {
    case ReportFormat::Json: {
      Json j;
      j["title"] = r.title;
      j["tool_version"] = r.tool_version;
      j["timestamp"] = r.timestamp;
      j["config"] = Json::object();
      for (const auto& [k, v] : r.config) j["config"][k] = v;
      j["summary"] = Json::object();
      for (const auto& [sev, c] : counts) j["summary"][to_string(sev)] = c;
      j["findings"] = Json::array();
      for (const auto& fd : r.findings) j["findings"].push_back(to_json(fd));
      os << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv:
      os << "severity,subject,metric,computed,expected,witness,note\n";
      for (const auto& fd : r.findings)
        os << csv_field(to_string(fd.severity)) << ',' << csv_field(fd.subject) << ','
           << csv_field(fd.metric) << ',' << csv_field(fd.computed) << ','
           << csv_field(fd.expected) << ',' << csv_field(fd.witness) << ','
           << csv_field(fd.note) << '\n';
      break;
    case ReportFormat::Markdown: {
      os << "# zdglab " << r.title << "\n\n";
      os << "generated " << r.timestamp << " by zdglab " << r.tool_version << "\n\n";
      os << "| severity | count |\n|---|---|\n";
      for (const auto& [sev, c] : counts) os << "| " << to_string(sev) << " | " << c << " |\n";
      std::vector<std::string> groups;
      for (const auto& fd : r.findings)
        if (std::find(groups.begin(), groups.end(), fd.group) == groups.end())
          groups.push_back(fd.group);
      std::stable_sort(groups.begin(), groups.end(), natural_less);
      for (const auto& g : groups) {
        os << "\n## " << (g.empty() ? "Findings" : g) << "\n\n";
        os << "| subject | metric | severity | computed | expected | note |\n";
        os << "|---|---|---|---|---|---|\n";
        for (const auto& fd : r.findings)
          if (fd.group == g)
            os << "| " << md_cell(fd.subject) << " | " << md_cell(fd.metric) << " | "
               << to_string(fd.severity) << " | " << md_cell(fd.computed) << " | "
               << md_cell(fd.expected) << " | " << md_cell(fd.note) << " |\n";
      }
      break;
    }
  }
  return os.str();
}

void write_report(const Report& r, ReportFormat f, const std::string& path) {
  std::error_code ec;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << render_report(r, f);
  out.close();
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

int exit_code(const Report& r) {
  const auto c = r.counts();
  if (c.at(Severity::ConstructionIssue)) return 2;
  if (c.at(Severity::PaperDiscrepancy) || c.at(Severity::SolverAbort)) return 1;
  return 0;
}

std::string normalize_shape(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && digit(a[i2])) ++i2;
      while (j2 < b.size() && digit(b[j2])) ++j2;
      auto na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
  return a < b;  // equal up to zero padding
}

ExhaustiveInvariants exhaustive_invariants(const Graph& g) {
  if (g.n > 22) throw Error(ErrorKind::SizeLimit, "exhaustive scan limited to 22 vertices");
  ExhaustiveInvariants r;
  if (g.n == 0) return r;
  const std::size_t n = g.n;
  std::vector<std::uint32_t> nbr(n), closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto u : g.adj[v].members()) nbr[v] |= std::uint32_t{1} << u;
    closed[v] = nbr[v] | (std::uint32_t{1} << v);
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> indep(total), clique(total);
  std::vector<std::uint32_t> cover(total);
  indep[0] = clique[0] = 1;
  r.gamma = n;
  for (std::size_t m = 1; m < total; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    indep[m] = indep[rest] && !(nbr[v] & rest);
    clique[m] = clique[rest] && (nbr[v] & rest) == rest;
    cover[m] = cover[rest] | closed[v];
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (indep[m]) r.alpha = std::max(r.alpha, size);
    if (clique[m]) r.omega = std::max(r.omega, size);
    if (cover[m] == full) r.gamma = std::min(r.gamma, size);
  }
  return r;
}

}  // namespace zdg
