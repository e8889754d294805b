#include "zdglab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "zdglab/catalog.hpp"
#include "zdglab/error.hpp"
#include "zdglab/formulas.hpp"
#include "zdglab/graph.hpp"
#include "zdglab/ideal.hpp"
#include "zdglab/ring_spec.hpp"
#include "zdglab/solver.hpp"

namespace zdg::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t positive(std::string_view key, std::string_view value) {
  std::uint64_t v = 0;
  const auto* end = value.data() + value.size();
  auto [p, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc{} || p != end)
    throw Error(ErrorKind::Parse, std::string(key) + ": not a number: " + std::string(value));
  if (v == 0) throw Error(ErrorKind::InvalidParameter, std::string(key) + " must be positive");
  return v;
}

std::string set_string(const Graph& g, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s.members()) {
    if (!first) out += ",";
    out += g.labels[v];
    first = false;
  }
  return out + "}";
}

std::string family_string(const std::vector<Subset>& fam, std::size_t k) {
  std::string out = "{";
  for (std::size_t i = 0; i < fam.size(); ++i) out += (i ? ",E" : "E") + subset_name(fam[i], k);
  return out + "}";
}

struct Built {
  Ring ring;
  std::optional<Ideal> ideal;
  Graph graph;
};

// The ideal keeps a pointer to the ring, so the ring lives on the heap.
std::unique_ptr<Built> build(const std::string& spec, const std::string& ideal_text,
                             const RingLimits& limits) {
  auto b = std::make_unique<Built>(Built{make_ring(spec, limits), std::nullopt, {}});
  if (ideal_text.empty()) {
    b->graph = build_gamma(b->ring, spec);
    return b;
  }
  std::vector<Elem> gens;
  for (const auto& t : split_top_level(ideal_text)) gens.push_back(parse_element(b->ring, t));
  b->ideal = ideal_from_generators(b->ring, gens);
  b->graph = build_gamma_ideal(b->ring, *b->ideal, spec, ideal_text);
  return b;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
  f << text;
  if (!f.flush()) throw Error(ErrorKind::Io, "write failed for " + path);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_ring_info(const Config& cfg, const std::string& spec, std::ostream& out) {
  const Ring r = make_ring(spec, cfg.verify.limits);
  const auto ls = local_structure(r);
  out << "ring: " << r.name() << '\n'
      << "construction: " << to_string(r.construction()) << '\n'
      << "size: " << r.size() << '\n'
      << "units: " << units(r).size() << '\n'
      << "zero-divisors: " << zero_divisors(r).size() << '\n'
      << "field: " << yes_no(is_field(r)) << '\n'
      << "local: " << yes_no(ls.is_local);
  if (ls.is_local) out << " (maximal ideal of size " << ls.maximal_ideal->size() << ')';
  out << '\n' << "decomposable: " << yes_no(is_decomposable(r)) << '\n';
  std::string ids;
  for (auto e : idempotents(r)) ids += (ids.empty() ? "" : ",") + r.label(e);
  out << "idempotents: {" << ids << "}\n";
  return 0;
}

int cmd_graph(const Config& cfg, const std::string& spec, const std::string& ideal,
              const std::string& dot, const std::string& edges, std::ostream& out) {
  const auto b = build(spec, ideal, cfg.verify.limits);
  const Graph& g = b->graph;
  if (dot.empty() && edges.empty()) {
    out << export_dot(g);
    return 0;
  }
  if (!dot.empty()) write_file(dot, export_dot(g));
  if (!edges.empty()) write_file(edges, export_edge_list(g));
  out << "vertices: " << g.n << "\nedges: " << g.edge_count() << "\nshape: " << classify_shape(g).name()
      << '\n';
  return 0;
}

int cmd_invariants(const Config& cfg, const std::string& spec, const std::string& ideal,
                   std::ostream& out) {
  const auto b = build(spec, ideal, cfg.verify.limits);
  const Graph& g = b->graph;
  const auto& budget = cfg.verify.budget;
  const auto a = max_independent_set(g, budget);
  const auto d = min_dominating_set(g, budget, cfg.verify.domination_guard);
  const auto c = max_clique(g, budget);
  auto line = [&](const char* name, const SolveResult& r) {
    out << name << ": " << r.value << ' ' << set_string(g, r.witness);
    if (!r.exact()) out << " (aborted, best found)";
    out << '\n';
  };
  const auto gi = girth(g);
  const auto di = diameter(g);
  out << "ring: " << b->ring.name() << '\n'
      << "ideal: " << g.ideal_spec << '\n'
      << "vertices: " << g.n << '\n'
      << "edges: " << g.edge_count() << '\n'
      << "shape: " << classify_shape(g).name() << '\n';
  line("alpha", a);
  line("gamma", d);
  line("omega", c);
  out << "girth: " << (gi ? std::to_string(*gi) : "inf") << '\n'
      << "diameter: " << (di ? std::to_string(*di) : "inf") << '\n';
  return 0;
}

int cmd_formula(const Config& cfg, const std::string& family, std::vector<std::uint64_t> args,
                std::ostream& out) {
  std::sort(args.rbegin(), args.rend());
  const Profile p(args.begin(), args.end());
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw Error(ErrorKind::InvalidParameter,
                  "formula " + family + " takes " + std::to_string(k) + " values");
  };
  auto prediction = [&](const FormulaPrediction& f) {
    out << "value: " << f.value << '\n'
        << "theorem: " << f.theorem_id << '\n'
        << "case: " << f.case_id << '\n'
        << "family: " << family_string(f.witness_subsets, p.size()) << '\n';
  };
  if (family == "two") {
    need(2);
    out << "value: " << alpha_two_fields(p[0], p[1]) << '\n';
  } else if (family == "three") {
    need(3);
    prediction(alpha_three_fields(p));
  } else if (family == "four") {
    need(4);
    prediction(alpha_four_fields(p));
  } else if (family == "five") {
    need(5);
    prediction(alpha_five_fields(p));
    out << "t: " << five_field_t(p) << '\n';
    const auto d = five_field_deltas(p);
    for (std::size_t i = 0; i < d.size(); ++i) out << "Delta" << i + 1 << ": " << d[i] << '\n';
  } else if (family == "exact") {
    check_profile(p);
    const auto ex = alpha_field_product_exact(p, cfg.verify.budget);
    out << "value: " << ex.result.value << '\n'
        << "status: " << to_string(ex.result.status) << '\n'
        << "family: " << family_string(ex.subsets, p.size()) << '\n';
  } else if (family == "lowerbound") {
    const auto lb = general_lower_bound(p);
    out << "value: " << lb.value << '\n'
        << "family: " << family_string(lb.witness_subsets, p.size()) << '\n'
        << "intersecting: " << yes_no(lb.witness_is_independent) << '\n';
    if (lb.disjoint_pair)
      out << "disjoint pair: E" << subset_name(lb.disjoint_pair->first, p.size()) << " E"
          << subset_name(lb.disjoint_pair->second, p.size()) << '\n';
  } else {
    throw Error(ErrorKind::Parse, "unknown formula family " + family);
  }
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& what, std::ostream& out) {
  Report r;
  if (what == "tables") r = reproduce_tables(cfg.verify);
  else if (what == "fields")
    r = sweep_field_products(cfg.fields_max_size, {cfg.fields_k_min, cfg.fields_k_max}, cfg.verify);
  else if (what == "ideals") r = sweep_ideals(cfg.ideals_max_size, cfg.verify);
  else r = sweep_structure_theorems(cfg.structure_n_max, cfg.verify);

  if (cfg.out_dir.empty()) {
    out << render_report(r, cfg.format);
  } else {
    const auto path = cfg.out_dir + "/" + r.title + "." + extension(cfg.format);
    write_report(r, cfg.format, path);
    out << r.title << ':';
    for (const auto& [sev, c] : r.counts()) out << ' ' << to_string(sev) << '=' << c;
    out << "\nreport: " << path << '\n';
  }
  return exit_code(r);
}

std::string csv(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

int cmd_catalog(const std::string& action, std::ostream& out) {
  if (action == "list") {
    for (const auto& e : catalog_all()) {
      out << e.name << '\t' << e.spec << '\t';
      if (e.rows.empty()) out << "caption of Fig. " << *e.caption_figure;
      else out << e.rows.size() << (e.rows.size() == 1 ? " row" : " rows");
      out << '\n';
    }
    return 0;
  }
  out << "name,spec,vertices,ring_size,shape,alpha,gamma,omega\n";
  for (const auto& e : catalog_all())
    for (const auto& r : e.rows)
      out << csv(e.name) << ',' << csv(e.spec) << ',' << r.vertices << ',' << r.ring_size << ','
          << csv(r.shape) << ',' << r.alpha << ',' << r.gamma << ',' << r.omega << '\n';
  return 0;
}

}  // namespace

void Config::set(std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "budget" || key == "budget.max_nodes") verify.budget.max_nodes = positive(key, value);
  else if (key == "ring.size_bound") verify.limits.size_bound = positive(key, value);
  else if (key == "ring.work_bound") verify.limits.work_bound = positive(key, value);
  else if (key == "hamilton.guard") verify.hamilton.guard = positive(key, value);
  else if (key == "hamilton.node_budget") verify.hamilton.node_budget = positive(key, value);
  else if (key == "domination.guard") verify.domination_guard = positive(key, value);
  else if (key == "enumeration.cap") verify.enumeration_cap = positive(key, value);
  else if (key == "fields.concrete_max") verify.concrete_max = positive(key, value);
  else if (key == "fields.max_size") fields_max_size = positive(key, value);
  else if (key == "fields.k_min") fields_k_min = positive(key, value);
  else if (key == "fields.k_max") fields_k_max = positive(key, value);
  else if (key == "ideals.max_size") ideals_max_size = positive(key, value);
  else if (key == "structure.n_max") structure_n_max = static_cast<std::uint32_t>(positive(key, value));
  else if (key == "workers") {
    verify.workers = static_cast<unsigned>(positive(key, value));
    verify.budget.workers = verify.workers;
  } else if (key == "out") out_dir = std::string(value);
  else if (key == "journal") verify.journal = std::string(value);
  else if (key == "format") format = parse_report_format(std::string(value));
  else throw Error(ErrorKind::Parse, "unknown config key '" + std::string(key) + "'");
}

void parse_config(Config& cfg, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::Parse, "config line " + std::to_string(line_no) + ": expected key=value");
    try {
      cfg.set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.kind(), "config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void load_config(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  parse_config(cfg, ss.str());
}

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.emplace_back(trim(cur));
  std::erase_if(out, [](const std::string& x) { return x.empty(); });
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lab for zero-divisor graphs of finite commutative rings", "zdglab"};
  app.require_subcommand(1);
  std::string config_path, format, out_dir, seed;
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> workers;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--budget", budget, "solver node budget");
  app.add_option("--format", format, "report format: json|csv|markdown");
  app.add_option("--out", out_dir, "report directory (default $ZDGLAB_OUT)");
  app.add_option("--seed", seed, "ignored; everything is deterministic");
  app.add_option("--workers", workers, "parallel workers");

  auto* ring = app.add_subcommand("ring", "ring construction")->fallthrough();
  ring->require_subcommand(1);
  auto* ring_info = ring->add_subcommand("info", "size, units, zero-divisors, local, decomposable")
                        ->fallthrough();
  std::string spec;
  ring_info->add_option("spec", spec, "ring spec")->required();

  std::string ideal, dot, edges;
  auto* graph = app.add_subcommand("graph", "build and export a graph")->fallthrough();
  graph->add_option("spec", spec, "ring spec")->required();
  graph->add_option("--ideal", ideal, "comma-separated generator labels");
  graph->add_option("--dot", dot, "write Graphviz DOT");
  graph->add_option("--edges", edges, "write edge list");

  auto* inv = app.add_subcommand("invariants", "alpha, gamma, omega, girth, shape")->fallthrough();
  inv->add_option("spec", spec, "ring spec")->required();
  inv->add_option("--ideal", ideal, "comma-separated generator labels");

  std::string family;
  std::vector<std::uint64_t> values;
  auto* formula = app.add_subcommand("formula", "closed forms for products of fields")->fallthrough();
  formula->add_option("family", family, "two|three|four|five|exact|lowerbound")
      ->required()
      ->check(CLI::IsMember({"two", "three", "four", "five", "exact", "lowerbound"}));
  formula->add_option("n", values, "|F_i*| for each factor")->required();

  std::string what;
  std::optional<std::uint64_t> max_size, n_max;
  std::optional<std::size_t> k_min, k_max;
  std::string journal;
  auto* verify = app.add_subcommand("verify", "reproduce tables and run theorem sweeps")->fallthrough();
  verify->add_option("what", what, "tables|fields|ideals|structure")
      ->required()
      ->check(CLI::IsMember({"tables", "fields", "ideals", "structure"}));
  verify->add_option("--max-size", max_size, "largest ring for fields/ideals");
  verify->add_option("--k-min", k_min, "fewest factors (fields)");
  verify->add_option("--k-max", k_max, "most factors (fields)");
  verify->add_option("--n-max", n_max, "largest n for Z_n (structure)");
  verify->add_option("--journal", journal, "JSON-lines journal for resuming");

  std::string action;
  auto* catalog = app.add_subcommand("catalog", "the small-ring tables")->fallthrough();
  catalog->add_option("action", action, "list|dump")->required()->check(CLI::IsMember({"list", "dump"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  try {
    Config cfg;
    if (const char* env = std::getenv("ZDGLAB_OUT"); env && *env) cfg.out_dir = env;
    if (!config_path.empty()) load_config(cfg, config_path);
    if (budget) cfg.set("budget", std::to_string(*budget));
    if (workers) cfg.set("workers", std::to_string(*workers));
    if (!format.empty()) cfg.set("format", format);
    if (!out_dir.empty()) cfg.set("out", out_dir);
    if (!journal.empty()) cfg.set("journal", journal);
    if (max_size) {
      cfg.set("fields.max_size", std::to_string(*max_size));
      cfg.set("ideals.max_size", std::to_string(*max_size));
    }
    if (k_min) cfg.set("fields.k_min", std::to_string(*k_min));
    if (k_max) cfg.set("fields.k_max", std::to_string(*k_max));
    if (n_max) cfg.set("structure.n_max", std::to_string(*n_max));
    if (!seed.empty()) err << "warning: --seed is ignored, all computations are deterministic\n";

    if (ring_info->parsed()) return cmd_ring_info(cfg, spec, out);
    if (graph->parsed()) return cmd_graph(cfg, spec, ideal, dot, edges, out);
    if (inv->parsed()) return cmd_invariants(cfg, spec, ideal, out);
    if (formula->parsed()) return cmd_formula(cfg, family, values, out);
    if (verify->parsed()) return cmd_verify(cfg, what, out);
    if (catalog->parsed()) return cmd_catalog(action, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::NotFound ||
        e.kind() == ErrorKind::InvalidParameter)
      err << app.help();
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace zdg::cli
