#include "cli.hpp"

#include "golden.hpp"
#include "report.hpp"

#include "relgit/conic.hpp"
#include "relgit/invariants.hpp"
#include "relgit/stability.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace relgit::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string problem_path;
  std::string point_text;
  std::string point_path;
  std::string lambda_text;
  unsigned max_degree = 4;
  unsigned syzygy_degree = 8;
  std::string format = "text";
  bool timing = false;

  unsigned n = 0;
  std::string vanishing;
  std::string lengths;
  std::string points;
  std::string config_path;
  std::string a_text;
  std::string sign = "engine";
  bool sweep = false;
  bool components = false;
};

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(std::string("cannot open ") + what + " '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    std::string item(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

unsigned parse_unsigned(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw InputError(std::string("bad ") + what + " '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const char* what) {
  std::vector<unsigned> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_unsigned(item, what));
  return out;
}

json witness_json(const Verdict& v) {
  json j;
  j["status"] = to_string(v.status);
  if (v.witness) {
    j["witness"] = v.witness->to_string();
    j["witness_mu"] = v.witness_mu->to_string();
  }
  return j;
}

std::string verdict_line(const Verdict& v) {
  std::string out = to_string(v.status);
  if (v.witness) out += ": witness lambda = (" + v.witness->to_string() + "), mu = " + v.witness_mu->to_string();
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string order_to_string(const std::optional<Integer>& order) {
  return order ? relgit::to_string(*order) : std::string("inf");
}

GitProblem load(const Options& o, Report& report) {
  if (o.problem_path.empty()) throw InputError("--problem is required");
  std::string text = read_file(o.problem_path, "problem file");
  report.add_input("problem", text);
  return parse_problem(text);
}

PointSample load_point(const Options& o, const GitProblem& problem, Report& report) {
  if (!o.point_text.empty() && !o.point_path.empty()) throw InputError("give either --point or --point-file");
  PointSample p;
  if (!o.point_path.empty()) {
    std::string text = read_file(o.point_path, "point file");
    report.add_input("point", text);
    p = parse_point_json(problem, text);
  } else if (!o.point_text.empty()) {
    report.add_input("point", o.point_text);
    p = parse_point(problem, o.point_text);
  } else {
    throw InputError("a point is required (--point or --point-file)");
  }
  if (!check_on_ideal(problem, p)) throw InputError("point does not lie on the ideal");
  return p;
}

OnePS load_lambda(const Options& o, std::size_t rank) {
  if (o.lambda_text.empty()) throw InputError("--lambda is required");
  OnePS lambda = parse_one_ps(o.lambda_text);
  if (lambda.size() != rank)
    throw InputError("rank mismatch: --lambda has " + std::to_string(lambda.size()) + " entries, torus rank is " +
                     std::to_string(rank));
  return lambda;
}

void cmd_mu(const Options& o, Report& r) {
  auto problem = load(o, r);
  auto p = load_point(o, problem, r);
  auto lambda = load_lambda(o, problem.torus_rank);
  auto m = mu(problem, p, lambda);
  r.result()["lambda"] = lambda.to_string();
  r.result()["mu"] = m.to_string();
  r.line("mu(lambda = (" + lambda.to_string() + ")) = " + m.to_string());
}

void cmd_limit(const Options& o, Report& r) {
  auto problem = load(o, r);
  auto p = load_point(o, problem, r);
  auto lambda = load_lambda(o, problem.torus_rank);
  auto limit = limit_point(problem, p, lambda);
  r.result()["lambda"] = lambda.to_string();
  if (limit) {
    r.result()["limit"] = point_to_string(problem, *limit);
    r.result()["mu"] = mu(problem, p, lambda).to_string();
    r.line("limit = " + point_to_string(problem, *limit));
  } else {
    r.result()["limit"] = nullptr;
    r.result()["mu"] = "inf";
    r.line("limit = none (base limit does not exist, mu = inf)");
  }
}

void cmd_classify(const Options& o, Report& r) {
  auto problem = load(o, r);
  auto p = load_point(o, problem, r);
  Verdict v = classify(problem, p);
  r.result()["point"] = point_to_string(problem, p);
  r.result()["support"] = pattern_to_string(support(p));
  r.result()["verdict"] = witness_json(v);
  r.line("point " + point_to_string(problem, p) + "  [" + pattern_to_string(support(p)) + "]");
  r.line(verdict_line(v));
}

void cmd_patterns(const Options& o, Report& r) {
  auto problem = load(o, r);
  auto table = classify_patterns(problem);
  json rows = json::array();
  std::size_t width = 0;
  for (const auto& row : table.rows) width = std::max(width, pattern_to_string(row.pattern).size());
  std::map<Stability, std::size_t> counts;
  for (const auto& row : table.rows) {
    json j = witness_json(row.verdict);
    j["pattern"] = pattern_to_string(row.pattern);
    rows.push_back(j);
    r.line(pad(pattern_to_string(row.pattern), width + 2) + verdict_line(row.verdict));
    ++counts[row.verdict.status];
  }
  r.result()["rows"] = rows;
  json summary;
  for (auto s : {Stability::Stable, Stability::StrictlySemistable, Stability::Unstable})
    summary[to_string(s)] = counts[s];
  r.result()["summary"] = summary;
  r.line(std::to_string(table.rows.size()) + " patterns: " + std::to_string(counts[Stability::Stable]) +
         " Stable, " + std::to_string(counts[Stability::StrictlySemistable]) + " StrictlySemistable, " +
         std::to_string(counts[Stability::Unstable]) + " Unstable");
  if (table.realizability_unchecked) r.warn("pattern-level: ideal realizability not checked");
}

json monomial_json(const MonomialInvariant& m) {
  json e = json::object();
  for (const auto& [name, k] : m.exponents) e[name] = k;
  return {{"monomial", m.to_string()}, {"exponents", e}, {"l_degree", m.l_degree}};
}

void cmd_invariants(const Options& o, Report& r) {
  auto problem = load(o, r);
  auto all = invariant_monomials(problem, o.max_degree);
  auto gens = minimal_generators(all);
  json a = json::array(), g = json::array();
  for (const auto& m : all) a.push_back(monomial_json(m));
  for (const auto& m : gens) g.push_back(monomial_json(m));
  r.result()["max_degree"] = o.max_degree;
  r.result()["invariants"] = a;
  r.result()["minimal_generators"] = g;
  std::string line = "invariant monomials up to degree " + std::to_string(o.max_degree) + ":";
  for (const auto& m : all) line += " " + m.to_string();
  r.line(line);
  line = "minimal generators:";
  for (const auto& m : gens) line += " " + m.to_string() + " (L-degree " + std::to_string(m.l_degree) + ")";
  r.line(line);
}

json presentation_json(const QuotientPresentation& q) {
  json base = json::array(), proj = json::array(), rels = json::array();
  for (const auto& g : q.base_invariant_generators) {
    json j = monomial_json(g.monomial);
    j["name"] = g.name;
    base.push_back(j);
  }
  for (const auto& g : q.proj_generators) {
    json j = monomial_json(g.monomial);
    j["name"] = g.name;
    proj.push_back(j);
  }
  for (const auto& b : q.relations) {
    json lead = json::object(), trail = json::object();
    for (const auto& [n, k] : b.lead) lead[n] = k;
    for (const auto& [n, k] : b.trail) trail[n] = k;
    rels.push_back({{"relation", b.to_string()}, {"plus", lead}, {"minus", trail}});
  }
  return {{"base_generators", base}, {"proj_generators", proj}, {"relations", rels},
          {"weights", q.proj_weights()}, {"ambient", q.ambient()}, {"veronese_gcd", q.veronese_gcd}};
}

void generator_lines(const QuotientPresentation& q, Report& r) {
  for (const auto& g : q.base_invariant_generators) r.line("  " + g.name + " = " + g.monomial.to_string() + "  (degree 0)");
  for (const auto& g : q.proj_generators)
    r.line("  " + g.name + " = " + g.monomial.to_string() + "  (degree " + std::to_string(g.monomial.l_degree) + ")");
}

void cmd_relations(const Options& o, Report& r, bool full) {
  auto problem = load(o, r);
  auto q = quotient_presentation(problem, o.max_degree, o.syzygy_degree);
  r.result()["max_degree"] = o.max_degree;
  r.result()["syzygy_degree"] = o.syzygy_degree;
  json pj = presentation_json(q);
  if (!full) {
    pj.erase("ambient");
    pj.erase("weights");
    pj.erase("veronese_gcd");
  }
  r.result()["presentation"] = pj;
  r.line("generators:");
  generator_lines(q, r);
  r.line("relations (syzygy degree <= " + std::to_string(o.syzygy_degree) + "):");
  if (q.relations.empty()) r.line("  none");
  for (const auto& b : q.relations) r.line("  " + b.to_string());
  if (!full) return;
  std::string base = q.base_invariant_generators.empty() ? "k" : "k[";
  for (std::size_t i = 0; i < q.base_invariant_generators.size(); ++i)
    base += (i ? "," : "") + q.base_invariant_generators[i].name;
  if (!q.base_invariant_generators.empty()) base += "]";
  r.line("A^G = " + base);
  r.line("ambient: " + q.ambient() + "  (" + q.ambient_ascii() + ")");
  if (q.veronese_gcd > 1)
    r.warn("generator degrees share the factor " + std::to_string(q.veronese_gcd) +
           "; a Veronese subring gives a standard-graded presentation (not applied)");
}

void cmd_stabilizer(const Options& o, Report& r) {
  auto problem = load(o, r);
  auto p = load_point(o, problem, r);
  auto order = stabilizer_order(problem, p);
  r.result()["order"] = order_to_string(order);
  r.line("stabilizer order = " + order_to_string(order));
}

// --- conic -----------------------------------------------------------------

conic::WeightTable conic_table(const Options& o, unsigned n, const std::optional<std::vector<Integer>>& file_a) {
  std::vector<Integer> a;
  if (!o.a_text.empty()) {
    for (const auto& s : split(o.a_text, ',')) a.emplace_back(parse_unsigned(s, "parameter"));
  } else if (file_a) {
    a = *file_a;
  } else {
    a = conic::default_parameters(n);
  }
  conic::SignConvention sign;
  if (o.sign == "engine") sign = conic::SignConvention::Engine;
  else if (o.sign == "fibre") sign = conic::SignConvention::FibreWeight;
  else throw InputError("--sign must be 'engine' or 'fibre'");
  return conic::build_weight_table(n, a, sign);
}

void table_report(const conic::WeightTable& t, Report& r) {
  json a = json::array();
  for (unsigned i = 1; i < t.n; ++i) a.push_back(relgit::to_string(t.a[i]));
  json nodes = json::array();
  std::string params;
  for (unsigned i = 1; i <= t.n; ++i) params += (i > 1 ? "," : "") + relgit::to_string(t.a[i]);
  r.line("weight table: n = " + std::to_string(t.n) + ", a_1..a_n = " + params + ", a_0 = " +
         relgit::to_string(t.a[0]) + " (no weight on inserted components), shift = (" + t.shift.to_string() +
         ")");
  r.line(t.sign == conic::SignConvention::Engine ? "  sign: mu = -(fibre weight)" : "  sign: mu = +(fibre weight)");
  for (unsigned j = 1; j <= t.n + 1; ++j) {
    std::string where = "D" + std::to_string(j - 1) + " n D" + std::to_string(j);
    nodes.push_back({{"node", where}, {"weight", t.node[j].to_string()}});
    r.line("  " + pad(where, 10) + "(" + t.node[j].to_string() + ")");
  }
  r.result()["weight_table"] = {{"n", t.n},
                                {"a", a},
                                {"a0", relgit::to_string(t.a[0])},
                                {"shift", t.shift.to_string()},
                                {"sign", t.sign == conic::SignConvention::Engine ? "engine" : "fibre"},
                                {"nodes", nodes}};
}

void conic_sweep(const Options& o, Report& r) {
  if (o.n == 0) throw InputError("--n is required");
  auto t = conic_table(o, o.n, std::nullopt);
  table_report(t, r);
  json rows = json::array();
  std::size_t agree = 0, semistable = 0;
  auto all = conic::sweep(t);
  r.line(pad("stratum", 12) + pad("lengths", 14) + pad("admissible", 12) + "verdict");
  for (const auto& row : all) {
    bool stable = row.verdict.status == Stability::Stable;
    if (stable == row.admissible) ++agree;
    if (row.verdict.status == Stability::StrictlySemistable) ++semistable;
    json j = witness_json(row.verdict);
    j["stratum"] = conic::to_string(row.config.stratum);
    j["lengths"] = conic::lengths_to_string(row.config.lengths);
    j["admissible"] = row.admissible;
    rows.push_back(j);
    r.line(pad(conic::to_string(row.config.stratum), 12) + pad(conic::lengths_to_string(row.config.lengths), 14) +
           pad(row.admissible ? "yes" : "no", 12) + verdict_line(row.verdict));
  }
  r.result()["configurations"] = rows;
  r.result()["agree"] = agree;
  r.result()["total"] = all.size();
  r.result()["strictly_semistable"] = semistable;
  r.line("admissible <=> Stable on " + std::to_string(agree) + "/" + std::to_string(all.size()) +
         " configurations; " + std::to_string(semistable) + " StrictlySemistable");
  if (o.n == 2 && t.sign == conic::SignConvention::Engine)
    r.line("origin (0,1,1,0): mu = -(a_1(s_1/2 - 3|s_1|/2) - (s_2/2 + 3|s_2|/2)), i.e. global sign -1 against "
           "that expression; the per-point split of the total is not reproduced");
}

void conic_components(const Options& o, Report& r) {
  if (o.n == 0) throw InputError("--n is required");
  auto h = conic::hilbert_components(o.n);
  json comps = json::array(), strata = json::array(), inters = json::array();
  std::string names;
  for (const auto& c : h.components) {
    comps.push_back({{"name", c.name()}, {"generic_stratum", conic::to_string(c.generic_stratum)}});
    names += " " + c.name();
  }
  r.line("components:" + names);
  for (const auto& s : h.strata) {
    json in = json::array();
    std::string list;
    for (auto c : s.in_closure_of) {
      in.push_back(h.components[c].name());
      list += " " + h.components[c].name();
    }
    strata.push_back({{"stratum", conic::to_string(s.stratum)},
                      {"lengths", conic::lengths_to_string(s.lengths)},
                      {"dimension", s.dimension},
                      {"in_closure_of", in}});
    r.line("  " + pad(conic::to_string(s.stratum), 10) + pad(conic::lengths_to_string(s.lengths), 12) + "dim " +
           std::to_string(s.dimension) + "  in" + list);
  }
  for (const auto& x : h.intersections) {
    std::string label;
    json cs = json::array(), ss = json::array();
    for (auto c : x.components) {
      label += (label.empty() ? "" : " n ") + h.components[c].name();
      cs.push_back(h.components[c].name());
    }
    for (const auto& s : x.strata) ss.push_back(conic::to_string(s));
    bool empty = x.strata.empty();
    inters.push_back({{"components", cs},
                      {"strata", ss},
                      {"dimension", empty ? json(nullptr) : json(x.dimension)},
                      {"irreducible", x.top_strata == 1}});
    r.line(label + ": " +
           (empty ? std::string("empty")
                  : "dimension " + std::to_string(x.dimension) + (x.top_strata == 1 ? ", irreducible" : ", reducible")));
  }
  r.result()["components"] = comps;
  r.result()["strata"] = strata;
  r.result()["intersections"] = inters;
  r.result()["dual_complex_is_simplex"] = h.dual_complex_is_simplex;
  r.line(std::string("dual complex: ") + (h.dual_complex_is_simplex ? "full simplex" : "not a simplex"));
}

void conic_single(const Options& o, Report& r) {
  conic::ConfigFile f;
  if (!o.config_path.empty()) {
    std::string text = read_file(o.config_path, "configuration file");
    r.add_input("config", text);
    f = conic::parse_config(text);
  } else {
    if (o.n == 0) throw InputError("--n is required");
    f.config.stratum = {o.n, {}};
    for (unsigned i : parse_unsigned_list(o.vanishing, "vanishing index")) f.config.stratum.vanishing.insert(i);
    f.config.lengths = parse_unsigned_list(o.lengths, "length");
    for (const auto& item : split(o.points, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw InputError("bad marked point '" + item + "': expected interval:coordinate");
      f.config.marked_points.push_back({parse_unsigned(item.substr(0, colon), "interval"), parse_rat(item.substr(colon + 1))});
    }
    conic::validate_config(f.config);
  }
  const auto& c = f.config;
  auto t = conic_table(o, c.stratum.n, f.a);
  table_report(t, r);
  bool adm = conic::admissible(c);
  Verdict v = conic::classify_config(t, c);
  r.line("fibre: " + conic::to_string(conic::chain(c.stratum)));
  r.line("lengths " + conic::lengths_to_string(c.lengths) + ": " + (adm ? "admissible" : "not admissible"));
  r.line(verdict_line(v));
  r.result()["stratum"] = conic::to_string(c.stratum);
  r.result()["fibre"] = conic::to_string(conic::chain(c.stratum));
  r.result()["lengths"] = conic::lengths_to_string(c.lengths);
  r.result()["admissible"] = adm;
  r.result()["verdict"] = witness_json(v);
  if (!o.lambda_text.empty()) {
    auto lambda = load_lambda(o, c.stratum.n);
    auto m = conic::mu_config(t, c, lambda);
    std::string s = m ? relgit::to_string(*m) : std::string("inf");
    r.result()["lambda"] = lambda.to_string();
    r.result()["mu"] = s;
    r.line("mu(lambda = (" + lambda.to_string() + ")) = " + s);
  }
  if (!c.marked_points.empty()) {
    auto order = conic::config_stabilizer(c);
    r.result()["stabilizer"] = order_to_string(order);
    r.line("stabilizer order = " + order_to_string(order));
  }
}

void cmd_conic(const Options& o, Report& r) {
  if (o.sweep && o.components) throw InputError("--sweep and --components are exclusive");
  if (o.sweep) return conic_sweep(o, r);
  if (o.components) return conic_components(o, r);
  conic_single(o, r);
}

int cmd_selftest(Report& r) {
  auto checks = run_selftest();
  json rows = json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    rows.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    r.line(std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.passed || c.detail.empty() ? "" : ": " + c.detail));
  }
  r.result()["checks"] = rows;
  r.result()["passed"] = all;
  return all ? kOk : kInvariantViolation;
}

void add_problem_options(CLI::App* sub, Options& o, bool point, bool lambda) {
  sub->add_option("--problem", o.problem_path, "problem file")->required();
  if (point) {
    sub->add_option("--point", o.point_text, "point as name=value,...");
    sub->add_option("--point-file", o.point_path, "point as a JSON object");
  }
  if (lambda) sub->add_option("--lambda", o.lambda_text, "one-parameter subgroup, comma separated")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact GIT stability for split torus actions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--timing", o.timing, "append wall-clock time to the report");

  auto* mu_cmd = app.add_subcommand("mu", "Hilbert-Mumford weight of a point");
  add_problem_options(mu_cmd, o, true, true);
  auto* limit_cmd = app.add_subcommand("limit", "limit point under a one-parameter subgroup");
  add_problem_options(limit_cmd, o, true, true);
  auto* classify_cmd = app.add_subcommand("classify", "stability verdict with witness");
  add_problem_options(classify_cmd, o, true, false);
  auto* patterns_cmd = app.add_subcommand("patterns", "verdict for every support pattern");
  add_problem_options(patterns_cmd, o, false, false);
  auto* invariants_cmd = app.add_subcommand("invariants", "invariant monomials and minimal generators");
  auto* relations_cmd = app.add_subcommand("relations", "binomial relations among the generators");
  auto* quotient_cmd = app.add_subcommand("quotient", "weighted projective presentation of the quotient");
  for (auto* sub : {invariants_cmd, relations_cmd, quotient_cmd}) {
    add_problem_options(sub, o, false, false);
    sub->add_option("--max-degree", o.max_degree, "total degree bound for invariants")->check(CLI::PositiveNumber);
  }
  for (auto* sub : {relations_cmd, quotient_cmd})
    sub->add_option("--syzygy-degree", o.syzygy_degree, "generator-degree bound for relations")
        ->check(CLI::PositiveNumber);
  auto* stabilizer_cmd = app.add_subcommand("stabilizer", "order of the stabilizer of a point");
  add_problem_options(stabilizer_cmd, o, true, false);

  auto* conic_cmd = app.add_subcommand("conic", "degenerating conic: chain configurations");
  conic_cmd->add_option("--n", o.n, "number of points (1..3)");
  conic_cmd->add_option("--vanishing", o.vanishing, "indices i with t_i = 0, comma separated");
  conic_cmd->add_option("--lengths", o.lengths, "length on each chain component, comma separated");
  conic_cmd->add_option("--points", o.points, "marked points interval:coordinate, comma separated");
  conic_cmd->add_option("--config", o.config_path, "configuration file");
  conic_cmd->add_option("--a", o.a_text, "parameters a_1 > ... > a_{n-1}");
  conic_cmd->add_option("--sign", o.sign, "engine or fibre");
  conic_cmd->add_option("--lambda", o.lambda_text, "evaluate mu at this one-parameter subgroup");
  conic_cmd->add_flag("--sweep", o.sweep, "classify every configuration");
  conic_cmd->add_flag("--components", o.components, "component incidence of the central fibre");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in golden checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const Format format = o.format == "structured" ? Format::Structured : Format::Text;
  auto* sub = app.get_subcommands().front();
  Report report(sub->get_name(), args);
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (sub == mu_cmd) cmd_mu(o, report);
    else if (sub == limit_cmd) cmd_limit(o, report);
    else if (sub == classify_cmd) cmd_classify(o, report);
    else if (sub == patterns_cmd) cmd_patterns(o, report);
    else if (sub == invariants_cmd) cmd_invariants(o, report);
    else if (sub == relations_cmd) cmd_relations(o, report, false);
    else if (sub == quotient_cmd) cmd_relations(o, report, true);
    else if (sub == stabilizer_cmd) cmd_stabilizer(o, report);
    else if (sub == conic_cmd) cmd_conic(o, report);
    else if (sub == selftest_cmd) code = cmd_selftest(report);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantViolation;
  }
  if (o.timing)
    report.set_timing(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  out << report.render(format);
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace relgit::cli
