// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "../support/generators.hpp"

#include "relgit/cone.hpp"
#include "relgit/conic.hpp"
#include "relgit/invariants.hpp"
#include "relgit/stability.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

using namespace relgit;
using namespace relgit::testing;

namespace {

const char* kBundleText = R"({
  "torus_rank": 1,
  "base": [{"name": "x", "weight": [1]}, {"name": "y", "weight": [-1]}],
  "fiber": [{"name": "u", "weight": [1]}, {"name": "v", "weight": [-1]}],
  "shift": [0]
})";

GitProblem bundle() { return parse_problem(kBundleText); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // <= 0: no limit
  std::function<Outcome()> body;
};

SupportPattern pat(std::set<std::string> b, std::set<std::string> f) { return {std::move(b), std::move(f)}; }

Outcome classification_table() {
  Outcome o;
  auto p = bundle();
  auto table = classify_patterns(p);
  o.require(table.rows.size() == 12, "expected 12 patterns");
  for (const auto& row : table.rows) {
    const auto& b = row.pattern.base_support;
    const auto& f = row.pattern.fiber_support;
    bool x = b.count("x"), y = b.count("y"), u = f.count("u"), v = f.count("v");
    // the rows overlap at x = y = 0; either unstable condition wins
    Stability expected = ((!y && !v) || (!x && !u)) ? Stability::Unstable : Stability::Stable;
    o.require(row.verdict.status == expected, pattern_to_string(row.pattern) + " -> " + to_string(row.verdict.status));
    o.require(row.verdict.status != Stability::StrictlySemistable, "strictly semistable row");
  }
  return o;
}

Outcome invariant_theory() {
  Outcome o;
  auto p = bundle();
  auto gens = minimal_generators(invariant_monomials(p, 4));
  std::set<std::string> names;
  for (const auto& g : gens) names.insert(g.to_string());
  o.require(names == std::set<std::string>{"x*y", "v*x", "u*y", "u*v"}, "generators");
  auto q = quotient_presentation(p, 4, 4);
  o.require(q.base_invariant_generators.size() == 1 && q.base_invariant_generators[0].monomial.to_string() == "x*y",
            "base invariants");
  o.require(q.relations.size() == 1 && q.relations[0].to_string() == "X*Y - T*Z", "relation");
  o.require(q.proj_weights() == std::vector<unsigned>{1, 1, 2}, "degrees");
  o.require(q.ambient() == "𝔸¹ × ℙ(1,1,2)", "ambient " + q.ambient());
  return o;
}

Outcome orbifold_point() {
  Outcome o;
  auto p = bundle();
  auto a = stabilizer_order(p, parse_point(p, "x=0,y=0,u=1,v=1"));
  auto b = stabilizer_order(p, parse_point(p, "x=1,y=1,u=1,v=1"));
  auto c = stabilizer_order(p, parse_point(p, "x=0,y=0,u=1,v=0"));
  o.require(a && *a == 2, "order at x=y=0,u=v=1");
  o.require(b && *b == 1, "order at x=y=u=v=1");
  o.require(!c, "order at x=y=0,v=0");
  return o;
}

Outcome mu_values() {
  Outcome o;
  auto p = bundle();
  auto minus = parse_point(p, "x=1,y=0,u=1,v=0");
  auto plus = parse_point(p, "x=1,y=0,u=1,v=1");
  for (long long d : {1, 2, 3}) {
    o.require(mu(p, minus, OnePS{d}) == MuValue::finite(-d), "-d at d=" + std::to_string(d));
    o.require(mu(p, plus, OnePS{d}) == MuValue::finite(d), "+d at d=" + std::to_string(d));
  }
  for (const auto& pt : {minus, plus}) o.require(mu(p, pt, OnePS{-1}).is_infinite(), "inf at lambda=-1");
  return o;
}

std::string compact(const std::string& text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937 rng(20251015);
  int problems = 0, mu_disagreements = 0, classify_disagreements = 0;
  for (; problems < 250; ++problems) {
    auto p = random_problem(rng);
    for (int k = 0; k < 2; ++k) {
      auto s = random_point(rng, p);
      for_each_lambda(p.torus_rank, 2, [&](const std::vector<long long>& l) {
        auto lambda = to_one_ps(l);
        if (!(mu(p, s, lambda) == mu_oracle(p, s, lambda, 4))) {
          ++mu_disagreements;
          std::printf("  mu disagreement: %s at %s lambda %s\n", compact(serialize_problem(p)).c_str(),
                      point_to_string(p, s).c_str(), lambda.to_string().c_str());
        }
      });
      auto verdict = classify(p, s);
      auto scanned = scan_classify(p, s, 5);
      if (verdict.status != scanned) {
        ++classify_disagreements;
        Integer norm = 0;
        if (verdict.witness)
          for (std::size_t i = 0; i < verdict.witness->size(); ++i) norm = std::max(norm, Integer(abs((*verdict.witness)[i])));
        std::printf("  classify disagreement: %s at %s: %s (witness %s, sup norm %s) vs scan %s\n",
                    compact(serialize_problem(p)).c_str(), point_to_string(p, s).c_str(),
                    to_string(verdict.status).c_str(), verdict.witness ? verdict.witness->to_string().c_str() : "-",
                    norm.str().c_str(), to_string(scanned).c_str());
        // diagnostic only: does a scan over a box reaching the witness agree?
        long long reach = norm.convert_to<long long>();
        if (reach > 5)
          std::printf("    scan over [-%lld,%lld]^%zu gives %s\n", reach, reach, p.torus_rank,
                      to_string(scan_classify(p, s, reach)).c_str());
      }
    }
  }
  o.require(problems >= 200, "too few problems");
  o.require(mu_disagreements == 0, std::to_string(mu_disagreements) + " mu disagreements");
  o.require(classify_disagreements == 0, std::to_string(classify_disagreements) + " classify disagreements");
  o.detail = std::to_string(problems) + " problems; mu " + std::to_string(mu_disagreements) + ", classify " +
             std::to_string(classify_disagreements) + " disagreements";
  return o;
}

Outcome sections_cross_check() {
  Outcome o;
  auto p = bundle();
  for (const auto& row : classify_patterns(p).rows) {
    bool section = semistable_via_sections(p, representative_point(p, row.pattern), 4).has_value();
    o.require(section == (row.verdict.status != Stability::Unstable), pattern_to_string(row.pattern));
  }
  return o;
}

std::string describe_table(const conic::WeightTable& t) {
  std::ostringstream s;
  s << "n=" << t.n << " a=(";
  for (unsigned i = 1; i <= t.n; ++i) s << (i > 1 ? "," : "") << t.a[i];
  s << ") shift=(" << t.shift.to_string() << ") nodes:";
  for (unsigned j = 1; j <= t.n + 1; ++j) s << " (" << t.node[j].to_string() << ")";
  return s.str();
}

Outcome chain_equivalence() {
  Outcome o;
  std::string tables;
  for (unsigned n : {1u, 2u}) {
    auto t = conic::build_weight_table(n, conic::default_parameters(n));
    tables += (tables.empty() ? "" : "; ") + describe_table(t);
    for (const auto& row : conic::sweep(t)) {
      std::string where = conic::to_string(row.config.stratum) + " " + conic::lengths_to_string(row.config.lengths);
      o.require(row.verdict.status != Stability::StrictlySemistable, "strictly semistable at " + where);
      o.require((row.verdict.status == Stability::Stable) == row.admissible, "mismatch at " + where);
    }
  }
  if (o.ok) o.detail = tables;
  return o;
}

Outcome total_mu_magnitude() {
  Outcome o;
  auto t = conic::build_weight_table(2, conic::default_parameters(2));
  conic::ChainConfiguration z{{2, {1, 2, 3}}, {0, 1, 1, 0}, {}};
  const Rat a1 = Rat(t.a[1]);
  std::optional<int> sign;
  for_each_lambda(2, 5, [&](const std::vector<long long>& l) {
    long long s1 = l[0], s2 = l[1];
    Rat closed = a1 * (Rat(s1, 2) - Rat(3 * std::abs(s1), 2)) - (Rat(s2, 2) + Rat(3 * std::abs(s2), 2));
    auto m = conic::mu_config(t, z, to_one_ps(l));
    o.require(m.has_value(), "infinite mu at the origin");
    if (!m) return;
    o.require(abs(*m) == abs(closed), "magnitude at (" + std::to_string(s1) + "," + std::to_string(s2) + ")");
    if (closed != 0) {
      int here = *m == closed ? 1 : -1;
      if (!sign) sign = here;
      o.require(*sign == here, "sign changes across the box");
    }
  });
  if (o.ok) o.detail = "global sign " + std::to_string(sign.value_or(1)) + ", a_1 = " + relgit::to_string(t.a[1]);
  return o;
}

Outcome chain_stabilizers() {
  Outcome o;
  for (long long c : {1, 2, 7}) {
    conic::ChainConfiguration sym{{2, {1, 3}}, {0, 2, 0}, {{1, Rat(c)}, {1, Rat(-c)}}};
    conic::ChainConfiguration generic{{2, {1, 3}}, {0, 2, 0}, {{1, Rat(c)}, {1, Rat(2 * c)}}};
    auto a = conic::config_stabilizer(sym), b = conic::config_stabilizer(generic);
    o.require(a && *a == 2, "{c,-c}");
    o.require(b && *b == 1, "{c,2c}");
  }
  auto h = conic::hilbert_components(2);
  o.require(h.components.size() == 3, "three components");
  o.require(h.dual_complex_is_simplex, "dual complex");
  bool triple = false;
  for (const auto& x : h.intersections) {
    if (x.components.size() == 2) o.require(!x.strata.empty() && x.dimension == 1 && x.top_strata == 1, "pairwise curve");
    if (x.components.size() == 3) triple = !x.strata.empty() && x.dimension == 0;
  }
  o.require(triple, "triple intersection");
  return o;
}

bool decays(const std::function<double(double)>& size) {
  double prev = INFINITY;
  for (int k = 1; k <= 20; ++k) {
    double v = size(std::ldexp(1.0, -k));
    if (!(v < prev)) return false;
    prev = v;
  }
  return prev < 1e-4;
}

Outcome property_suite() {
  Outcome o;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_problem(rng);
    auto s = random_point(rng, p);
    OnePS lambda = to_one_ps([&] {
      std::vector<long long> l;
      for (std::size_t i = 0; i < p.torus_rank; ++i) l.push_back(static_cast<long long>(rng() % 7) - 3);
      return l;
    }());
    auto m = mu(p, s, lambda);
    for (long long k : {2, 3}) {
      auto mk = mu(p, s, Integer(k) * lambda);
      o.require(m.is_infinite() ? mk.is_infinite() : mk == MuValue::finite(m.value() * k), "homogeneity");
    }
    PointSample s2 = s;
    for (auto& [name, v] : s2.base_values) v *= 5;
    for (auto& [name, v] : s2.fiber_values) v *= Rat(-2, 3);
    o.require(mu(p, s2, lambda) == m, "support invariance");

    // cone witnesses re-substitute exactly
    auto pat_support = support(s);
    std::vector<WeightVector> base, fiber;
    for (const auto& v : p.base_vars)
      if (pat_support.base_support.count(v.name)) base.push_back(v.weight);
    for (std::size_t i = 0; i < p.fiber_vars.size(); ++i)
      if (pat_support.fiber_support.count(p.fiber_vars[i].name)) fiber.push_back(p.shifted_fiber_weight(i));
    ConeProblem cp{p.torus_rank, base, fiber};
    auto r = solve_cone(cp);
    if (r.feasible) o.require(satisfies(cp, *r.witness), "cone witness re-substitution");
    auto v = classify(p, s);
    if (v.witness) {
      auto check = mu(p, s, *v.witness);
      o.require(check == *v.witness_mu, "verdict witness re-substitution");
    }
    if (v.status == Stability::Stable) o.require(stabilizer_order(p, s).has_value(), "Stable with infinite stabilizer");
  }

  // orbit flow, conic bundle patterns
  auto b = bundle();
  int flows = 0;
  for (const auto& row : classify_patterns(b).rows) {
    if (row.verdict.status != Stability::Unstable) continue;
    auto pt = representative_point(b, row.pattern);
    ++flows;
    o.require(decays([&](double t) {
      double n = 0;
      for (double c : lifted_orbit(b, pt, *row.verdict.witness, t)) n = std::max(n, std::fabs(c));
      return n;
    }), "orbit flow at " + pattern_to_string(row.pattern));
  }
  // orbit flow, chain configurations: the section at the limit scales by t^(-mu)
  for (unsigned n : {1u, 2u}) {
    auto t = conic::build_weight_table(n, conic::default_parameters(n));
    for (const auto& row : conic::sweep(t)) {
      if (row.verdict.status != Stability::Unstable) continue;
      ++flows;
      auto m = conic::mu_config(t, row.config, *row.verdict.witness);
      o.require(m && *m < 0, "chain witness mu");
      if (!m) continue;
      double exponent = -static_cast<double>(*m);
      o.require(decays([&](double tt) { return std::pow(tt, exponent); }),
                "chain orbit flow at " + conic::to_string(row.config.stratum));
    }
  }
  if (o.ok) o.detail = std::to_string(flows) + " unstable orbits decay";
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "conic bundle classification table", 1.0, classification_table},
      {2, "conic bundle invariant theory", 5.0, invariant_theory},
      {3, "conic bundle orbifold point", 0, orbifold_point},
      {4, "conic bundle mu values", 0, mu_values},
      {5, "oracle equivalence on randomized problems", 60.0, oracle_equivalence},
      {6, "sections cross-check", 0, sections_cross_check},
      {7, "chain equivalence theorem (n = 1, 2)", 10.0, chain_equivalence},
      {8, "chain total mu magnitude", 0, total_mu_magnitude},
      {9, "chain stabilizers and component incidence", 0, chain_stabilizers},
      {10, "property suite", 0, property_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    if (!in_time) out.detail = "took " + std::to_string(seconds) + " s";
    bool pass = out.ok && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                out.detail.empty() ? "" : " - ", out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
