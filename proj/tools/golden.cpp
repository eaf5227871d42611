#include "golden.hpp"

#include "relgit/conic.hpp"
#include "relgit/invariants.hpp"
#include "relgit/stability.hpp"

#include <map>

namespace relgit::cli {

std::string_view conic_bundle_problem_text() {
  return R"({
  "format": "relgit-problem/1",
  "group": "torus",
  "torus_rank": 1,
  "base": [{"name": "x", "weight": [1]}, {"name": "y", "weight": [-1]}],
  "fiber": [{"name": "u", "weight": [1]}, {"name": "v", "weight": [-1]}],
  "shift": [0]
}
)";
}

namespace {

SupportPattern pattern(std::set<std::string> base, std::set<std::string> fiber) {
  return {std::move(base), std::move(fiber)};
}

SelftestCheck pattern_table_check(const GitProblem& problem) {
  using S = Stability;
  const std::map<SupportPattern, S> expected = {
      {pattern({}, {"u"}), S::Unstable},          {pattern({}, {"v"}), S::Unstable},
      {pattern({}, {"u", "v"}), S::Stable},       {pattern({"x"}, {"u"}), S::Unstable},
      {pattern({"x"}, {"v"}), S::Stable},         {pattern({"x"}, {"u", "v"}), S::Stable},
      {pattern({"y"}, {"u"}), S::Stable},         {pattern({"y"}, {"v"}), S::Unstable},
      {pattern({"y"}, {"u", "v"}), S::Stable},    {pattern({"x", "y"}, {"u"}), S::Stable},
      {pattern({"x", "y"}, {"v"}), S::Stable},    {pattern({"x", "y"}, {"u", "v"}), S::Stable},
  };
  auto table = classify_patterns(problem);
  std::string detail;
  bool ok = table.rows.size() == expected.size();
  for (const auto& row : table.rows) {
    auto it = expected.find(row.pattern);
    if (it == expected.end() || it->second != row.verdict.status) {
      ok = false;
      detail += pattern_to_string(row.pattern) + " -> " + to_string(row.verdict.status) + "; ";
    }
  }
  return {"conic bundle pattern table", ok, detail};
}

SelftestCheck quotient_check(const GitProblem& problem) {
  auto q = quotient_presentation(problem, 4, 4);
  std::string gens;
  for (const auto& g : q.base_invariant_generators) gens += g.name + "=" + g.monomial.to_string() + " ";
  for (const auto& g : q.proj_generators) gens += g.name + "=" + g.monomial.to_string() + " ";
  std::string rels;
  for (const auto& r : q.relations) rels += r.to_string() + ";";
  bool ok = gens == "T=x*y X=v*x Y=u*y Z=u*v " && rels == "X*Y - T*Z;" && q.ambient_ascii() == "A^1 x P(1,1,2)";
  return {"conic bundle quotient presentation", ok, gens + "| " + rels + " | " + q.ambient_ascii()};
}

SelftestCheck stabilizer_check(const GitProblem& problem) {
  auto at = [&](const char* point) { return stabilizer_order(problem, parse_point(problem, point)); };
  auto a = at("x=0,y=0,u=1,v=1"), b = at("x=1,y=1,u=1,v=1"), c = at("x=0,y=0,u=1,v=0");
  bool ok = a && *a == 2 && b && *b == 1 && !c;
  return {"conic bundle stabilizers", ok, ""};
}

SelftestCheck mu_check(const GitProblem& problem) {
  bool ok = true;
  auto p_minus = parse_point(problem, "x=1,y=0,u=1,v=0");
  auto p_plus = parse_point(problem, "x=1,y=0,u=1,v=1");
  for (long long d : {1, 2, 3}) {
    OnePS lambda{d};
    ok = ok && mu(problem, p_minus, lambda) == MuValue::finite(-d) &&
         mu(problem, p_plus, lambda) == MuValue::finite(d);
  }
  ok = ok && mu(problem, p_minus, OnePS{-1}).is_infinite() && mu(problem, p_plus, OnePS{-1}).is_infinite();
  return {"conic bundle mu values", ok, ""};
}

SelftestCheck sweep_check(unsigned n) {
  auto table = conic::build_weight_table(n, conic::default_parameters(n));
  std::size_t total = 0, agree = 0, semistable = 0;
  for (const auto& row : conic::sweep(table)) {
    ++total;
    if ((row.verdict.status == Stability::Stable) == row.admissible) ++agree;
    if (row.verdict.status == Stability::StrictlySemistable) ++semistable;
  }
  return {"chain equivalence n=" + std::to_string(n), agree == total && semistable == 0,
          std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(semistable) +
              " strictly semistable"};
}

SelftestCheck formula_check() {
  auto table = conic::build_weight_table(2, conic::default_parameters(2));
  conic::ChainConfiguration z{{2, {1, 2, 3}}, {0, 1, 1, 0}, {}};
  const Integer a1 = table.a[1];
  bool ok = true;
  for (long long s1 = -5; s1 <= 5; ++s1)
    for (long long s2 = -5; s2 <= 5; ++s2) {
      Rat printed = Rat(a1) * (Rat(s1, 2) - Rat(3 * std::abs(s1), 2)) - (Rat(s2, 2) + Rat(3 * std::abs(s2), 2));
      auto m = conic::mu_config(table, z, OnePS{s1, s2});
      ok = ok && m && *m == -printed;
    }
  return {"origin configuration total mu (global sign -1)", ok, ""};
}

SelftestCheck conic_stabilizer_check() {
  conic::ChainConfiguration sym{{2, {1, 3}}, {0, 2, 0}, {{1, Rat(5)}, {1, Rat(-5)}}};
  conic::ChainConfiguration generic{{2, {1, 3}}, {0, 2, 0}, {{1, Rat(5)}, {1, Rat(10)}}};
  auto a = conic::config_stabilizer(sym), b = conic::config_stabilizer(generic);
  auto h = conic::hilbert_components(2);
  bool triple = !h.intersections.empty() && h.intersections.back().components.size() == 3 &&
                !h.intersections.back().strata.empty();
  bool ok = a && *a == 2 && b && *b == 1 && h.components.size() == 3 && h.dual_complex_is_simplex && triple;
  return {"chain stabilizers and component incidence", ok, ""};
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  GitProblem problem = parse_problem(conic_bundle_problem_text());
  std::vector<SelftestCheck> out;
  out.push_back(pattern_table_check(problem));
  out.push_back(quotient_check(problem));
  out.push_back(stabilizer_check(problem));
  out.push_back(mu_check(problem));
  out.push_back(sweep_check(1));
  out.push_back(sweep_check(2));
  out.push_back(formula_check());
  out.push_back(conic_stabilizer_check());
  return out;
}

}  // namespace relgit::cli
