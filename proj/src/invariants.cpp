#include "relgit/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace relgit {

unsigned MonomialInvariant::total_degree() const {
  unsigned d = 0;
  for (const auto& [name, e] : exponents) d += e;
  return d;
}

std::string Binomial::to_string() const {
  return monomial_to_string(lead) + " - " + monomial_to_string(trail);
}

std::vector<unsigned> QuotientPresentation::proj_weights() const {
  std::vector<unsigned> w;
  for (const auto& g : proj_generators) w.push_back(g.monomial.l_degree);
  return w;
}

namespace {

std::string weight_list(const std::vector<unsigned>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::string superscript(std::size_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string QuotientPresentation::ambient_ascii() const {
  std::string affine = base_invariant_generators.empty()
                           ? ""
                           : "A^" + std::to_string(base_invariant_generators.size());
  if (proj_generators.empty()) return affine.empty() ? "point" : affine;
  std::string proj = "P(" + weight_list(proj_weights()) + ")";
  return affine.empty() ? proj : affine + " x " + proj;
}

std::string QuotientPresentation::ambient() const {
  std::string affine = base_invariant_generators.empty()
                           ? ""
                           : "𝔸" + superscript(base_invariant_generators.size());
  if (proj_generators.empty()) return affine.empty() ? "point" : affine;
  std::string proj = "ℙ(" + weight_list(proj_weights()) + ")";
  return affine.empty() ? proj : affine + " × " + proj;
}

std::vector<MonomialInvariant> invariant_monomials(const GitProblem& problem, unsigned max_total_degree) {
  const std::size_t n = problem.variable_count();
  std::vector<WeightVector> weights;
  for (std::size_t k = 0; k < n; ++k)
    weights.push_back(problem.is_fiber(k) ? problem.shifted_fiber_weight(k - problem.base_vars.size())
                                          : problem.variable(k).weight);

  std::vector<MonomialInvariant> out;
  std::vector<unsigned> e(n, 0);
  // Assigning the first variable its largest exponent first yields lex-descending order.
  std::function<void(std::size_t, unsigned, WeightVector&)> walk = [&](std::size_t k, unsigned left,
                                                                       WeightVector& w) {
    if (k + 1 == n || n == 0) {
      if (n) e[k] = left;
      WeightVector total = w;
      if (n) total += Integer(left) * weights[k];
      if (total.is_zero()) {
        MonomialInvariant m;
        for (std::size_t j = 0; j < n; ++j) {
          if (e[j] == 0) continue;
          m.exponents[problem.variable(j).name] = e[j];
          if (problem.is_fiber(j)) m.l_degree += e[j];
        }
        out.push_back(std::move(m));
      }
      if (n) e[k] = 0;
      return;
    }
    for (unsigned d = left + 1; d-- > 0;) {
      e[k] = d;
      WeightVector next = w + Integer(d) * weights[k];
      walk(k + 1, left - d, next);
    }
    e[k] = 0;
  };
  for (unsigned degree = 1; degree <= max_total_degree && n; ++degree) {
    WeightVector zero(problem.torus_rank);
    walk(0, degree, zero);
  }
  return out;
}

namespace {

// a | m ? m / a : nullopt
std::optional<Exponents> divide(const Exponents& m, const Exponents& a) {
  Exponents q = m;
  for (const auto& [name, e] : a) {
    auto it = q.find(name);
    if (it == q.end() || it->second < e) return std::nullopt;
    if ((it->second -= e) == 0) q.erase(it);
  }
  return q;
}

}  // namespace

std::vector<MonomialInvariant> minimal_generators(const std::vector<MonomialInvariant>& monomials) {
  std::set<Exponents> present;
  for (const auto& m : monomials) present.insert(m.exponents);
  std::vector<MonomialInvariant> out;
  for (const auto& m : monomials) {
    bool decomposable = false;
    for (const auto& a : monomials) {
      if (a.exponents == m.exponents || a.total_degree() >= m.total_degree()) continue;
      auto q = divide(m.exponents, a.exponents);
      if (q && !q->empty() && present.count(*q)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(m);
  }
  return out;
}

unsigned default_syzygy_bound(const std::vector<MonomialInvariant>& generators) {
  unsigned d = 1;
  for (const auto& g : generators) d = std::max(d, g.total_degree());
  return 2 * d;
}

std::pair<Exponents, Exponents> expand(const Binomial& b, const std::vector<NamedGenerator>& generators) {
  auto side = [&](const Exponents& e) {
    Exponents out;
    for (const auto& [name, k] : e) {
      auto g = std::find_if(generators.begin(), generators.end(),
                            [&](const NamedGenerator& x) { return x.name == name; });
      if (g == generators.end()) throw InputError("relation uses unknown generator '" + name + "'");
      for (const auto& [v, p] : g->monomial.exponents) out[v] += p * k;
    }
    return out;
  };
  return {side(b.lead), side(b.trail)};
}

namespace {

using Multi = std::vector<unsigned>;  // exponent vector over the generator list

unsigned degree(const Multi& a) { return std::accumulate(a.begin(), a.end(), 0u); }

// generator-degree ascending, then lexicographically descending
bool canonical_less(const Multi& a, const Multi& b) {
  if (degree(a) != degree(b)) return degree(a) < degree(b);
  return a > b;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Binomial> relations(const std::vector<NamedGenerator>& generators, unsigned max_syzygy_degree) {
  const std::size_t m = generators.size();
  std::vector<Binomial> out;
  if (m < 2) return out;

  std::map<Exponents, std::vector<Multi>> fibres;
  Multi a(m, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t k, unsigned left) {
    if (k == m) {
      if (degree(a) == 0) return;
      Exponents image;
      for (std::size_t g = 0; g < m; ++g)
        for (const auto& [v, p] : generators[g].monomial.exponents)
          if (a[g]) image[v] += p * a[g];
      fibres[image].push_back(a);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      a[k] = d;
      walk(k + 1, left - d);
    }
    a[k] = 0;
  };
  walk(0, max_syzygy_degree);

  std::vector<const std::pair<const Exponents, std::vector<Multi>>*> order;
  for (const auto& f : fibres)
    if (f.second.size() > 1) order.push_back(&f);
  auto image_degree = [](const Exponents& e) {
    unsigned d = 0;
    for (const auto& [v, p] : e) d += p;
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](auto* x, auto* y) {
    return image_degree(x->first) < image_degree(y->first);
  });

  std::vector<std::pair<Multi, Multi>> moves;
  for (auto* fibre : order) {
    std::vector<Multi> members = fibre->second;
    std::sort(members.begin(), members.end(), canonical_less);
    std::map<Multi, std::size_t> index;
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;

    UnionFind uf(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const auto& [u, v] : moves) {
        for (const auto* from : {&u, &v}) {
          const Multi& to = from == &u ? v : u;
          Multi b = members[i];
          bool divisible = true;
          for (std::size_t g = 0; g < m && divisible; ++g) {
            if (b[g] < (*from)[g]) divisible = false;
            else b[g] = b[g] - (*from)[g] + to[g];
          }
          if (!divisible) continue;
          auto it = index.find(b);
          if (it != index.end()) uf.unite(i, it->second);
        }
      }
    }
    std::set<std::size_t> joined{uf.find(0)};
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (joined.count(uf.find(i))) continue;
      joined.insert(uf.find(i));
      uf.unite(i, 0);
      moves.emplace_back(members[0], members[i]);
    }
  }

  auto named = [&](const Multi& x) {
    Exponents e;
    for (std::size_t g = 0; g < m; ++g)
      if (x[g]) e[generators[g].name] = x[g];
    return e;
  };
  for (const auto& [u, v] : moves) out.push_back({named(u), named(v)});
  return out;
}

QuotientPresentation quotient_presentation(const GitProblem& problem, unsigned max_total_degree,
                                           unsigned max_syzygy_degree) {
  if (max_total_degree == 0 || max_syzygy_degree == 0) throw InputError("degree bounds must be >= 1");
  auto gens = minimal_generators(invariant_monomials(problem, max_total_degree));

  std::vector<MonomialInvariant> base, proj;
  for (const auto& g : gens) (g.l_degree == 0 ? base : proj).push_back(g);
  std::stable_sort(proj.begin(), proj.end(),
                   [](const auto& x, const auto& y) { return x.l_degree < y.l_degree; });

  QuotientPresentation q;
  for (std::size_t i = 0; i < base.size(); ++i)
    q.base_invariant_generators.push_back(
        {base.size() == 1 ? "T" : "T" + std::to_string(i + 1), base[i]});
  static const char* xyz[] = {"X", "Y", "Z"};
  for (std::size_t i = 0; i < proj.size(); ++i)
    q.proj_generators.push_back({proj.size() <= 3 ? xyz[i] : "X" + std::to_string(i + 1), proj[i]});

  std::vector<NamedGenerator> all = q.proj_generators;
  all.insert(all.end(), q.base_invariant_generators.begin(), q.base_invariant_generators.end());
  q.relations = relations(all, max_syzygy_degree);

  unsigned g = 0;
  for (const auto& p : proj) g = std::gcd(g, p.l_degree);
  q.veronese_gcd = g ? g : 1;
  return q;
}

std::optional<MonomialInvariant> semistable_via_sections(const GitProblem& problem, const PointSample& p,
                                                         unsigned max_total_degree) {
  validate_point(problem, p);
  support(p);
  std::map<std::string, Rat> values = p.base_values;
  values.insert(p.fiber_values.begin(), p.fiber_values.end());
  for (const auto& m : invariant_monomials(problem, max_total_degree)) {
    if (m.l_degree == 0) continue;
    Rat v = 1;
    for (const auto& [name, e] : m.exponents)
      for (unsigned k = 0; k < e; ++k) v *= values.at(name);
    if (v != 0) return m;
  }
  return std::nullopt;
}

}  // namespace relgit
