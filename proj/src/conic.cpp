#include "relgit/conic.hpp"

#include "relgit/cone.hpp"
#include "relgit/smith.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace relgit::conic {

namespace {

void check_stratum(const Stratum& s) {
  if (s.n == 0) throw InputError("n must be positive");
  for (unsigned i : s.vanishing)
    if (i < 1 || i > s.n + 1)
      throw InputError("vanishing index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(s.n + 1));
}

unsigned interior_count(const std::vector<unsigned>& interval, unsigned n) {
  return static_cast<unsigned>(
      std::count_if(interval.begin(), interval.end(), [n](unsigned i) { return i >= 1 && i <= n; }));
}

// Index of the node (or component) where a generic point of the interval
// lands under lambda: the first index whose vertex does not move below the
// point. `nonneg(i)` tells whether s_i >= 0 for 1 <= i <= n.
unsigned landing(const std::vector<unsigned>& interval, unsigned n,
                 const std::function<bool(unsigned)>& nonneg) {
  for (unsigned i : interval)
    if (i == 0 || i == n + 1 || nonneg(i)) return i;
  return interval.back() + 1;
}

bool is_boundary(const std::vector<unsigned>& interval, unsigned n) {
  return interval.front() == 0 || interval.back() == n + 1;
}

}  // namespace

std::pair<WeightVector, WeightVector> WeightTable::component_limits(unsigned c) const {
  if (c > n + 1) throw InputError("component index out of range");
  if (c == 0) return {node[1], node[1]};
  if (c == n + 1) return {node[n + 1], node[n + 1]};
  return {node[c], node[c + 1]};
}

ChainFibre chain(const Stratum& stratum) {
  check_stratum(stratum);
  std::vector<unsigned> cuts{0};
  cuts.insert(cuts.end(), stratum.vanishing.begin(), stratum.vanishing.end());
  cuts.push_back(stratum.n + 2);
  ChainFibre f;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    std::vector<unsigned> interval;
    for (unsigned i = cuts[k]; i < cuts[k + 1]; ++i) interval.push_back(i);
    f.intervals.push_back(std::move(interval));
  }
  return f;
}

void validate_config(const ChainConfiguration& config) {
  auto fibre = chain(config.stratum);
  if (config.lengths.size() != fibre.intervals.size())
    throw InputError("configuration has " + std::to_string(config.lengths.size()) +
                     " lengths but the fibre has " + std::to_string(fibre.intervals.size()) +
                     " components");
  unsigned total = 0;
  for (unsigned l : config.lengths) total += l;
  if (total != config.stratum.n)
    throw InputError("lengths sum to " + std::to_string(total) + ", expected n = " +
                     std::to_string(config.stratum.n));
  if (config.marked_points.empty()) return;
  std::vector<unsigned> counts(config.lengths.size(), 0);
  for (const auto& p : config.marked_points) {
    if (p.interval >= counts.size()) throw InputError("marked point on a nonexistent component");
    if (p.coordinate == 0) throw InputError("marked point coordinate must be nonzero");
    ++counts[p.interval];
  }
  if (counts != config.lengths) throw InputError("marked points are inconsistent with lengths");
}

bool admissible(const ChainConfiguration& config) {
  validate_config(config);
  auto fibre = chain(config.stratum);
  for (std::size_t k = 0; k < fibre.intervals.size(); ++k)
    if (config.lengths[k] != interior_count(fibre.intervals[k], config.stratum.n)) return false;
  return true;
}

std::vector<Integer> default_parameters(unsigned n) {
  std::vector<Integer> a;
  for (unsigned i = 1; i < n; ++i) a.push_back(boost::multiprecision::pow(Integer(10), n - i));
  return a;
}

WeightTable build_weight_table(unsigned n, const std::vector<Integer>& a, SignConvention sign,
                               std::optional<WeightVector> shift, Integer a0) {
  if (n < 1 || n > 3) throw InputError("weight tables are supported for 1 <= n <= 3");
  if (a.size() != n - 1)
    throw InputError("expected " + std::to_string(n - 1) + " parameters a_1..a_{n-1}, got " +
                     std::to_string(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw InputError("parameters a_i must be positive");
    if (i && a[i] >= a[i - 1]) throw InputError("parameters must be strictly decreasing");
  }
  if (shift && shift->size() != n) throw InputError("shift must have n entries");

  WeightTable t;
  t.n = n;
  t.sign = sign;
  t.a.assign(n + 1, Integer(0));
  t.a[0] = a0;
  for (unsigned i = 1; i < n; ++i) t.a[i] = a[i - 1];
  t.a[n] = 1;
  t.shift = shift.value_or(WeightVector(n));

  const long long width = n + 1;
  t.node.resize(n + 2);
  for (unsigned j = 1; j <= n + 1; ++j) {
    WeightVector w(n);
    for (unsigned i = 1; i <= n; ++i) {
      // node j sits left of Delta_i iff j <= i, where v_i != 0 (l = 0)
      long long exponent = j <= i ? static_cast<long long>(i) - width : static_cast<long long>(i);
      w[i - 1] = t.a[i] * exponent;
    }
    t.node[j] = w + t.shift;
  }
  t.node[0] = t.node[1];
  return t;
}

std::vector<WeightVector> base_limit_rows(const Stratum& stratum) {
  check_stratum(stratum);
  const unsigned n = stratum.n;
  std::vector<WeightVector> rows;
  for (unsigned i = 1; i <= n + 1; ++i) {
    if (stratum.vanishing.count(i)) continue;
    WeightVector row(n);
    if (i <= n) row[i - 1] += 1;
    if (i >= 2) row[i - 2] -= 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<Integer> fibre_weight(const WeightTable& table, const ChainConfiguration& config,
                                    const OnePS& lambda) {
  validate_config(config);
  if (config.stratum.n != table.n) throw InputError("configuration and weight table disagree on n");
  if (lambda.size() != table.n) throw InputError("one-parameter subgroup must have n entries");
  for (const auto& row : base_limit_rows(config.stratum))
    if (pairing(lambda, row) < 0) return std::nullopt;
  auto fibre = chain(config.stratum);
  Integer total = 0;
  for (std::size_t k = 0; k < fibre.intervals.size(); ++k) {
    if (!config.lengths[k]) continue;
    unsigned j = landing(fibre.intervals[k], table.n, [&](unsigned i) { return lambda[i - 1] >= 0; });
    total += Integer(config.lengths[k]) * pairing(lambda, table.node[j]);
  }
  return total;
}

std::optional<Rat> point_mu(const WeightTable& table, const Stratum& stratum, std::size_t interval,
                            const OnePS& lambda) {
  auto fibre = chain(stratum);
  if (interval >= fibre.intervals.size()) throw InputError("no chain component " + std::to_string(interval));
  if (stratum.n != table.n || lambda.size() != table.n) throw InputError("rank mismatch");
  for (const auto& row : base_limit_rows(stratum))
    if (pairing(lambda, row) < 0) return std::nullopt;
  unsigned j = landing(fibre.intervals[interval], table.n, [&](unsigned i) { return lambda[i - 1] >= 0; });
  return Rat(pairing(lambda, table.node[j]) * table.sign_factor());
}

std::optional<Rat> mu_config(const WeightTable& table, const ChainConfiguration& config,
                             const OnePS& lambda) {
  auto w = fibre_weight(table, config, lambda);
  if (!w) return std::nullopt;
  return Rat(*w * table.sign_factor());
}

Verdict classify_config(const WeightTable& table, const ChainConfiguration& config) {
  validate_config(config);
  const unsigned n = table.n;
  if (config.stratum.n != n) throw InputError("configuration and weight table disagree on n");
  auto fibre = chain(config.stratum);
  const auto base_rows = base_limit_rows(config.stratum);

  // On the orthant where bit i of `mask` means s_{i+1} <= 0 (else >= 0), mu is
  // <lambda, h>. Returns the rows bounding the orthant and -h.
  auto orthant = [&](unsigned mask) {
    std::vector<WeightVector> rows = base_rows;
    for (unsigned i = 0; i < n; ++i) rows.push_back(WeightVector::unit(n, i, (mask >> i & 1) ? -1 : 1));
    WeightVector weight(n);
    for (std::size_t k = 0; k < fibre.intervals.size(); ++k) {
      if (!config.lengths[k]) continue;
      unsigned j = landing(fibre.intervals[k], n, [&](unsigned i) { return !(mask >> (i - 1) & 1); });
      weight += Integer(config.lengths[k]) * table.node[j];
    }
    WeightVector minus_h = Integer(-table.sign_factor()) * weight;
    return std::make_pair(rows, minus_h);
  };

  Verdict v;
  for (unsigned mask = 0; mask < (1u << n) && !v.witness; ++mask) {
    auto [rows, minus_h] = orthant(mask);
    auto r = solve_cone({n, rows, {minus_h}});
    if (r.feasible) {
      v.status = Stability::Unstable;
      v.witness = r.witness;
    }
  }
  for (unsigned mask = 0; mask < (1u << n) && !v.witness; ++mask) {
    auto [rows, minus_h] = orthant(mask);
    rows.push_back(minus_h);
    if (auto lambda = cone_has_nonzero(n, rows)) {
      v.status = Stability::StrictlySemistable;
      v.witness = lambda;
    }
  }
  if (!v.witness) return v;

  auto m = mu_config(table, config, *v.witness);
  bool ok = m && denominator(*m) == 1 &&
            (v.status == Stability::Unstable ? *m < 0 : (*m == 0 && !v.witness->is_zero()));
  if (!ok)
    throw InvariantViolation("configuration witness " + v.witness->to_string() + " has mu = " +
                             (m ? relgit::to_string(*m) : std::string("inf")) + ", inconsistent with " +
                             to_string(v.status));
  v.witness_mu = MuValue::finite(numerator(*m));
  return v;
}

std::optional<Integer> config_stabilizer(const ChainConfiguration& config) {
  validate_config(config);
  const unsigned n = config.stratum.n;
  unsigned total = 0;
  for (unsigned l : config.lengths) total += l;
  if (total && config.marked_points.empty())
    throw InputError("stabilizer computation needs marked points");

  auto fibre = chain(config.stratum);
  std::vector<WeightVector> generators = base_limit_rows(config.stratum);
  Integer permuting = 1;
  for (std::size_t k = 0; k < fibre.intervals.size(); ++k) {
    const auto& interval = fibre.intervals[k];
    if (is_boundary(interval, n)) continue;
    std::vector<Rat> coords;
    for (const auto& p : config.marked_points)
      if (p.interval == k) coords.push_back(p.coordinate);
    if (coords.empty()) continue;
    generators.push_back(WeightVector::unit(n, interval.front() - 1));
    // rational scalars of finite order are +-1; count those permuting the points
    std::sort(coords.begin(), coords.end());
    std::vector<Rat> negated;
    for (const auto& c : coords) negated.push_back(-c);
    std::sort(negated.begin(), negated.end());
    if (negated == coords) permuting *= 2;
  }
  auto index = lattice_index(n, generators);
  if (!index) return std::nullopt;
  return *index * permuting;
}

std::vector<Stratum> all_strata(unsigned n) {
  std::vector<Stratum> out;
  for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
    Stratum s{n, {}};
    for (unsigned i = 0; i <= n; ++i)
      if (mask >> i & 1) s.vanishing.insert(i + 1);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
    if (x.vanishing.size() != y.vanishing.size()) return x.vanishing.size() < y.vanishing.size();
    return x.vanishing < y.vanishing;
  });
  return out;
}

std::vector<std::vector<unsigned>> all_length_vectors(const Stratum& stratum) {
  const std::size_t parts = chain(stratum).intervals.size();
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(parts, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t k, unsigned left) {
    if (k + 1 == parts) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned d = left + 1; d-- > 0;) {
      cur[k] = d;
      walk(k + 1, left - d);
    }
  };
  walk(0, stratum.n);
  return out;
}

std::vector<unsigned> admissible_lengths(const Stratum& stratum) {
  std::vector<unsigned> out;
  for (const auto& interval : chain(stratum).intervals) out.push_back(interior_count(interval, stratum.n));
  return out;
}

std::vector<SweepRow> sweep(const WeightTable& table) {
  std::vector<SweepRow> rows;
  for (const auto& s : all_strata(table.n)) {
    for (const auto& lengths : all_length_vectors(s)) {
      ChainConfiguration c{s, lengths, {}};
      rows.push_back({c, admissible(c), classify_config(table, c)});
    }
  }
  return rows;
}

std::string HilbertComponent::name() const {
  return "H_" + std::to_string(y_points) + std::to_string(y_prime_points);
}

HilbertIncidence hilbert_components(unsigned n) {
  if (n < 1 || n > 3) throw InputError("hilbert_components supports 1 <= n <= 3");
  HilbertIncidence h;
  h.n = n;
  for (unsigned i = n + 1; i-- > 0;) h.components.push_back({i, n - i, Stratum{n, {i + 1}}});

  for (const auto& s : all_strata(n)) {
    if (s.vanishing.empty()) continue;
    StratumIncidence inc{s, admissible_lengths(s), {}, n + 1 - static_cast<unsigned>(s.vanishing.size())};
    auto fibre = chain(s);
    for (std::size_t c = 0; c < h.components.size(); ++c) {
      unsigned cut = h.components[c].generic_stratum.vanishing.count(0) ? 0
                                                                          : *h.components[c].generic_stratum.vanishing.begin();
      if (!s.vanishing.count(cut)) continue;
      // merge intervals back to {0..cut-1} and {cut..n+1}
      unsigned left = 0, right = 0;
      for (std::size_t k = 0; k < fibre.intervals.size(); ++k)
        (fibre.intervals[k].front() < cut ? left : right) += inc.lengths[k];
      if (left == h.components[c].y_points && right == h.components[c].y_prime_points)
        inc.in_closure_of.push_back(c);
    }
    h.strata.push_back(std::move(inc));
  }

  const std::size_t m = h.components.size();
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t c = 0; c < m; ++c)
      if (mask >> c & 1) sub.push_back(c);
    if (sub.size() >= 2) subsets.push_back(std::move(sub));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });

  h.dual_complex_is_simplex = true;
  for (auto& sub : subsets) {
    Intersection x{sub, {}, 0, 0};
    for (const auto& inc : h.strata) {
      bool all = std::all_of(sub.begin(), sub.end(), [&](std::size_t c) {
        return std::find(inc.in_closure_of.begin(), inc.in_closure_of.end(), c) != inc.in_closure_of.end();
      });
      if (!all) continue;
      if (x.strata.empty() || inc.dimension > x.dimension) {
        x.dimension = inc.dimension;
        x.top_strata = 0;
      }
      if (inc.dimension == x.dimension) ++x.top_strata;
      x.strata.push_back(inc.stratum);
    }
    if (x.strata.empty()) h.dual_complex_is_simplex = false;
    h.intersections.push_back(std::move(x));
  }
  return h;
}

std::string to_string(const Stratum& s) {
  std::string out = "{";
  for (unsigned i : s.vanishing) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::string to_string(const ChainFibre& f) {
  std::string out;
  for (const auto& interval : f.intervals) {
    if (!out.empty()) out += " u ";
    out += "D{";
    for (std::size_t i = 0; i < interval.size(); ++i) out += (i ? "," : "") + std::to_string(interval[i]);
    out += "}";
  }
  return out;
}

std::string lengths_to_string(const std::vector<unsigned>& lengths) {
  std::string out = "(";
  for (std::size_t i = 0; i < lengths.size(); ++i) out += (i ? "," : "") + std::to_string(lengths[i]);
  return out + ")";
}

ConfigFile parse_config(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("configuration file syntax error: ") + e.what());
  }
  try {
    ConfigFile f;
    f.config.stratum.n = doc.at("n").get<unsigned>();
    for (const auto& i : doc.value("vanishing", json::array())) f.config.stratum.vanishing.insert(i.get<unsigned>());
    f.config.lengths = doc.at("lengths").get<std::vector<unsigned>>();
    for (const auto& p : doc.value("marked_points", json::array())) {
      const json& c = p.at(1);
      Rat coord = c.is_string() ? parse_rat(c.get<std::string>()) : Rat(c.get<long long>());
      f.config.marked_points.push_back({p.at(0).get<std::size_t>(), coord});
    }
    if (doc.contains("a")) {
      std::vector<Integer> a;
      for (const auto& x : doc.at("a")) a.emplace_back(x.get<long long>());
      f.a = std::move(a);
    }
    validate_config(f.config);
    return f;
  } catch (const json::exception& e) {
    throw InputError(std::string("configuration file structure error: ") + e.what());
  }
}

}  // namespace relgit::conic
