#include <doctest.h>

#include "../support/generators.hpp"
#include "relgit/conic.hpp"

using namespace relgit;
using namespace relgit::conic;
using relgit::testing::for_each_lambda;
using relgit::testing::to_one_ps;

namespace {

ChainConfiguration config(unsigned n, std::set<unsigned> vanishing, std::vector<unsigned> lengths) {
  return {{n, std::move(vanishing)}, std::move(lengths), {}};
}

WeightTable default_table(unsigned n) { return build_weight_table(n, default_parameters(n)); }

// Threshold reading of a lambda scan over [-5,5]^n.
Stability scan(const WeightTable& t, const ChainConfiguration& c) {
  bool negative = false, zero = false;
  for_each_lambda(t.n, 5, [&](const std::vector<long long>& l) {
    auto m = mu_config(t, c, to_one_ps(l));
    bool trivial = std::all_of(l.begin(), l.end(), [](long long v) { return v == 0; });
    if (!m) return;
    if (*m < 0) negative = true;
    if (*m == 0 && !trivial) zero = true;
  });
  if (negative) return Stability::Unstable;
  return zero ? Stability::StrictlySemistable : Stability::Stable;
}

std::vector<std::vector<unsigned>> intervals(unsigned n, std::set<unsigned> v) { return chain({n, std::move(v)}).intervals; }

}  // namespace

TEST_CASE("chain intervals") {
  CHECK(intervals(2, {1, 2, 3}) == std::vector<std::vector<unsigned>>{{0}, {1}, {2}, {3}});
  CHECK(intervals(2, {1, 3}) == std::vector<std::vector<unsigned>>{{0}, {1, 2}, {3}});
  CHECK(intervals(2, {3}) == std::vector<std::vector<unsigned>>{{0, 1, 2}, {3}});
  CHECK(intervals(2, {}) == std::vector<std::vector<unsigned>>{{0, 1, 2, 3}});
  CHECK_THROWS_AS(chain({2, {4}}), InputError);
  CHECK_THROWS_AS(chain({2, {0}}), InputError);
  CHECK(to_string(chain({2, {1, 3}})) == "D{0} u D{1,2} u D{3}");
}

TEST_CASE("every stratum admits exactly one admissible length vector") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& s : all_strata(n)) {
      unsigned total = 0;
      for (const auto& interval : chain(s).intervals)
        for (unsigned i : interval) total += (i >= 1 && i <= n);
      CHECK(total == n);
      int count = 0;
      for (const auto& l : all_length_vectors(s)) count += admissible({s, l, {}});
      CHECK(count == 1);
      CHECK(admissible({s, admissible_lengths(s), {}}));
    }
  CHECK(all_strata(2).size() == 8);
  CHECK(all_strata(2).front().vanishing.empty());
}

TEST_CASE("admissibility examples") {
  CHECK(admissible(config(2, {1, 2, 3}, {0, 1, 1, 0})));
  CHECK_FALSE(admissible(config(2, {1, 2, 3}, {0, 2, 0, 0})));
  CHECK(admissible(config(2, {3}, {2, 0})));
  CHECK_THROWS_AS(admissible(config(2, {3}, {1, 0})), InputError);
  CHECK_THROWS_AS(admissible(config(2, {3}, {1, 0, 1})), InputError);
}

TEST_CASE("weight table for one point") {
  auto t = default_table(1);
  CHECK(t.node[1] == WeightVector{-1});
  CHECK(t.node[2] == WeightVector{1});
  CHECK(t.node[1] == -t.node[2]);
  auto [a0, b0] = t.component_limits(0);
  CHECK(a0 == b0);
  auto [a2, b2] = t.component_limits(2);
  CHECK(a2 == b2);
  auto [a1, b1] = t.component_limits(1);
  CHECK(a1 == -b1);
}

TEST_CASE("weight table for two points") {
  auto t = default_table(2);
  CHECK(t.a[1] == 10);
  CHECK(t.a[2] == 1);
  CHECK(t.a[0] == 1000);
  // v_1^{3 a_1} v_2^3 has sigma-weight (a_1 (1 - 3), 2 - 3)
  CHECK(t.node[1] == WeightVector{-20, -1});
  CHECK(t.node[2] == WeightVector{10, -1});
  CHECK(t.node[3] == WeightVector{10, 2});
  CHECK_THROWS_AS(build_weight_table(2, {}), InputError);
  CHECK_THROWS_AS(build_weight_table(3, {1, 5}), InputError);
  CHECK_THROWS_AS(build_weight_table(4, {1000, 100, 10}), InputError);
  CHECK_THROWS_AS(build_weight_table(2, {0}), InputError);
}

TEST_CASE("total mu of the origin configuration matches the closed form up to sign -1") {
  for (long long a1 : {2, 10, 37}) {
    auto t = build_weight_table(2, {Integer(a1)});
    auto z = config(2, {1, 2, 3}, {0, 1, 1, 0});
    for_each_lambda(2, 5, [&](const std::vector<long long>& l) {
      long long s1 = l[0], s2 = l[1];
      Rat closed = Rat(a1) * (Rat(s1, 2) - Rat(3 * std::abs(s1), 2)) - (Rat(s2, 2) + Rat(3 * std::abs(s2), 2));
      auto m = mu_config(t, z, to_one_ps(l));
      REQUIRE(m);
      CHECK(*m == -closed);
      if (s1 != 0 || s2 != 0) CHECK(*m > 0);
    });
  }
}

TEST_CASE("fibre sign convention flips mu") {
  auto e = default_table(2);
  auto f = build_weight_table(2, default_parameters(2), SignConvention::FibreWeight);
  auto z = config(2, {1, 2, 3}, {0, 1, 1, 0});
  OnePS lambda{2, -3};
  CHECK(*mu_config(e, z, lambda) == -*mu_config(f, z, lambda));
  CHECK(*fibre_weight(e, z, lambda) == *fibre_weight(f, z, lambda));
}

TEST_CASE("mu of configurations is homogeneous and additive") {
  auto t = default_table(3);
  for (const auto& s : all_strata(3))
    for (const auto& lengths : all_length_vectors(s)) {
      ChainConfiguration c{s, lengths, {}};
      CHECK(*mu_config(t, c, OnePS{0, 0, 0}) == 0);
      for_each_lambda(3, 2, [&](const std::vector<long long>& l) {
        auto lambda = to_one_ps(l);
        auto m = mu_config(t, c, lambda);
        auto m3 = mu_config(t, c, Integer(3) * lambda);
        REQUIRE(m.has_value() == m3.has_value());
        if (!m) return;
        CHECK(*m3 == 3 * *m);
        Rat sum = 0;
        for (std::size_t k = 0; k < lengths.size(); ++k)
          if (lengths[k]) sum += lengths[k] * *point_mu(t, s, k, lambda);
        CHECK(sum == *m);
      });
    }
}

TEST_CASE("classification examples") {
  auto t2 = default_table(2);
  CHECK(classify_config(t2, config(2, {1, 2, 3}, {0, 1, 1, 0})).status == Stability::Stable);
  auto v = classify_config(t2, config(2, {1, 2, 3}, {0, 2, 0, 0}));
  REQUIRE(v.status == Stability::Unstable);
  auto m = mu_config(t2, config(2, {1, 2, 3}, {0, 2, 0, 0}), *v.witness);
  REQUIRE(m);
  CHECK(*m < 0);
  CHECK(*v.witness_mu == MuValue::finite(numerator(*m)));
  CHECK(classify_config(default_table(1), config(1, {1, 2}, {0, 1, 0})).status == Stability::Stable);
}

TEST_CASE("equivalence with admissibility and with a lambda scan") {
  for (unsigned n = 1; n <= 3; ++n) {
    auto t = default_table(n);
    for (const auto& row : sweep(t)) {
      CAPTURE(n);
      CAPTURE(to_string(row.config.stratum));
      CAPTURE(lengths_to_string(row.config.lengths));
      CHECK(row.verdict.status != Stability::StrictlySemistable);
      CHECK((row.verdict.status == Stability::Stable) == row.admissible);
      CHECK(row.verdict.status == scan(t, row.config));
    }
  }
}

TEST_CASE("equivalence holds for other parameter choices") {
  for (const auto& a : std::vector<std::vector<Integer>>{{2}, {3}, {100}}) {
    auto t = build_weight_table(2, a);
    for (const auto& row : sweep(t)) CHECK((row.verdict.status == Stability::Stable) == row.admissible);
  }
  auto t = build_weight_table(3, {Integer(5), Integer(2)});
  for (const auto& row : sweep(t)) CHECK((row.verdict.status == Stability::Stable) == row.admissible);
}

TEST_CASE("base limit failure gives infinite mu") {
  auto t = default_table(2);
  auto c = config(2, {1, 3}, {0, 2, 0});
  CHECK_FALSE(mu_config(t, c, OnePS{1, -1}));
  CHECK(mu_config(t, c, OnePS{1, 1}));
  auto rows = base_limit_rows({2, {1, 3}});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == WeightVector{-1, 1});
}

TEST_CASE("configuration stabilizers") {
  ChainConfiguration sym{{2, {1, 3}}, {0, 2, 0}, {{1, Rat(3)}, {1, Rat(-3)}}};
  CHECK(*config_stabilizer(sym) == 2);
  ChainConfiguration generic{{2, {1, 3}}, {0, 2, 0}, {{1, Rat(3)}, {1, Rat(6)}}};
  CHECK(*config_stabilizer(generic) == 1);
  ChainConfiguration frac{{2, {1, 3}}, {0, 2, 0}, {{1, Rat(1, 2)}, {1, Rat(-1, 2)}}};
  CHECK(*config_stabilizer(frac) == 2);
  ChainConfiguration origin{{2, {1, 2, 3}}, {0, 1, 1, 0}, {{1, Rat(1)}, {2, Rat(-4)}}};
  CHECK(*config_stabilizer(origin) == 1);
  ChainConfiguration one{{1, {1, 2}}, {0, 1, 0}, {{1, Rat(-1)}}};
  CHECK(*config_stabilizer(one) == 1);
  ChainConfiguration bad{{2, {1, 3}}, {0, 2, 0}, {{1, Rat(3)}}};
  CHECK_THROWS_AS(config_stabilizer(bad), InputError);
  ChainConfiguration unmarked{{2, {1, 3}}, {0, 2, 0}, {}};
  CHECK_THROWS_AS(config_stabilizer(unmarked), InputError);
}

TEST_CASE("stable configurations have finite stabilizers") {
  auto t = default_table(2);
  for (const auto& s : all_strata(2)) {
    auto lengths = admissible_lengths(s);
    ChainConfiguration c{s, lengths, {}};
    for (std::size_t k = 0; k < lengths.size(); ++k)
      for (unsigned j = 0; j < lengths[k]; ++j) c.marked_points.push_back({k, Rat(j + 2)});
    REQUIRE(classify_config(t, c).status == Stability::Stable);
    CHECK(config_stabilizer(c).has_value());
  }
}

TEST_CASE("component incidence for two points") {
  auto h = hilbert_components(2);
  REQUIRE(h.components.size() == 3);
  CHECK(h.components[0].name() == "H_20");
  CHECK(h.components[1].name() == "H_11");
  CHECK(h.components[2].name() == "H_02");
  CHECK(h.dual_complex_is_simplex);
  REQUIRE(h.intersections.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(h.intersections[i].components.size() == 2);
    CHECK(h.intersections[i].dimension == 1);
    CHECK(h.intersections[i].top_strata == 1);
  }
  const auto& triple = h.intersections[3];
  CHECK(triple.components.size() == 3);
  CHECK(triple.dimension == 0);
  REQUIRE(triple.strata.size() == 1);
  CHECK(triple.strata[0].vanishing == std::set<unsigned>{1, 2, 3});
  // H_20 n H_02 through D0 u D{1,2} u D3
  const auto& outer = h.intersections[1];
  CHECK(outer.components == std::vector<std::size_t>{0, 2});
  CHECK(std::find(outer.strata.begin(), outer.strata.end(), Stratum{2, {1, 3}}) != outer.strata.end());
}

TEST_CASE("component incidence for one point") {
  auto h = hilbert_components(1);
  REQUIRE(h.components.size() == 2);
  REQUIRE(h.intersections.size() == 1);
  CHECK(h.intersections[0].strata.size() == 1);
  CHECK(h.intersections[0].strata[0].vanishing == std::set<unsigned>{1, 2});
  CHECK(h.intersections[0].dimension == 0);
  CHECK(h.dual_complex_is_simplex);
}

TEST_CASE("configuration files") {
  auto f = parse_config(R"({"n": 2, "vanishing": [1, 3], "lengths": [0, 2, 0],
                            "marked_points": [[1, "3"], [1, -3]], "a": [10]})");
  CHECK(f.config.stratum.vanishing == std::set<unsigned>{1, 3});
  CHECK(f.config.marked_points[1].coordinate == -3);
  REQUIRE(f.a);
  CHECK(f.a->at(0) == 10);
  CHECK_THROWS_AS(parse_config(R"({"n": 2, "lengths": [1]})"), InputError);
  CHECK_THROWS_AS(parse_config(R"({"n": 2, "vanishing": [1,3], "lengths": [0,2,0], "marked_points": [[1,"0"],[1,"1"]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_config("{"), InputError);
}
