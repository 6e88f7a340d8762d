#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/magical.hpp"

using namespace ordramsey;

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("two-clique closed forms") {
  for (int n : {1, 2, 7, 64}) {
    const auto g = gen_two_clique(n, 0.0, 1);
    CHECK(g.edge_count() == choose2(n / 2) + choose2(n - n / 2));
    CHECK(gen_two_clique(n, 1.0, 1).edge_count() == choose2(n));
  }
  const auto g = gen_two_clique(12, 0.0, 4);
  CHECK(max_biclique_oracle(g, true).size() == 6);
}

TEST_CASE("four-clique closed forms") {
  for (int n : {8, 25, 31}) {
    const long q = n / 4, last = n - 3 * q;
    CHECK(gen_four_clique(n, 0.0, 2).edge_count() == 3 * choose2(q) + choose2(last));
    CHECK(gen_four_clique(n, 1.0, 2).edge_count() == choose2(n));
  }
}

TEST_CASE("four-clique mean edge count") {
  const double eps = 0.2;
  const double base = 4 * choose2(6), cross = choose2(24) - base;
  double sum = 0;
  const int runs = 100;
  for (std::uint64_t seed = 0; seed < runs; ++seed) sum += gen_four_clique(24, eps, seed).edge_count();
  const double sigma = std::sqrt(cross * eps * (1 - eps) / runs);
  CHECK(std::abs(sum / runs - (base + eps * cross)) <= 3 * sigma);
}

TEST_CASE("generators are deterministic and seed sensitive") {
  CHECK(gen_random_ordered(40, 0.3, 9) == gen_random_ordered(40, 0.3, 9));
  CHECK_FALSE(gen_random_ordered(40, 0.3, 9) == gen_random_ordered(40, 0.3, 10));
  const auto a = gen_crossing_curves(10, 4, 0, 3), b = gen_crossing_curves(10, 4, 0, 3);
  for (int i = 0; i < 10; ++i) {
    const auto& pa = a.curves[i].points();
    const auto& pb = b.curves[i].points();
    REQUIRE(pa.size() == pb.size());
    for (std::size_t t = 0; t < pa.size(); ++t) CHECK((pa[t].x == pb[t].x && pa[t].y == pb[t].y));
  }
}

TEST_CASE("single curve gives an edgeless graph") {
  CHECK(intersection_graph(gen_grounded_curves(1, 3, 0)).graph.size() == 1);
  CHECK(intersection_graph(gen_crossing_curves(1, 3, 0, 0)).graph.edge_count() == 0);
}

TEST_CASE("grounded family invariants") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto fam = gen_grounded_curves(10, 4, seed);
    std::set<Rational> starts;
    for (const auto& c : fam.curves) {
      REQUIRE(c.x_min() == 0);
      REQUIRE(c.points().size() == 5);
      starts.insert(c.points().front().y);
    }
    REQUIRE(starts.size() == 10);
    REQUIRE_NOTHROW(family_order(fam));
  }
}

TEST_CASE("crossing family invariants and witnesses") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto fam = gen_crossing_curves(9, 4, 0, seed);
    std::set<Rational> heights, lefts, rights;
    for (const auto& c : fam.curves) {
      REQUIRE(c.spans(0));
      heights.insert(c.y_at(0));
      lefts.insert(c.x_min());
      rights.insert(c.x_max());
    }
    REQUIRE(heights.size() == 9);
    REQUIRE(lefts.size() == 9);
    REQUIRE(rights.size() == 9);
    REQUIRE_NOTHROW(double_magical_witness(fam, 0));
  }
}

TEST_CASE("random curves have distinct right endpoints") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto fam = gen_random_curves(60, 3, seed);
    std::set<Rational> rights;
    for (const auto& c : fam.curves) rights.insert(c.x_max());
    CHECK(rights.size() == 60);
    CHECK_NOTHROW(family_order(CurveFamily{fam.curves, CurveOrdering::RightEndpoint}));
  }
}

TEST_CASE("spec validation and dispatch") {
  GenSpec s;
  s.kind = GenSpec::Kind::FourClique;
  s.n = 10;
  s.epsilon = 1.5;
  CHECK_THROWS_AS(validate(s), InvalidGenSpec);
  s.epsilon = 0.3;
  CHECK(std::holds_alternative<OrderedGraph>(generate(s)));
  s.kind = parse_gen_kind("grounded-curves");
  CHECK(is_curve_kind(s.kind));
  CHECK(std::string(kind_name(s.kind)) == "grounded-curves");
  CHECK(std::holds_alternative<CurveFamily>(generate(s)));
  CHECK_THROWS_AS(parse_gen_kind("spiral"), InvalidGenSpec);
  s.n = 0;
  CHECK_THROWS_AS(validate(s), InvalidGenSpec);
}
