#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/magical.hpp"

using namespace ordramsey;

TEST_CASE("magical predicate") {
  const auto id = identity_ranking(3);
  CHECK_FALSE(is_magical(OrderedGraph(3), id));
  CHECK_FALSE(is_magical(OrderedGraph(3, {{0, 1}, {1, 2}, {0, 2}}), id));
  const auto v = is_magical(OrderedGraph(3, {{0, 1}, {1, 2}}), id);
  REQUIRE(v);
  CHECK(*v == Triple{0, 1, 2});
  CHECK_FALSE(is_magical(OrderedGraph(3, {{0, 1}, {1, 2}}), Ranking{1, 0, 2}));
}

TEST_CASE("i-holes over all rankings of three elements") {
  int holes = 0;
  Ranking r{0, 1, 2};
  do {
    const bool h = is_ihole(0, 1, 2, r);
    CHECK(h == (r[1] == 0));
    holes += h;
  } while (std::next_permutation(r.begin(), r.end()));
  CHECK(holes == 2);
  CHECK_FALSE(is_ihole(0, 1, 2, identity_ranking(3)));
}

TEST_CASE("order types and forcing") {
  CHECK(OrderType{{true, true, true, true}}.forcing());
  CHECK_FALSE(OrderType{{false, true, true, true}}.forcing());
  int non_forcing = 0;
  for (int t = 0; t < 16; ++t) {
    const auto type = OrderType::from_index(t);
    CHECK(type.index() == t);
    non_forcing += !type.forcing();
  }
  CHECK(non_forcing == 7);

  // Definitional route on concrete rankings: realise every sign pattern with
  // a = 0, b = b' = 1, c = 2 under independent <2 and <3.
  Ranking r2{0, 1, 2}, r3{0, 1, 2};
  do {
    do {
      const auto type = order_type(0, 1, 1, 2, r2, r3);
      CHECK(is_forcing(0, 1, 1, 2, r2, r3) == type.forcing());
    } while (std::next_permutation(r3.begin(), r3.end()));
  } while (std::next_permutation(r2.begin(), r2.end()));

  CHECK(is_forcing(0, 1, 1, 2, identity_ranking(3), identity_ranking(3)));
  CHECK_THROWS_AS(is_forcing(1, 0, 1, 2, identity_ranking(3), identity_ranking(3)), OrderViolation);
}

TEST_CASE("forcing claim over all triple orderings of five elements") {
  const auto report = verify_forcing_claim();
  CHECK(report.orderings_checked == 14400);
  CHECK(report.all_contain_forcing);
  CHECK_FALSE(report.first_counterexample);
  CHECK(report.tuples_examined == 14400L * 20);
}

TEST_CASE("triple ordered graph validation") {
  const OrderedGraph p3(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(TripleOrderedGraph(p3, Ranking{0, 0, 1}, identity_ranking(3)), WitnessInvalid);
  // Witness not magical under the identity.
  CHECK_THROWS_AS(TripleOrderedGraph(p3, identity_ranking(3), identity_ranking(3),
                                     MagicalWitness{p3, p3}),
                  WitnessInvalid);
  // Intersection identity fails.
  CHECK_THROWS_AS(TripleOrderedGraph(OrderedGraph(3, {{0, 2}}), identity_ranking(3),
                                     identity_ranking(3),
                                     MagicalWitness{OrderedGraph(3), OrderedGraph(3)}),
                  WitnessInvalid);
  const OrderedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_NOTHROW(TripleOrderedGraph(k3, identity_ranking(3), identity_ranking(3), MagicalWitness{k3, k3}));
}

TEST_CASE("double-magical witness from crossing curves") {
  CurveFamily disjoint{{}, CurveOrdering::None};
  CurveFamily meeting{{}, CurveOrdering::None};
  for (int i = 0; i < 6; ++i) {
    disjoint.curves.push_back(PolylineCurve({{-1 - i, i}, {0, i}, {1 + i, i}}));
    meeting.curves.push_back(PolylineCurve({{-1 - i, 10}, {0, i}, {1 + i, 10 + i}}));
  }
  const auto d = double_magical_witness(disjoint, 0);
  CHECK(d.triple.graph().edge_count() == 15);
  const auto m = double_magical_witness(meeting, 0);
  CHECK(m.triple.graph().edge_count() == 0);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CHECK_NOTHROW(double_magical_witness(gen_crossing_curves(12, 4, 0, seed), 0));
  }
}

TEST_CASE("dense extraction examples") {
  OrderedGraph k8(8);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) k8.add_edge(i, j);
  const auto full = extract_biclique_dense(TripleOrderedGraph(k8, identity_ranking(8), identity_ranking(8)));
  CHECK(is_biclique(k8, full.biclique));
  CHECK(full.biclique.size() >= 3);

  const auto none = extract_biclique_dense(TripleOrderedGraph(OrderedGraph(8), identity_ranking(8), identity_ranking(8)));
  CHECK(none.biclique.empty());
  CHECK(none.forcing_configurations == 0);
}

TEST_CASE("dense extraction against the exhaustive oracle") {
  int nonempty = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto w = double_magical_witness(gen_crossing_curves(14, 4, 0, seed, 0.75), 0);
    const auto& g = w.triple.graph();
    const auto ex = extract_biclique_dense(w.triple);
    const int best = oracle::max_biclique_size(g, false);
    CHECK(ex.biclique.size() <= best);
    if (!ex.biclique.empty()) {
      CHECK(is_biclique(g, ex.biclique));
      ++nonempty;
    }
  }
  CHECK(nonempty >= 20);
}

TEST_CASE("threshold pipeline examples") {
  // Four short curves strictly left of the rest: Case 2.
  CurveFamily fam{{}, CurveOrdering::RightEndpoint};
  for (int i = 0; i < 4; ++i) fam.curves.push_back(PolylineCurve({{i, 0}, {i + ratio(1, 2), 0}}));
  for (int i = 0; i < 36; ++i) fam.curves.push_back(PolylineCurve({{12 + i, i}, {12 + i + ratio(1, 2), i}}));
  const auto c2 = threshold_pipeline(fam, 0.2);
  CHECK(c2.case_id == 2);
  CHECK(c2.certificate.size() == 4);
  CHECK(is_biclique(c2.graph, c2.certificate));

  // Pairwise disjoint curves all crossing one line: Case 1.
  CurveFamily flat{{}, CurveOrdering::RightEndpoint};
  for (int i = 0; i < 20; ++i) flat.curves.push_back(PolylineCurve({{-1, i}, {1 + ratio(i, 20), i}}));
  const auto c1 = threshold_pipeline(flat, 0.1);
  CHECK(c1.case_id == 1);
  CHECK(c1.certificate.in_complement);
  CHECK(c1.certificate.size() >= 5);
  CHECK(is_biclique(c1.graph, c1.certificate));

  CHECK_THROWS_AS(threshold_pipeline(flat, 0.6), std::invalid_argument);
}
