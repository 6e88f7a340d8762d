#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "ordramsey/curves_ramsey.hpp"
#include "ordramsey/generators.hpp"

using namespace ordramsey;

namespace {

PolylineCurve seg(Rational x1, Rational y1, Rational x2, Rational y2) {
  return PolylineCurve({{x1, y1}, {x2, y2}});
}

Biclique trivial_oracle(const OrderedGraph& sub) {
  // Balanced halves of an edgeless subgraph.
  VertexSet a, b;
  for (int v = 0; v < sub.size(); ++v) (v < sub.size() / 2 ? a : b).push_back(v);
  return balanced(a, b, true);
}

}  // namespace

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(PolylineCurve({}), InvalidCurve);
  CHECK_THROWS_AS(PolylineCurve({{1, 0}, {1, 2}}), InvalidCurve);
  CHECK_THROWS_AS(PolylineCurve({{2, 0}, {1, 2}}), InvalidCurve);
  const PolylineCurve c({{0, 0}, {2, 4}});
  CHECK(c.y_at(1) == 2);
  CHECK(c.y_at(ratio(1, 2)) == 1);
}

TEST_CASE("intersection predicate examples") {
  CHECK_FALSE(curves_intersect(seg(0, 0, 2, 0), seg(1, 1, 3, 1)));
  CHECK(curves_intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
  CHECK(curves_intersect(seg(0, 0, 1, 1), seg(1, 1, 2, 0)));
  CHECK_FALSE(curves_intersect(seg(0, 0, 1, 0), seg(2, 0, 3, 0)));
}

TEST_CASE("intersection graph agrees with the segment-pair scan") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto fam = gen_grounded_curves(10, 4, seed);
    const auto cg = intersection_graph(fam);
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j)
        REQUIRE(cg.graph.has_edge(i, j) ==
                oracle::curves_meet(fam.curves[cg.order[i]], fam.curves[cg.order[j]]));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto fam = gen_random_curves(12, 3, seed, 10, 10, 6);
    const auto cg = intersection_graph(fam);
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j)
        REQUIRE(cg.graph.has_edge(i, j) ==
                oracle::curves_meet(fam.curves[cg.order[i]], fam.curves[cg.order[j]]));
  }
}

TEST_CASE("ordering keys") {
  CurveFamily fam{{seg(0, 3, 1, 3), seg(0, 1, 2, 1), seg(0, 2, 3, 2)}, CurveOrdering::GroundedY};
  CHECK(family_order(fam) == std::vector<int>{1, 2, 0});
  fam.ordering = CurveOrdering::RightEndpoint;
  CHECK(family_order(fam) == std::vector<int>{0, 1, 2});
  fam.curves.push_back(seg(0, 9, 3, 9));
  CHECK_THROWS_AS(family_order(fam), DuplicateKey);
  CurveFamily ungrounded{{seg(1, 0, 2, 0)}, CurveOrdering::GroundedY};
  CHECK_THROWS_AS(family_order(ungrounded), InvalidCurve);
}

TEST_CASE("nested grounded arcs and a common point") {
  CurveFamily nested{{}, CurveOrdering::GroundedY};
  CurveFamily star{{}, CurveOrdering::GroundedY};
  for (int i = 0; i < 5; ++i) {
    nested.curves.push_back(PolylineCurve({{0, 10 - i}, {i + 1, 10 - i}}));
    star.curves.push_back(PolylineCurve({{0, i}, {5, 20}}));
  }
  CHECK(intersection_graph(nested).graph.edge_count() == 0);
  CHECK(intersection_graph(star).graph.edge_count() == 10);
}

TEST_CASE("grounded lemma on random families") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto report = grounded_ordering_properties(gen_grounded_curves(10, 4, seed));
    REQUIRE_FALSE(report.m1_witness);
    REQUIRE_FALSE(report.p4_witness);
  }
}

TEST_CASE("split at a line") {
  CurveFamily one{{seg(-2, 0, 2, 4)}, CurveOrdering::None};
  const auto s = split_at_line(one, 0);
  CHECK(s.left.curves[0].points().size() == 2);
  CHECK(s.left.curves[0].points()[0].y == 2);
  CHECK(s.left.curves[0].points()[1].x == 2);
  CHECK(s.right.curves[0].points()[1].y == 4);

  CurveFamily vertex_on_line{{PolylineCurve({{-1, 0}, {0, 5}, {1, 0}})}, CurveOrdering::None};
  const auto sv = split_at_line(vertex_on_line, 0);
  CHECK(sv.left.curves[0].points().size() == 2);
  CHECK(sv.right.curves[0].points().size() == 2);

  CurveFamily misses{{seg(1, 0, 2, 0)}, CurveOrdering::None};
  CHECK_THROWS_AS(split_at_line(misses, 0), CurveMissesLine);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto fam = gen_crossing_curves(8, 4, 0, seed);
    const auto sp = split_at_line(fam, 0);
    std::vector<int> id(8);
    std::iota(id.begin(), id.end(), 0);
    const auto joined = graph_union(intersection_graph(sp.left.curves, id),
                                    intersection_graph(sp.right.curves, id));
    CHECK(joined == intersection_graph(fam.curves, sp.order));
  }
}

TEST_CASE("sparse or dense subgraph") {
  const auto empty = sparse_or_dense_subgraph(OrderedGraph(12), 0.1);
  CHECK(empty.vertices.size() == 12);
  CHECK_FALSE(empty.complement_side);
  const auto full = sparse_or_dense_subgraph(complement(OrderedGraph(12)), 0.1);
  CHECK(full.vertices.size() == 12);
  CHECK(full.complement_side);

  const auto g = gen_two_clique(512, 0.01, 3);
  const double delta = 1.0 / 64;
  const auto split = sparse_or_dense_subgraph(g, delta);
  CHECK(induced_max_degree(g, split.vertices, split.complement_side) <=
        delta * static_cast<double>(split.vertices.size()));
  CHECK(split.vertices.size() >= 64);
}

TEST_CASE("degree cleaning drops high-degree vertices") {
  const OrderedGraph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const VertexSet all{0, 1, 2, 3, 4, 5};
  CHECK(degree_clean(star, all, 0.2, false) == VertexSet{1, 2, 3, 4, 5});
}

TEST_CASE("union lemma") {
  CHECK(union_levels(0.25) == 3);
  const OrderedGraph e(16);
  const auto out = union_biclique(e, e, 0.25, trivial_oracle, trivial_oracle, false);
  CHECK(out.certificate.in_complement);
  CHECK(is_biclique(e, out.certificate));

  OrderedGraph k(16);
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j) k.add_edge(i, j);
  auto forward = [](const OrderedGraph& sub) {
    VertexSet a, b;
    for (int v = 0; v < sub.size(); ++v) (v < sub.size() / 2 ? a : b).push_back(v);
    return balanced(a, b, false);
  };
  const auto fwd = union_biclique(k, e, 0.25, forward, trivial_oracle);
  CHECK_FALSE(fwd.certificate.in_complement);
  CHECK(is_biclique(k, fwd.certificate));

  auto liar = [](const OrderedGraph&) { return Biclique{{0}, {1}, false}; };
  CHECK_THROWS_AS(union_biclique(e, e, 0.25, liar, trivial_oracle), OracleContractViolation);
}

TEST_CASE("union lemma on grounded half-families") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto fam = gen_crossing_curves(64, 4, 0, seed, 1.0);
    const auto sp = split_at_line(fam, 0);
    std::vector<int> id(64);
    std::iota(id.begin(), id.end(), 0);
    const auto g1 = intersection_graph(sp.left.curves, id);
    const auto g2 = intersection_graph(sp.right.curves, id);
    CurvesOptions opt;
    opt.seed = seed;
    auto o = [&](const OrderedGraph& sub) { return grounded_oracle(sub, opt); };
    const auto out = union_biclique(g1, g2, 0.25, o, o, false);
    if (!out.certificate.empty()) CHECK(is_biclique(graph_union(g1, g2), out.certificate));
  }
}

TEST_CASE("curves pipeline examples") {
  CurveFamily apart{{}, CurveOrdering::RightEndpoint};
  for (int i = 0; i < 9; ++i) apart.curves.push_back(seg(3 * i, 0, 3 * i + 1, 0));
  const auto c2 = curves_ramsey(apart);
  CHECK(c2.case_id == 2);
  CHECK(c2.certificate.in_complement);
  CHECK(c2.certificate.size() == 3);
  CHECK(is_biclique(c2.graph, c2.certificate));

  CurveFamily fan{{}, CurveOrdering::RightEndpoint};
  for (int i = 0; i < 12; ++i) fan.curves.push_back(PolylineCurve({{-1 - i, 0}, {0, 0}, {1 + i, i}}));
  const auto c1 = curves_ramsey(fan);
  CHECK_FALSE(c1.certificate.in_complement);
  CHECK(is_biclique(c1.graph, c1.certificate));
}

TEST_CASE("curves pipeline certificates on random families") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto fam = gen_random_curves(90, 3, seed, 40, 20, 15);
    CurvesOptions opt;
    opt.seed = seed;
    const auto out = curves_ramsey(fam, opt);
    CHECK_FALSE(out.certificate.empty());
    CHECK(is_biclique(out.graph, out.certificate));
  }
}
