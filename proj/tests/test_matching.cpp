#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/matching_engine.hpp"
#include "ordramsey/rng.hpp"

using namespace ordramsey;

namespace {

VertexSet range(int lo, int hi) {
  VertexSet s(hi - lo);
  std::iota(s.begin(), s.end(), lo);
  return s;
}

// Perfect matchings between the intervals of every pattern edge, nothing else.
OrderedGraph planted(int n, const Pattern& m) {
  const int k = m.size() / 2;
  const auto iv = matching_intervals(n, k);
  OrderedGraph g(n);
  const auto edges = *matching_edges(m);
  for (const auto& [a, b] : edges) {
    const std::size_t len = std::min(iv[a].size(), iv[b].size());
    for (std::size_t t = 0; t < len; ++t) g.add_edge(iv[a][t], iv[b][t]);
  }
  return g;
}

}  // namespace

TEST_CASE("disjoint edges: complete bipartite") {
  OrderedGraph g(8);
  for (int a = 0; a < 4; ++a)
    for (int b = 4; b < 8; ++b) g.add_edge(a, b);
  const auto a = range(0, 4), b = range(4, 8);
  const auto out = disjoint_edges_or_cobiclique(g, a, b, 4);
  REQUIRE(std::holds_alternative<CrossEdges>(out));
  const auto& e = std::get<CrossEdges>(out).edges;
  CHECK(e.size() == 4);
  std::set<Vertex> used;
  for (const auto& [u, v] : e) {
    CHECK(g.has_edge(u, v));
    CHECK(used.insert(u).second);
    CHECK(used.insert(v).second);
  }
}

TEST_CASE("disjoint edges: no cross edges") {
  const OrderedGraph g(6);
  const auto a = range(0, 3), b = range(3, 6);
  const auto out = disjoint_edges_or_cobiclique(g, a, b, 3);
  REQUIRE(std::holds_alternative<Biclique>(out));
  CHECK(std::get<Biclique>(out) == Biclique{a, b, true});
}

TEST_CASE("disjoint edges: branch consistent with maximum matching") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed);
    OrderedGraph g(24);
    const double p = 0.05 + 0.5 * rng.uniform();
    for (int a = 0; a < 12; ++a)
      for (int b = 12; b < 24; ++b)
        if (rng.bernoulli(p)) g.add_edge(a, b);
    const auto a = range(0, 12), b = range(12, 24);
    const int best = oracle::max_matching(g, a, b);
    const auto out = disjoint_edges_or_cobiclique(g, a, b, 6);
    if (std::holds_alternative<CrossEdges>(out)) {
      CHECK(best >= 6);
    } else if (const auto* bc = std::get_if<Biclique>(&out)) {
      CHECK(is_biclique(g, *bc));
      CHECK(bc->size() == 6);
      // A maximal matching is at least half a maximum one.
      CHECK(best <= 2 * 5);
    } else {
      FAIL("unexpected size violation at |A| = |B| = 2m");
    }
  }
}

TEST_CASE("interval partition and system size") {
  const auto iv = matching_intervals(23, 2);
  REQUIRE(iv.size() == 4);
  CHECK(iv[0] == range(0, 5));
  CHECK(iv[3] == range(15, 23));
  CHECK(matching_system_size(400, 2) == 50);
  CHECK(matching_degree_constant(2) == doctest::Approx(1.0 / 64));
}

TEST_CASE("planted matching is found on the first draw") {
  const auto m1 = intertwined_matching();
  const auto g = planted(400, m1);
  REQUIRE(matching_degree_gate_ok(g, 2));
  const auto sys = build_edge_system(g, m1);
  REQUIRE(std::holds_alternative<EdgeSystem>(sys));
  CHECK(is_valid_edge_system(g, std::get<EdgeSystem>(sys)));
  SplitMix64 rng(1);
  const auto e = sample_matching(g, m1, std::get<EdgeSystem>(sys), rng);
  REQUIRE(e);
  CHECK(is_induced_embedding(g, m1, *e));

  const auto out = find_matching_or_cobiclique(g, m1, {.seed = 3});
  REQUIRE(std::holds_alternative<InducedCopy>(out));
  CHECK(is_induced_embedding(g, m1, std::get<InducedCopy>(out).embedding));
}

TEST_CASE("no edges between the first pattern edge's intervals gives a co-bi-clique") {
  const auto m1 = intertwined_matching();
  const int n = 400, k = 2;
  const auto out = find_matching_or_cobiclique(OrderedGraph(n), m1, {.seed = 1});
  REQUIRE(std::holds_alternative<CoBiclique>(out));
  const auto& b = std::get<CoBiclique>(out).biclique;
  CHECK(is_biclique(OrderedGraph(n), b));
  CHECK(b.size() >= (n + 4 * k - 1) / (4 * k));
}

TEST_CASE("degree gate") {
  const auto g = gen_random_ordered(100, 0.5, 2);
  const auto out = find_matching_or_cobiclique(g, intertwined_matching(), {.seed = 1});
  REQUIRE(std::holds_alternative<PreconditionViolation>(out));
  CHECK(std::get<PreconditionViolation>(out).kind == PreconditionViolation::Kind::DegreeGate);
}

TEST_CASE("identical seeds give identical outcomes") {
  const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 5}, {1, 3}, {2, 4}};
  const auto m = ordered_matching(pairs);
  auto g = planted(2000, m);
  SplitMix64 noise(5);
  for (int t = 0; t < 300; ++t) {
    const auto u = static_cast<Vertex>(noise.below(2000)), v = static_cast<Vertex>(noise.below(2000));
    if (u != v) g.add_edge(u, v);
  }
  REQUIRE(matching_degree_gate_ok(g, 3));
  const auto a = find_matching_or_cobiclique(g, m, {.seed = 11});
  const auto b = find_matching_or_cobiclique(g, m, {.seed = 11});
  REQUIRE(a.index() == b.index());
  if (const auto* c = std::get_if<InducedCopy>(&a)) {
    CHECK(c->embedding.image == std::get<InducedCopy>(b).embedding.image);
    CHECK(is_induced_embedding(g, m, c->embedding));
  }
}

TEST_CASE("exhaustive search agrees with sampling on planted instances") {
  const auto m1 = intertwined_matching();
  const auto g = planted(200, m1);
  const auto sys = std::get<EdgeSystem>(build_edge_system(g, m1));
  const auto e = exhaustive_matching_search(g, m1, sys);
  REQUIRE(e);
  CHECK(is_induced_embedding(g, m1, *e));
}
