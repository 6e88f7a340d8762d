#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordramsey/generators.hpp"
#include "ordramsey/io.hpp"

using namespace ordramsey;

namespace {

bool mentions(const std::vector<std::string>& problems, const std::string& needle) {
  for (const auto& p : problems)
    if (p.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("graph validation diagnostics") {
  CHECK(mentions(validate_document(Json::parse(R"({"n": 3, "edges": [[2, 2]]})")), "self-loop"));
  CHECK(mentions(validate_document(Json::parse(R"({"n": 3, "edges": [[2, 1]]})")), "/edges/0"));
  CHECK(mentions(validate_document(Json::parse(R"({"n": 3, "edges": [[0, 3]]})")), "out of range"));
  CHECK(mentions(validate_document(Json::parse(R"({"n": 3, "edges": [[0, 1], [0, 1]]})")), "duplicate"));
  CHECK(mentions(validate_document(Json::parse(R"({"edges": []})")), "/n"));
  CHECK(validate_document(Json::parse(R"({"n": 3, "edges": [[0, 1], [1, 2]]})")).empty());
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[2, 2]]})")), InputError);
}

TEST_CASE("curve validation diagnostics") {
  const auto flat = validate_document(Json::parse(R"([{"points": [[0,1,0,1],[0,1,3,1]]}])"));
  CHECK(mentions(flat, "/0/points/1"));
  CHECK(mentions(flat, "strictly increasing"));
  CHECK(mentions(validate_document(Json::parse(R"([{"points": [[0,1,0,1],[1,0,3,1]]}])")), "zero denominator"));
  CHECK(mentions(validate_document(Json::parse(R"([{"points": [[0,1,0,1]]}])")), "two points"));
  // 1/2 then 2/4 is not an increase.
  CHECK(mentions(validate_document(Json::parse(R"([{"points": [[1,2,0,1],[2,4,1,1]]}])")), "strictly"));
  CHECK(validate_document(Json::parse(R"([{"points": [[1,2,0,1],[3,4,1,1]]}])")).empty());
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_json("{\n  \"n\": 3,\n  \"edges\": [[0, 1],\n}", "g.json");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("g.json:4:") != std::string::npos);
  }
}

TEST_CASE("generated fixtures validate and round-trip") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_random_ordered(15, 0.3, seed);
    const auto gj = graph_to_json(g);
    CHECK(validate_document(gj).empty());
    CHECK(graph_from_json(gj) == g);

    const auto fam = gen_grounded_curves(6, 3, seed);
    const auto cj = curves_to_json(fam);
    CHECK(validate_document(cj).empty());
    const auto back = curves_from_json(cj, CurveOrdering::GroundedY);
    CHECK(curves_to_json(back) == cj);
    CHECK(intersection_graph(back).graph == intersection_graph(fam).graph);
  }
}

TEST_CASE("rationals") {
  CHECK(parse_rational("6/4") == ratio(3, 2));
  CHECK(rational_to_json(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("digest") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("records keep field order and certificates re-verify") {
  const OrderedGraph g(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  OutcomeRecord r{"ramsey path", sha256_hex("x"), "CoBiclique",
                  Json{{"biclique", biclique_to_json({{0, 1}, {2, 3}, false})}}, Json{{"a", 2}}, 7, std::nullopt};
  const auto doc = record_to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "input_digest", "variant", "certificate", "sizes", "seed", "version"});
  const auto back = record_from_json(Json::parse(doc.dump()));
  CHECK(back.seed == 7u);
  CHECK(record_to_json(back).dump() == doc.dump());
  CHECK(certificate_verifies(back.certificate, g));
  CHECK_FALSE(certificate_verifies(back.certificate, OrderedGraph(4)));

  const auto p3 = monotone_path(3);
  const Json emb{{"embedding", embedding_to_json({{0, 2, 1}})}};
  CHECK_FALSE(certificate_verifies(emb, g, &p3));
  CHECK_FALSE(certificate_verifies(emb, g));
}
