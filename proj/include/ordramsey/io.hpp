#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ordramsey/biclique.hpp"
#include "ordramsey/curves.hpp"
#include "ordramsey/outcome.hpp"
#include "ordramsey/pattern.hpp"

namespace ordramsey {

// Insertion-ordered so records serialise with a stable field order.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Malformed input; `path` is a JSON pointer style location ("/edges/3/1").
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path(std::move(path)) {}
  std::string path;
};

// Parses text; syntax errors report line and column.
Json parse_json(std::string_view text, const std::string& source = "<input>");
std::string read_file(const std::string& path);

// {"n": int, "edges": [[i, j], ...]}, 0 <= i < j < n, no duplicates.
OrderedGraph graph_from_json(const Json& doc);
Json graph_to_json(const OrderedGraph& g);

// [{"points": [[xnum, xden, ynum, yden], ...]}, ...]; at least two points per
// curve, nonzero denominators, x strictly increasing.
CurveFamily curves_from_json(const Json& doc, CurveOrdering ordering);
Json curves_to_json(const CurveFamily& fam);

Json rational_to_json(const Rational& q);  // "num/den" string
Rational parse_rational(const std::string& text);

Json biclique_to_json(const Biclique& b);
Biclique biclique_from_json(const Json& doc);
Json embedding_to_json(const Embedding& e);

// Outcome variant as {"variant": ..., fields...}.
Json outcome_to_json(const Outcome& o);

// Every format violation in a graph or curve document, one line per problem
// ("<path>: <message>"). Empty when the document is valid. The kind is
// inferred: objects are graphs, arrays are curve families.
std::vector<std::string> validate_document(const Json& doc);

std::string sha256_hex(std::string_view data);

struct OutcomeRecord {
  std::string command;
  std::string input_digest;
  std::string variant;
  Json certificate;
  Json sizes;
  std::optional<std::uint64_t> seed;
  std::optional<double> elapsed_ms;
};

// Field order: command, input_digest, variant, certificate, sizes,
// [elapsed_ms], seed, version.
Json record_to_json(const OutcomeRecord& r);
OutcomeRecord record_from_json(const Json& doc);

// Re-checks a serialised certificate against g. Bi-cliques go through
// is_biclique; embeddings through is_induced_embedding (pattern required).
bool certificate_verifies(const Json& certificate, const OrderedGraph& g,
                          const Pattern* pattern = nullptr);

}  // namespace ordramsey
