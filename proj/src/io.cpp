#include "ordramsey/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace ordramsey {

namespace {

std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

long long as_integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path, "expected an integer");
  return v.get<long long>();
}

// Line and column of a byte offset, for parse diagnostics.
std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void graph_problems(const Json& doc, std::vector<std::string>& out) {
  auto report = [&](const std::string& path, const std::string& msg) {
    out.push_back(path + ": " + msg);
  };
  if (!doc.contains("n")) report("/n", "missing");
  if (!doc.contains("edges")) report("/edges", "missing");
  if (!out.empty()) return;
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0) {
    report("/n", "expected a non-negative integer");
    return;
  }
  const long long n = doc["n"].get<long long>();
  if (!doc["edges"].is_array()) {
    report("/edges", "expected an array");
    return;
  }
  std::set<std::pair<long long, long long>> seen;
  for (std::size_t e = 0; e < doc["edges"].size(); ++e) {
    const auto& pair = doc["edges"][e];
    const std::string path = at("/edges", e);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      report(path, "expected [i, j] with integer endpoints");
      continue;
    }
    const long long i = pair[0].get<long long>(), j = pair[1].get<long long>();
    if (i < 0 || j < 0 || i >= n || j >= n) {
      report(path, "endpoint out of range 0.." + std::to_string(n - 1));
    } else if (i == j) {
      report(path, "self-loop [" + std::to_string(i) + "," + std::to_string(j) + "]");
    } else if (i > j) {
      report(path, "pair not canonical (need i < j)");
    } else if (!seen.insert({i, j}).second) {
      report(path, "duplicate edge");
    }
  }
}

void curve_problems(const Json& doc, std::vector<std::string>& out) {
  for (std::size_t c = 0; c < doc.size(); ++c) {
    const std::string base = at("", c);
    const auto& curve = doc[c];
    if (!curve.is_object() || !curve.contains("points") || !curve["points"].is_array()) {
      out.push_back(base + "/points: missing or not an array");
      continue;
    }
    const auto& pts = curve["points"];
    if (pts.size() < 2) out.push_back(base + "/points: a curve needs at least two points");
    std::optional<Rational> prev_x;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      const std::string path = at(base + "/points", p);
      const auto& q = pts[p];
      bool ok = q.is_array() && q.size() == 4;
      for (std::size_t k = 0; ok && k < 4; ++k) ok = q[k].is_number_integer();
      if (!ok) {
        out.push_back(path + ": expected [xnum, xden, ynum, yden] integers");
        prev_x.reset();
        continue;
      }
      if (q[1].get<long long>() == 0 || q[3].get<long long>() == 0) {
        out.push_back(path + ": zero denominator");
        prev_x.reset();
        continue;
      }
      const Rational x = ratio(q[0].get<long>(), q[1].get<long>());
      if (prev_x && !(*prev_x < x)) out.push_back(path + ": x not strictly increasing");
      prev_x = x;
    }
  }
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("", source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                             ": JSON syntax error");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OrderedGraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("", "graph document must be an object");
  std::vector<std::string> problems;
  graph_problems(doc, problems);
  if (!problems.empty()) throw InputError("", problems.front());
  OrderedGraph g(static_cast<int>(doc["n"].get<long long>()));
  for (const auto& e : doc["edges"]) g.add_edge(e[0].get<int>(), e[1].get<int>());
  return g;
}

Json graph_to_json(const OrderedGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  Json doc;
  doc["n"] = g.size();
  doc["edges"] = std::move(edges);
  return doc;
}

CurveFamily curves_from_json(const Json& doc, CurveOrdering ordering) {
  if (!doc.is_array()) throw InputError("", "curve document must be an array");
  std::vector<std::string> problems;
  curve_problems(doc, problems);
  if (!problems.empty()) throw InputError("", problems.front());
  CurveFamily fam;
  fam.ordering = ordering;
  for (const auto& curve : doc) {
    std::vector<Point> pts;
    for (const auto& q : curve["points"]) {
      pts.push_back({ratio(q[0].get<long>(), q[1].get<long>()), ratio(q[2].get<long>(), q[3].get<long>())});
    }
    fam.curves.emplace_back(std::move(pts));
  }
  return fam;
}

Json curves_to_json(const CurveFamily& fam) {
  Json doc = Json::array();
  for (const auto& c : fam.curves) {
    Json pts = Json::array();
    for (const auto& p : c.points()) {
      if (!p.x.get_num().fits_slong_p() || !p.x.get_den().fits_slong_p() ||
          !p.y.get_num().fits_slong_p() || !p.y.get_den().fits_slong_p()) {
        throw std::overflow_error("curve coordinate does not fit in 64 bits");
      }
      pts.push_back({p.x.get_num().get_si(), p.x.get_den().get_si(), p.y.get_num().get_si(),
                     p.y.get_den().get_si()});
    }
    Json curve;
    curve["points"] = std::move(pts);
    doc.push_back(std::move(curve));
  }
  return doc;
}

Json rational_to_json(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw InputError("", "bad rational '" + text + "'");
  if (q.get_den() == 0) throw InputError("", "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Json biclique_to_json(const Biclique& b) {
  Json doc;
  doc["a"] = b.a;
  doc["b"] = b.b;
  doc["in_complement"] = b.in_complement;
  return doc;
}

Biclique biclique_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("a") || !doc.contains("b") || !doc.contains("in_complement")) {
    throw InputError("", "bi-clique needs a, b, in_complement");
  }
  Biclique b;
  for (std::size_t i = 0; i < doc["a"].size(); ++i) b.a.push_back(static_cast<Vertex>(as_integer(doc["a"][i], at("/a", i))));
  for (std::size_t i = 0; i < doc["b"].size(); ++i) b.b.push_back(static_cast<Vertex>(as_integer(doc["b"][i], at("/b", i))));
  b.in_complement = doc["in_complement"].get<bool>();
  return b;
}

Json embedding_to_json(const Embedding& e) {
  Json doc;
  doc["image"] = e.image;
  return doc;
}

Json outcome_to_json(const Outcome& o) {
  Json doc;
  doc["variant"] = variant_name(o);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FarVertex>) {
          doc["vertex"] = v.vertex;
          doc["reached"] = v.reached;
        } else if constexpr (std::is_same_v<T, InducedCopy>) {
          doc["embedding"] = embedding_to_json(v.embedding);
        } else if constexpr (std::is_same_v<T, CoBiclique>) {
          doc["biclique"] = biclique_to_json(v.biclique);
          doc["note"] = v.note;
        } else if constexpr (std::is_same_v<T, PreconditionViolation>) {
          doc["kind"] = kind_name(v.kind);
          doc["stage"] = v.stage;
          doc["message"] = v.message;
        } else {
          doc["seed"] = v.seed;
          doc["trials"] = v.trials;
          doc["cross_densities"] = v.cross_densities;
          doc["failure_bound"] = v.failure_bound;
        }
      },
      o);
  return doc;
}

std::vector<std::string> validate_document(const Json& doc) {
  std::vector<std::string> out;
  if (doc.is_object()) {
    graph_problems(doc, out);
  } else if (doc.is_array()) {
    curve_problems(doc, out);
  } else {
    out.push_back(": expected a graph object or a curve array");
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Json record_to_json(const OutcomeRecord& r) {
  Json doc;
  doc["command"] = r.command;
  doc["input_digest"] = r.input_digest;
  doc["variant"] = r.variant;
  doc["certificate"] = r.certificate;
  doc["sizes"] = r.sizes.is_null() ? Json::object() : r.sizes;
  if (r.elapsed_ms) doc["elapsed_ms"] = *r.elapsed_ms;
  doc["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  doc["version"] = kToolVersion;
  return doc;
}

OutcomeRecord record_from_json(const Json& doc) {
  for (const char* key : {"command", "input_digest", "variant", "certificate", "sizes", "seed", "version"}) {
    if (!doc.contains(key)) throw InputError(std::string("/") + key, "missing");
  }
  OutcomeRecord r;
  r.command = doc["command"].get<std::string>();
  r.input_digest = doc["input_digest"].get<std::string>();
  r.variant = doc["variant"].get<std::string>();
  r.certificate = doc["certificate"];
  r.sizes = doc["sizes"];
  if (!doc["seed"].is_null()) r.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("elapsed_ms")) r.elapsed_ms = doc["elapsed_ms"].get<double>();
  return r;
}

bool certificate_verifies(const Json& certificate, const OrderedGraph& g, const Pattern* pattern) {
  try {
    if (certificate.contains("biclique")) {
      return is_biclique(g, biclique_from_json(certificate["biclique"]));
    }
    if (certificate.contains("embedding")) {
      if (pattern == nullptr) return false;
      Embedding e{certificate["embedding"]["image"].get<std::vector<Vertex>>()};
      return is_induced_embedding(g, *pattern, e);
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace ordramsey
