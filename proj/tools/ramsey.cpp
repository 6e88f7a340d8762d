// ramsey: command-line front end. Records go to stdout as JSON lines, a
// one-line human summary per record goes to stderr.
//
// Exit codes: 0 success, 2 no certificate (precondition violation or retry
// budget exhausted), 1 input error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "ordramsey/curves_ramsey.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/io.hpp"
#include "ordramsey/magical.hpp"
#include "ordramsey/matching_engine.hpp"
#include "ordramsey/path_engine.hpp"
#include "ordramsey/rng.hpp"

using namespace ordramsey;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoCertificate = 2;
constexpr int kExitInternal = 3;

struct Result {
  OutcomeRecord record;
  int exit_code = kExitOk;
  std::string summary;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Pattern parse_pattern(const std::string& text) {
  if (text == "M1") return intertwined_matching();
  if (text.size() > 1 && text[0] == 'P') {
    int k = 0;
    try {
      k = std::stoi(text.substr(1));
    } catch (const std::exception&) {
      throw InputError("--pattern", "bad path pattern '" + text + "'");
    }
    return monotone_path(k);
  }
  const std::string prefix = "matching:";
  if (text.rfind(prefix, 0) == 0) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::stringstream ss(text.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) throw InputError("--pattern", "pair '" + item + "' needs i-j");
      pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return ordered_matching(pairs);
  }
  throw InputError("--pattern", "unknown pattern '" + text + "' (use Pk, M1 or matching:i-j,...)");
}

Ranking parse_ranking(const std::string& text, int n, const std::string& flag) {
  Ranking r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      r.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError(flag, "bad rank '" + item + "'");
    }
  }
  if (!is_bijection(r, n)) throw InputError(flag, "not a permutation of 0.." + std::to_string(n - 1));
  return r;
}

CurveOrdering parse_ordering(const std::string& text) {
  if (text == "grounded") return CurveOrdering::GroundedY;
  if (text == "right-endpoint") return CurveOrdering::RightEndpoint;
  if (text == "none") return CurveOrdering::None;
  throw InputError("--order", "expected grounded, right-endpoint or none");
}

struct GraphInput {
  OrderedGraph graph;
  std::string digest;
};

GraphInput load_graph(const std::string& path) {
  const auto text = read_file(path);
  return {graph_from_json(parse_json(text, path)), sha256_hex(text)};
}

struct CurveInput {
  CurveFamily family;
  std::string digest;
};

CurveInput load_curves(const std::string& path, CurveOrdering ordering) {
  const auto text = read_file(path);
  return {curves_from_json(parse_json(text, path), ordering), sha256_hex(text)};
}

// Serialises, parses back and re-checks the certificate; a failure here is a
// bug in the producing algorithm, never an input problem.
Json checked(Json certificate, const OrderedGraph& g, const Pattern* pattern = nullptr) {
  const Json reread = Json::parse(certificate.dump());
  if (!certificate_verifies(reread, g, pattern)) {
    throw std::logic_error("certificate failed re-verification: " + certificate.dump());
  }
  return reread;
}

int certificate_size(const Json& cert) {
  if (cert.contains("biclique")) return static_cast<int>(cert["biclique"]["a"].size());
  if (cert.contains("embedding")) return static_cast<int>(cert["embedding"]["image"].size());
  return 0;
}

// Builds the record for an engine outcome; certificates are verified against
// g (and the pattern for embeddings).
Result outcome_result(const Outcome& o, const OrderedGraph& g, const Pattern* pattern) {
  Result res;
  res.record.variant = variant_name(o);
  Json cert = outcome_to_json(o);
  cert.erase("variant");
  if (std::holds_alternative<InducedCopy>(o) || std::holds_alternative<CoBiclique>(o)) {
    cert = checked(std::move(cert), g, pattern);
  } else if (std::holds_alternative<PreconditionViolation>(o) ||
             std::holds_alternative<RetryExhausted>(o)) {
    res.exit_code = kExitNoCertificate;
  }
  res.record.sizes["n"] = g.size();
  res.record.sizes["edges"] = g.edge_count();
  res.record.sizes["certificate_size"] = certificate_size(cert);
  res.record.certificate = std::move(cert);
  res.summary = std::string(res.record.variant) + ", certificate size " +
                std::to_string(res.record.sizes["certificate_size"].get<int>());
  return res;
}

Result claim_result() {
  const auto report = verify_forcing_claim();
  Result res;
  res.record.variant = report.all_contain_forcing ? "claim_holds" : "claim_fails";
  Json cert;
  cert["orderings_checked"] = report.orderings_checked;
  cert["all_contain_forcing"] = report.all_contain_forcing;
  cert["tuples_examined"] = report.tuples_examined;
  cert["forcing_tuples"] = report.forcing_tuples;
  if (report.first_counterexample) {
    cert["first_counterexample"] = {{"perm2", report.first_counterexample->first},
                                    {"perm3", report.first_counterexample->second}};
  } else {
    cert["first_counterexample"] = nullptr;
  }
  res.record.certificate = std::move(cert);
  res.record.sizes["orderings_checked"] = report.orderings_checked;
  res.record.input_digest = sha256_hex("verify-claim");
  res.summary = std::to_string(report.orderings_checked) + " orderings checked, forcing tuple in every one: " +
                (report.all_contain_forcing ? "yes" : "no");
  return res;
}

// ---- tasks shared by single verbs and batch runs ----

Result run_path(const OrderedGraph& g, int k) {
  const Pattern p = monotone_path(k);
  auto res = outcome_result(find_path_or_cobiclique(g, k), g, &p);
  res.record.sizes["k"] = k;
  res.record.sizes["guaranteed_cobiclique"] = g.size() > 1 ? path_cobiclique_bound(g.size(), k) : 0;
  return res;
}

Result run_matching(const OrderedGraph& g, const Pattern& p, std::uint64_t seed, long retry_cap,
                    bool exhaustive) {
  MatchingOptions opt;
  opt.seed = seed;
  opt.retry_cap = retry_cap;
  opt.exhaustive_fallback = exhaustive;
  auto res = outcome_result(find_matching_or_cobiclique(g, p, opt), g, &p);
  res.record.seed = seed;
  res.record.sizes["k"] = p.size() / 2;
  return res;
}

Result run_curves_ramsey(const CurveFamily& fam, const CurvesOptions& opt) {
  const auto out = curves_ramsey(fam, opt);
  Result res;
  res.record.variant = out.certificate.empty() ? "none" : (out.certificate.in_complement ? "co_biclique" : "biclique");
  Json cert;
  cert["biclique"] = biclique_to_json(out.certificate);
  cert["case"] = out.case_id;
  cert["stage"] = out.stage;
  cert["order"] = out.order;
  cert = checked(std::move(cert), out.graph);
  res.record.sizes["n"] = fam.size();
  res.record.sizes["edges"] = out.graph.edge_count();
  res.record.sizes["certificate_size"] = out.certificate.size();
  res.record.certificate = std::move(cert);
  res.record.seed = opt.seed;
  res.summary = res.record.variant + " of size " + std::to_string(out.certificate.size()) + " (" + out.stage + ")";
  return res;
}

Result run_grounded(const CurveFamily& fam) {
  const auto report = grounded_ordering_properties(fam);
  Result res;
  res.record.variant = report.ok() ? "grounded_ok" : "grounded_witness";
  Json cert;
  cert["m1_witness"] = report.m1_witness ? Json(report.m1_witness->image) : Json(nullptr);
  cert["p4_witness_in_complement"] = report.p4_witness ? Json(report.p4_witness->image) : Json(nullptr);
  res.record.certificate = std::move(cert);
  res.record.sizes["n"] = fam.size();
  res.summary = report.ok() ? "no induced M1, complement has no induced P4"
                            : "WITNESS FOUND against the grounded-curve lemma";
  return res;
}

Result run_threshold(const CurveFamily& fam, double epsilon) {
  const auto out = threshold_pipeline(fam, epsilon);
  Result res;
  res.record.variant = out.certificate.empty() ? "none" : "co_biclique";
  Json cert;
  cert["biclique"] = biclique_to_json(out.certificate);
  cert["case"] = out.case_id;
  cert["stage"] = out.stage;
  cert["order"] = out.order;
  cert = checked(std::move(cert), out.graph);
  res.record.sizes["n"] = fam.size();
  res.record.sizes["edges"] = out.graph.edge_count();
  res.record.sizes["density"] = out.density;
  res.record.sizes["edge_budget_ok"] = out.edge_budget_ok;
  res.record.sizes["forcing_configurations"] = out.forcing_configurations;
  res.record.sizes["certificate_size"] = out.certificate.size();
  res.record.certificate = std::move(cert);
  res.summary = "co-bi-clique of size " + std::to_string(out.certificate.size()) + " (" + out.stage + ")";
  return res;
}

Result run_extract(const CurveFamily& fam, const Rational& line) {
  const auto w = double_magical_witness(fam, line);
  const auto ex = extract_biclique_dense(w.triple);
  Result res;
  res.record.variant = ex.biclique.empty() ? "no_forcing_configurations" : "biclique";
  Json cert;
  cert["biclique"] = biclique_to_json(ex.biclique);
  cert["order_type"] = ex.type.str();
  cert["pivots"] = {ex.pivot, ex.pivot2};
  cert["order"] = w.order;
  if (!ex.biclique.empty()) cert = checked(std::move(cert), w.triple.graph());
  res.record.sizes["n"] = fam.size();
  res.record.sizes["edges"] = w.triple.graph().edge_count();
  res.record.sizes["bucket_tuples"] = ex.bucket_tuples;
  res.record.sizes["forcing_configurations"] = ex.forcing_configurations;
  res.record.sizes["certificate_size"] = ex.biclique.size();
  res.record.certificate = std::move(cert);
  res.summary = "bi-clique of size " + std::to_string(ex.biclique.size()) + " in the complement of the intersection graph";
  return res;
}

Result run_oracle(const OrderedGraph& g, bool in_complement, int cap) {
  const auto b = max_biclique_oracle(g, in_complement, cap);
  Result res;
  res.record.variant = b.empty() ? "none" : (in_complement ? "co_biclique" : "biclique");
  Json cert;
  cert["biclique"] = biclique_to_json(b);
  if (!b.empty()) cert = checked(std::move(cert), g);
  res.record.sizes["n"] = g.size();
  res.record.sizes["certificate_size"] = b.size();
  res.record.certificate = std::move(cert);
  res.summary = "maximum " + res.record.variant + " of size " + std::to_string(b.size());
  return res;
}

// ---- batch ----

GenSpec gen_spec_from_json(const Json& doc, std::uint64_t seed) {
  GenSpec s;
  if (!doc.contains("kind") || !doc.contains("n")) throw InputError("/gen", "needs kind and n");
  s.kind = parse_gen_kind(doc["kind"].get<std::string>());
  s.n = doc["n"].get<int>();
  s.p = doc.value("p", s.p);
  s.epsilon = doc.value("epsilon", s.epsilon);
  s.segments = doc.value("segments", s.segments);
  s.range = doc.value("range", s.range);
  s.jitter = doc.value("jitter", s.jitter);
  s.width = doc.value("width", s.width);
  s.height = doc.value("height", s.height);
  s.max_length = doc.value("max_length", s.max_length);
  if (doc.contains("x0")) s.x0 = parse_rational(doc["x0"].get<std::string>());
  s.seed = seed;
  return s;
}

struct BatchRun {
  std::string task;
  Json gen;
  Json params;
  std::uint64_t seed = 0;
};

Result run_batch_item(const BatchRun& run) {
  const auto spec = gen_spec_from_json(run.gen, run.seed);
  const auto instance = generate(spec);
  const std::string text = std::holds_alternative<OrderedGraph>(instance)
                               ? graph_to_json(std::get<OrderedGraph>(instance)).dump()
                               : curves_to_json(std::get<CurveFamily>(instance)).dump();
  auto need_graph = [&]() -> const OrderedGraph& {
    if (!std::holds_alternative<OrderedGraph>(instance)) throw InputError("/gen", "task '" + run.task + "' needs a graph kind");
    return std::get<OrderedGraph>(instance);
  };
  auto need_curves = [&](CurveOrdering ordering) {
    if (!std::holds_alternative<CurveFamily>(instance)) throw InputError("/gen", "task '" + run.task + "' needs a curve kind");
    CurveFamily fam = std::get<CurveFamily>(instance);
    fam.ordering = ordering;
    return fam;
  };
  const std::uint64_t engine_seed = derive_seed(run.seed, 1);

  Result res;
  if (run.task == "path") {
    res = run_path(need_graph(), run.params.value("k", 4));
  } else if (run.task == "matching") {
    res = run_matching(need_graph(), parse_pattern(run.params.value("pattern", std::string("M1"))),
                       engine_seed, run.params.value("retry_cap", 0L),
                       run.params.value("exhaustive", false));
  } else if (run.task == "grounded") {
    res = run_grounded(need_curves(CurveOrdering::GroundedY));
  } else if (run.task == "curves") {
    CurvesOptions opt;
    opt.seed = engine_seed;
    opt.delta = run.params.value("delta", opt.delta);
    opt.union_c = run.params.value("union_c", opt.union_c);
    res = run_curves_ramsey(need_curves(CurveOrdering::RightEndpoint), opt);
  } else if (run.task == "threshold") {
    res = run_threshold(need_curves(CurveOrdering::RightEndpoint), run.params.value("epsilon", 0.05));
  } else if (run.task == "extract") {
    res = run_extract(need_curves(CurveOrdering::None), spec.x0);
  } else if (run.task == "oracle") {
    res = run_oracle(need_graph(), run.params.value("complement", false), run.params.value("cap", kDefaultOracleCap));
  } else {
    throw InputError("/task", "unknown batch task '" + run.task + "'");
  }
  res.record.command = "batch " + run.task + " --seed " + std::to_string(run.seed);
  res.record.input_digest = sha256_hex(text);
  if (!res.record.seed) res.record.seed = run.seed;
  return res;
}

std::vector<BatchRun> parse_suite(const Json& suite) {
  if (!suite.is_object() || !suite.contains("runs") || !suite["runs"].is_array()) {
    throw InputError("/runs", "suite needs a runs array");
  }
  std::vector<BatchRun> out;
  for (std::size_t i = 0; i < suite["runs"].size(); ++i) {
    const auto& r = suite["runs"][i];
    const std::string path = "/runs/" + std::to_string(i);
    if (!r.contains("task") || !r.contains("gen") || !r.contains("seeds")) {
      throw InputError(path, "run needs task, gen and seeds");
    }
    const auto first = r["seeds"].value("first", std::uint64_t{0});
    const auto count = r["seeds"].value("count", std::uint64_t{1});
    for (std::uint64_t s = first; s < first + count; ++s) {
      out.push_back({r["task"].get<std::string>(), r["gen"], r.value("params", Json::object()), s});
    }
  }
  return out;
}

struct TaskStats {
  long runs = 0;
  long verified = 0;
  std::map<std::string, long> variants;
  long size_sum = 0;
  int size_min = 0;
  int size_max = 0;
};

Json stats_json(const std::map<std::string, TaskStats>& stats) {
  Json out = Json::array();
  for (const auto& [task, s] : stats) {
    Json row;
    row["task"] = task;
    row["runs"] = s.runs;
    row["certified"] = s.verified;
    row["variants"] = Json(s.variants);
    row["size_mean"] = s.runs ? static_cast<double>(s.size_sum) / s.runs : 0.0;
    row["size_min"] = s.size_min;
    row["size_max"] = s.size_max;
    out.push_back(std::move(row));
  }
  return out;
}

void emit(const Result& res, bool timing, double ms) {
  OutcomeRecord rec = res.record;
  if (timing) rec.elapsed_ms = ms;
  std::cout << record_to_json(rec).dump() << '\n';
  if (!res.summary.empty()) std::cerr << rec.command << ": " << res.summary << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified ordered-Ramsey extraction on ordered graphs and x-monotone curves"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "add elapsed_ms to records (records are then not reproducible)");

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  std::string input, curves_path, pattern_text = "M1", out_path, order_text = "right-endpoint";
  std::string perm2_text, perm3_text, witness1, witness2, line_text = "0", kind_text, x0_text = "0";
  std::string format = "json";
  std::uint64_t seed = 0;
  int k = 4, n = 0, segments = 4, cap = kDefaultOracleCap, workers = 1;
  long retry_cap = 0;
  double p = 0.5, epsilon = 0.1, jitter = 2.0, delta = CurvesOptions{}.delta, union_c = CurvesOptions{}.union_c;
  bool exhaustive = false, in_complement = false;

  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--kind", kind_text, "two-clique|four-clique|random-ordered|grounded-curves|crossing-curves|random-curves")->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--p", p);
  gen->add_option("--epsilon", epsilon);
  gen->add_option("--segments", segments);
  gen->add_option("--jitter", jitter);
  gen->add_option("--x0", x0_text, "crossing line for crossing-curves");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out_path, "instance file (stdout when omitted)");

  auto* patterns = app.add_subcommand("patterns", "pattern search");
  patterns->require_subcommand(1);
  auto* pfind = patterns->add_subcommand("find", "induced ordered embedding");
  pfind->add_option("--pattern", pattern_text, "Pk, M1 or matching:i-j,...")->required();
  pfind->add_option("--input", input)->required();

  auto* ramsey = app.add_subcommand("ramsey", "pattern-or-co-bi-clique extraction");
  ramsey->require_subcommand(1);
  auto* rpath = ramsey->add_subcommand("path", "induced monotone path or co-bi-clique");
  rpath->add_option("--input", input)->required();
  rpath->add_option("--k", k);
  auto* path_seed = rpath->add_option("--seed", seed, "recorded only; the extractor is deterministic");
  auto* rmatch = ramsey->add_subcommand("matching", "induced ordered matching or co-bi-clique");
  rmatch->add_option("--input", input)->required();
  rmatch->add_option("--pattern", pattern_text);
  rmatch->add_option("--seed", seed)->required();
  rmatch->add_option("--retry-cap", retry_cap);
  rmatch->add_flag("--exhaustive", exhaustive, "deterministic search when random trials fail (k <= 4)");

  auto* curves = app.add_subcommand("curves", "x-monotone curve families");
  curves->require_subcommand(1);
  auto* cgraph = curves->add_subcommand("graph", "ordered intersection graph");
  cgraph->add_option("--curves", curves_path)->required();
  cgraph->add_option("--order", order_text, "grounded|right-endpoint|none");
  auto* cramsey = curves->add_subcommand("ramsey", "bi-clique or co-bi-clique in the intersection graph");
  cramsey->add_option("--curves", curves_path)->required();
  cramsey->add_option("--seed", seed)->required();
  cramsey->add_option("--delta", delta);
  cramsey->add_option("--union-c", union_c);
  auto* cgrounded = curves->add_subcommand("check-grounded", "grounded-curve lemma on one family");
  cgrounded->add_option("--curves", curves_path)->required();

  auto* magical = app.add_subcommand("magical", "magical graphs and forcing tuples");
  magical->require_subcommand(1);
  auto* mclaim = magical->add_subcommand("verify-claim", "all 14400 triple orderings of 5 elements");
  auto* mcheck = magical->add_subcommand("check", "magicality of a graph under given orders");
  mcheck->add_option("--input", input)->required();
  mcheck->add_option("--perm2", perm2_text, "comma-separated ranks")->required();
  mcheck->add_option("--perm3", perm3_text, "comma-separated ranks")->required();
  mcheck->add_option("--witness1", witness1, "graph magical under (<1,<2)");
  mcheck->add_option("--witness2", witness2, "graph magical under (<1,<3)");
  auto* mextract = magical->add_subcommand("extract", "dense bi-clique extraction from curves crossing a line");
  mextract->add_option("--curves", curves_path)->required();
  mextract->add_option("--line", line_text, "x coordinate, e.g. 0 or 3/2")->required();

  auto* threshold = app.add_subcommand("threshold", "sparse-family co-bi-clique pipeline");
  threshold->require_subcommand(1);
  auto* trun = threshold->add_subcommand("run", "run the pipeline");
  trun->add_option("--curves", curves_path)->required();
  trun->add_option("--epsilon", epsilon)->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive maximum balanced bi-clique");
  oracle->add_option("--input", input)->required();
  oracle->add_flag("--complement", in_complement);
  oracle->add_option("--cap", cap);

  auto* claim = app.add_subcommand("verify-claim", "all 14400 triple orderings of 5 elements");

  std::string suite_path;
  auto* batch = app.add_subcommand("batch", "seeded experiment suite");
  batch->add_option("--spec", suite_path)->required();
  batch->add_option("--workers", workers);
  batch->add_option("--format", format, "stats format: json|tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* validate_cmd = app.add_subcommand("validate", "check a graph or curve file");
  validate_cmd->add_option("--input", input)->required();

  CLI11_PARSE(app, argc, argv);

  Timer timer;
  try {
    Result res;
    if (*gen) {
      GenSpec spec;
      spec.kind = parse_gen_kind(kind_text);
      spec.n = n;
      spec.p = p;
      spec.epsilon = epsilon;
      spec.segments = segments;
      spec.jitter = jitter;
      spec.x0 = parse_rational(x0_text);
      spec.seed = seed;
      const auto instance = generate(spec);
      const std::string doc = std::holds_alternative<OrderedGraph>(instance)
                                  ? graph_to_json(std::get<OrderedGraph>(instance)).dump()
                                  : curves_to_json(std::get<CurveFamily>(instance)).dump();
      if (out_path.empty()) {
        std::cout << doc << '\n';
        return kExitOk;
      }
      std::ofstream out(out_path, std::ios::binary);
      if (!(out << doc << '\n')) throw InputError("--out", "cannot write '" + out_path + "'");
      res.record.variant = "instance";
      res.record.certificate = {{"kind", kind_name(spec.kind)}, {"path", out_path}};
      res.record.sizes["n"] = n;
      if (auto* g = std::get_if<OrderedGraph>(&instance)) res.record.sizes["edges"] = g->edge_count();
      res.record.input_digest = sha256_hex(doc + "\n");
      res.record.seed = seed;
      res.summary = std::string("wrote ") + kind_name(spec.kind) + " instance to " + out_path;
    } else if (*pfind) {
      const auto in = load_graph(input);
      const Pattern pat = parse_pattern(pattern_text);
      const auto e = find_induced_embedding(in.graph, pat);
      res.record.input_digest = in.digest;
      res.record.variant = e ? "induced_copy" : "absent";
      res.record.certificate = e ? checked(Json{{"embedding", embedding_to_json(*e)}}, in.graph, &pat) : Json::object();
      res.record.sizes["n"] = in.graph.size();
      res.record.sizes["pattern_vertices"] = pat.size();
      res.summary = e ? "induced copy found" : "no induced copy";
    } else if (*rpath) {
      const auto in = load_graph(input);
      res = run_path(in.graph, k);
      res.record.input_digest = in.digest;
      if (*path_seed) res.record.seed = seed;
    } else if (*rmatch) {
      const auto in = load_graph(input);
      res = run_matching(in.graph, parse_pattern(pattern_text), seed, retry_cap, exhaustive);
      res.record.input_digest = in.digest;
    } else if (*cgraph) {
      const auto in = load_curves(curves_path, parse_ordering(order_text));
      const auto cg = intersection_graph(in.family);
      res.record.input_digest = in.digest;
      res.record.variant = "graph";
      res.record.certificate = {{"graph", graph_to_json(cg.graph)}, {"order", cg.order}};
      res.record.sizes["n"] = cg.graph.size();
      res.record.sizes["edges"] = cg.graph.edge_count();
      res.summary = std::to_string(cg.graph.edge_count()) + " intersecting pairs";
    } else if (*cramsey) {
      const auto in = load_curves(curves_path, CurveOrdering::RightEndpoint);
      CurvesOptions opt;
      opt.seed = seed;
      opt.delta = delta;
      opt.union_c = union_c;
      res = run_curves_ramsey(in.family, opt);
      res.record.input_digest = in.digest;
    } else if (*cgrounded) {
      const auto in = load_curves(curves_path, CurveOrdering::GroundedY);
      res = run_grounded(in.family);
      res.record.input_digest = in.digest;
    } else if (*mclaim || *claim) {
      res = claim_result();
    } else if (*mcheck) {
      const auto in = load_graph(input);
      const int size = in.graph.size();
      Ranking r2 = parse_ranking(perm2_text, size, "--perm2");
      Ranking r3 = parse_ranking(perm3_text, size, "--perm3");
      std::optional<MagicalWitness> w;
      if (!witness1.empty() || !witness2.empty()) {
        if (witness1.empty() || witness2.empty()) throw InputError("--witness1/--witness2", "give both witnesses");
        w = MagicalWitness{load_graph(witness1).graph, load_graph(witness2).graph};
      }
      auto triple_json = [](const std::optional<Triple>& t) {
        return t ? Json(std::vector<int>(t->begin(), t->end())) : Json(nullptr);
      };
      const auto v2 = is_magical(in.graph, r2);
      const auto v3 = is_magical(in.graph, r3);
      Json cert;
      cert["violation_2"] = triple_json(v2);
      cert["violation_3"] = triple_json(v3);
      std::string witness_status = "absent";
      if (w) {
        try {
          TripleOrderedGraph tg(in.graph, r2, r3, std::move(w));
          witness_status = "valid";
        } catch (const WitnessInvalid& e) {
          witness_status = std::string("invalid: ") + e.what();
        }
      }
      cert["witness"] = witness_status;
      res.record.input_digest = in.digest;
      res.record.variant = "magical_report";
      res.record.certificate = std::move(cert);
      res.record.sizes["n"] = size;
      res.summary = std::string("magical under <2: ") + (v2 ? "no" : "yes") + ", under <3: " + (v3 ? "no" : "yes") +
                    ", witness " + witness_status;
    } else if (*mextract) {
      const auto in = load_curves(curves_path, CurveOrdering::None);
      res = run_extract(in.family, parse_rational(line_text));
      res.record.input_digest = in.digest;
    } else if (*trun) {
      const auto in = load_curves(curves_path, CurveOrdering::RightEndpoint);
      res = run_threshold(in.family, epsilon);
      res.record.input_digest = in.digest;
    } else if (*oracle) {
      const auto in = load_graph(input);
      res = run_oracle(in.graph, in_complement, cap);
      res.record.input_digest = in.digest;
    } else if (*batch) {
      const auto text = read_file(suite_path);
      const auto runs = parse_suite(parse_json(text, suite_path));
      std::vector<Result> results(runs.size());
      std::vector<double> elapsed(runs.size(), 0.0);
      std::vector<std::string> errors(runs.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        for (std::size_t i = next++; i < runs.size(); i = next++) {
          Timer t;
          try {
            results[i] = run_batch_item(runs[i]);
          } catch (const std::exception& e) {
            errors[i] = e.what();
          }
          elapsed[i] = t.ms();
        }
      };
      std::vector<std::thread> pool;
      for (int w = 0; w < std::max(1, workers); ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();

      // Emission in run order keeps the stream independent of scheduling.
      std::map<std::string, TaskStats> stats;
      int exit_code = kExitOk;
      for (std::size_t i = 0; i < runs.size(); ++i) {
        if (!errors[i].empty()) {
          std::cerr << "batch " << runs[i].task << " seed " << runs[i].seed << ": error: " << errors[i] << '\n';
          exit_code = kExitInput;
          continue;
        }
        emit(results[i], timing, elapsed[i]);
        auto& s = stats[runs[i].task];
        const int size = results[i].record.sizes.value("certificate_size", 0);
        if (s.runs == 0 || size < s.size_min) s.size_min = size;
        if (s.runs == 0 || size > s.size_max) s.size_max = size;
        ++s.runs;
        s.size_sum += size;
        ++s.variants[results[i].record.variant];
        if (results[i].exit_code == kExitOk) ++s.verified;
      }
      const Json table = stats_json(stats);
      if (format == "json") {
        std::cout << Json{{"stats", table}}.dump() << '\n';
      } else {
        std::cout << "task\truns\tcertified\tsize_mean\tsize_min\tsize_max\n";
        for (const auto& row : table) {
          std::cout << row["task"].get<std::string>() << '\t' << row["runs"] << '\t' << row["certified"] << '\t'
                    << row["size_mean"] << '\t' << row["size_min"] << '\t' << row["size_max"] << '\n';
        }
      }
      return exit_code;
    } else if (*validate_cmd) {
      const auto text = read_file(input);
      const auto problems = validate_document(parse_json(text, input));
      for (const auto& msg : problems) std::cerr << input << msg << '\n';
      res.record.input_digest = sha256_hex(text);
      res.record.variant = problems.empty() ? "valid" : "invalid";
      res.record.certificate = {{"diagnostics", problems}};
      res.summary = problems.empty() ? "valid" : std::to_string(problems.size()) + " problem(s)";
      res.exit_code = problems.empty() ? kExitOk : kExitInput;
    }
    res.record.command = command;
    emit(res, timing, timer.ms());
    return res.exit_code;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidGenSpec& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidCurve& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DuplicateKey& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CurveMissesLine& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidPattern& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
