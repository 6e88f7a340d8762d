#include "ordramsey/matching_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ordramsey {

std::variant<CrossEdges, Biclique, PreconditionViolation> disjoint_edges_or_cobiclique(
    const OrderedGraph& g, std::span<const Vertex> a, std::span<const Vertex> b, int m) {
  check_vertex_set(g, a);
  check_vertex_set(g, b);
  const VertexSet left = normalized(VertexSet(a.begin(), a.end()));
  const VertexSet right = normalized(VertexSet(b.begin(), b.end()));
  if (m < 1 || m > static_cast<int>(std::min(left.size(), right.size()))) {
    return PreconditionViolation{PreconditionViolation::Kind::SizeInfeasible, "disjoint_edges",
                                 "m=" + std::to_string(m) + " exceeds min(|A|,|B|)"};
  }
  std::vector<char> right_used(right.size(), 0), left_used(left.size(), 0);
  CrossEdges out;
  for (std::size_t i = 0; i < left.size() && static_cast<int>(out.edges.size()) < m; ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!right_used[j] && g.has_edge(left[i], right[j])) {
        right_used[j] = 1;
        left_used[i] = 1;
        out.edges.emplace_back(left[i], right[j]);
        break;
      }
    }
  }
  if (static_cast<int>(out.edges.size()) >= m) return out;

  VertexSet free_left, free_right;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (!left_used[i]) free_left.push_back(left[i]);
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (!right_used[j]) free_right.push_back(right[j]);
  }
  if (static_cast<int>(std::min(free_left.size(), free_right.size())) < m) {
    std::ostringstream msg;
    msg << "greedy matching has " << out.edges.size() << " < m=" << m
        << " edges but only " << free_left.size() << "/" << free_right.size()
        << " unmatched vertices remain; need min(|A|,|B|) >= 2m-1";
    return PreconditionViolation{PreconditionViolation::Kind::SizeInfeasible, "disjoint_edges",
                                 msg.str()};
  }
  free_left.resize(m);
  free_right.resize(m);
  return Biclique{std::move(free_left), std::move(free_right), true};
}

VertexSet EdgeSystem::endpoints(int pattern_vertex) const {
  VertexSet out;
  for (int i = 0; i < k; ++i) {
    if (pattern_edges[i].first == pattern_vertex) {
      for (const auto& e : systems[i]) out.push_back(e.first);
    } else if (pattern_edges[i].second == pattern_vertex) {
      for (const auto& e : systems[i]) out.push_back(e.second);
    }
  }
  return normalized(std::move(out));
}

std::vector<VertexSet> matching_intervals(int n, int k) {
  const int parts = 2 * k;
  const int width = n / parts;
  std::vector<VertexSet> out(parts);
  for (int j = 0; j < parts; ++j) {
    const int begin = j * width;
    const int end = j + 1 == parts ? n : begin + width;
    for (Vertex v = begin; v < end; ++v) out[j].push_back(v);
  }
  return out;
}

int matching_system_size(int n, int k) { return (n / (2 * k) + 1) / 2; }

double matching_degree_constant(int k) { return 1.0 / (8.0 * k * k * k); }

bool matching_degree_gate_ok(const OrderedGraph& g, int k) {
  return static_cast<long long>(max_degree(g)) * 8 * k * k * k < g.size();
}

namespace {

std::vector<Edge> require_matching(const Pattern& matching) {
  auto edges = matching_edges(matching);
  if (!edges) throw InvalidPattern("pattern is not an ordered matching");
  return *edges;
}

}  // namespace

std::variant<EdgeSystem, CoBiclique, PreconditionViolation> build_edge_system(
    const OrderedGraph& g, const Pattern& matching) {
  EdgeSystem sys;
  sys.pattern_edges = require_matching(matching);
  sys.k = static_cast<int>(sys.pattern_edges.size());
  if (g.size() < 2 * sys.k) {
    return PreconditionViolation{PreconditionViolation::Kind::Precondition, "edge_system",
                                 "n < 2k: intervals would be empty"};
  }
  sys.m = matching_system_size(g.size(), sys.k);
  sys.intervals = matching_intervals(g.size(), sys.k);
  for (int i = 0; i < sys.k; ++i) {
    const auto [pa, pb] = sys.pattern_edges[i];
    auto r = disjoint_edges_or_cobiclique(g, sys.intervals[pa], sys.intervals[pb], sys.m);
    if (auto* cross = std::get_if<CrossEdges>(&r)) {
      sys.systems.push_back(std::move(cross->edges));
    } else if (auto* bc = std::get_if<Biclique>(&r)) {
      return CoBiclique{std::move(*bc), "fewer than m disjoint edges between A_" +
                                            std::to_string(pa) + " and A_" + std::to_string(pb)};
    } else {
      auto pv = std::get<PreconditionViolation>(r);
      pv.stage = "edge_system/" + pv.stage;
      return pv;
    }
  }
  return sys;
}

bool is_valid_edge_system(const OrderedGraph& g, const EdgeSystem& sys) {
  if (static_cast<int>(sys.systems.size()) != sys.k) return false;
  for (int i = 0; i < sys.k; ++i) {
    const auto& es = sys.systems[i];
    if (static_cast<int>(es.size()) != sys.m) return false;
    const auto& ia = sys.intervals[sys.pattern_edges[i].first];
    const auto& ib = sys.intervals[sys.pattern_edges[i].second];
    VertexSet seen;
    for (const auto& [u, v] : es) {
      if (!g.has_edge(u, v)) return false;
      if (!std::binary_search(ia.begin(), ia.end(), u)) return false;
      if (!std::binary_search(ib.begin(), ib.end(), v)) return false;
      seen.push_back(u);
      seen.push_back(v);
    }
    if (normalized(seen).size() != 2 * es.size()) return false;
  }
  for (int j = 0; j < 2 * sys.k; ++j) {
    if (static_cast<int>(sys.endpoints(j).size()) != sys.m) return false;
  }
  return true;
}

std::optional<Embedding> sample_matching(const OrderedGraph& g, const Pattern& matching,
                                         const EdgeSystem& sys, SplitMix64& rng) {
  Embedding e{std::vector<Vertex>(2 * sys.k, -1)};
  for (int i = 0; i < sys.k; ++i) {
    const auto& chosen = sys.systems[i][rng.below(sys.systems[i].size())];
    e.image[sys.pattern_edges[i].first] = chosen.first;
    e.image[sys.pattern_edges[i].second] = chosen.second;
  }
  if (!is_induced_embedding(g, matching, e)) return std::nullopt;
  return e;
}

std::vector<double> cross_densities(const OrderedGraph& g, const Pattern& matching,
                                    const EdgeSystem& sys) {
  std::vector<double> out;
  const int size = 2 * sys.k;
  std::vector<VertexSet> ends(size);
  for (int j = 0; j < size; ++j) ends[j] = sys.endpoints(j);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (matching.has_edge(i, j)) continue;
      long long hits = 0;
      for (Vertex u : ends[i]) {
        for (Vertex v : ends[j]) hits += g.has_edge(u, v) ? 1 : 0;
      }
      const double pairs = static_cast<double>(ends[i].size()) * ends[j].size();
      out.push_back(pairs > 0 ? hits / pairs : 0.0);
    }
  }
  return out;
}

double trial_failure_bound(const OrderedGraph& g, const Pattern& matching,
                           const EdgeSystem& sys) {
  const double delta = max_degree(g);
  const int size = 2 * sys.k;
  double total = 0.0;
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (matching.has_edge(i, j)) continue;
      const double larger =
          static_cast<double>(std::max(sys.endpoints(i).size(), sys.endpoints(j).size()));
      total += std::min(1.0, delta / larger);
    }
  }
  return total;
}

namespace {

class ProductSearch {
 public:
  ProductSearch(const OrderedGraph& g, const Pattern& matching, const EdgeSystem& sys)
      : g_(g), p_(matching), sys_(sys), image_(2 * sys.k, -1) {}

  bool run() { return choose(0); }
  Embedding result() const { return {image_}; }

 private:
  // Pattern vertices fixed so far must stay pairwise non-adjacent unless matched.
  bool compatible(Vertex pv, Vertex hv) const {
    for (int j = 0; j < static_cast<int>(image_.size()); ++j) {
      if (image_[j] < 0 || j == pv) continue;
      if (p_.has_edge(j, pv) != g_.has_edge(image_[j], hv)) return false;
    }
    return true;
  }

  bool choose(int i) {
    if (i == sys_.k) return true;
    const auto [pa, pb] = sys_.pattern_edges[i];
    for (const auto& [u, v] : sys_.systems[i]) {
      if (!compatible(pa, u)) continue;
      image_[pa] = u;
      if (compatible(pb, v)) {
        image_[pb] = v;
        if (choose(i + 1)) return true;
        image_[pb] = -1;
      }
      image_[pa] = -1;
    }
    return false;
  }

  const OrderedGraph& g_;
  const Pattern& p_;
  const EdgeSystem& sys_;
  std::vector<Vertex> image_;
};

}  // namespace

std::optional<Embedding> exhaustive_matching_search(const OrderedGraph& g,
                                                    const Pattern& matching,
                                                    const EdgeSystem& sys) {
  ProductSearch search(g, matching, sys);
  if (!search.run()) return std::nullopt;
  Embedding e = search.result();
  if (!is_induced_embedding(g, matching, e)) {
    throw std::logic_error("exhaustive_matching_search returned a non-induced copy");
  }
  return e;
}

long default_retry_cap(int k) {
  const double delta = 1e-6;
  return 64L * k * static_cast<long>(std::ceil(std::log(1.0 / delta)));
}

Outcome find_matching_or_cobiclique(const OrderedGraph& g, const Pattern& matching,
                                    const MatchingOptions& options) {
  const auto pattern_edges = require_matching(matching);
  const int k = static_cast<int>(pattern_edges.size());
  if (g.size() < 2 * k) {
    return PreconditionViolation{PreconditionViolation::Kind::Precondition, "matching",
                                 "n < 2k"};
  }
  if (!matching_degree_gate_ok(g, k)) {
    return PreconditionViolation{
        PreconditionViolation::Kind::DegreeGate, "matching",
        "max degree " + std::to_string(max_degree(g)) + " >= n/(8k^3) with n=" +
            std::to_string(g.size()) + ", k=" + std::to_string(k)};
  }
  auto built = build_edge_system(g, matching);
  if (auto* cb = std::get_if<CoBiclique>(&built)) return std::move(*cb);
  if (auto* pv = std::get_if<PreconditionViolation>(&built)) return std::move(*pv);
  const auto& sys = std::get<EdgeSystem>(built);
  if (!is_valid_edge_system(g, sys)) throw std::logic_error("edge system invariants violated");

  const long cap = options.retry_cap > 0 ? options.retry_cap : default_retry_cap(k);
  for (long t = 0; t < cap; ++t) {
    SplitMix64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(t)));
    if (auto e = sample_matching(g, matching, sys, rng)) return InducedCopy{std::move(*e)};
  }
  if (options.exhaustive_fallback && k <= 4) {
    if (auto e = exhaustive_matching_search(g, matching, sys)) return InducedCopy{std::move(*e)};
  }
  return RetryExhausted{options.seed, cap, cross_densities(g, matching, sys),
                        trial_failure_bound(g, matching, sys)};
}

}  // namespace ordramsey
