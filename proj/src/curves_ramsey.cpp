#include "ordramsey/curves_ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ordramsey/matching_engine.hpp"
#include "ordramsey/path_engine.hpp"

namespace ordramsey {

int induced_max_degree(const OrderedGraph& g, std::span<const Vertex> u, bool complement_side) {
  int best = 0;
  for (Vertex a : u) {
    int deg = 0;
    for (Vertex b : u) {
      if (a != b && g.has_edge(a, b) != complement_side) ++deg;
    }
    best = std::max(best, deg);
  }
  return best;
}

VertexSet degree_clean(const OrderedGraph& g, std::span<const Vertex> u0, double eps,
                       bool complement_side) {
  const double limit = 2.0 * eps * static_cast<double>(u0.size());
  VertexSet out;
  for (Vertex a : u0) {
    int deg = 0;
    for (Vertex b : u0) {
      if (a != b && g.has_edge(a, b) != complement_side) ++deg;
    }
    if (deg <= limit) out.push_back(a);
  }
  return normalized(std::move(out));
}

namespace {

VertexSet peel(const OrderedGraph& g, double delta, bool complement_side) {
  const int n = g.size();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = complement_side ? n - 1 - g.degree(v) : g.degree(v);
  int remaining = n;
  while (remaining > 0) {
    Vertex worst = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (worst < 0 || deg[v] > deg[worst])) worst = v;
    }
    if (deg[worst] <= delta * remaining) break;
    alive[worst] = 0;
    --remaining;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && g.has_edge(v, worst) != complement_side) --deg[v];
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

bool within_bound(const OrderedGraph& g, const VertexSet& u, double delta, bool complement_side) {
  return induced_max_degree(g, u, complement_side) <= delta * static_cast<double>(u.size());
}

}  // namespace

DenseSparseSplit sparse_or_dense_subgraph(const OrderedGraph& g, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  const int n = g.size();
  std::vector<DenseSparseSplit> candidates;
  candidates.push_back({peel(g, delta, false), false, "peel"});
  candidates.push_back({peel(g, delta, true), true, "peel"});

  const double eps = delta / 4.0;
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  for (bool side : {false, true}) {
    const double edges = side ? pairs - static_cast<double>(g.edge_count())
                              : static_cast<double>(g.edge_count());
    if (edges <= eps * pairs) {
      VertexSet cleaned = degree_clean(g, all, eps, side);
      if (within_bound(g, cleaned, delta, side)) {
        candidates.push_back({std::move(cleaned), side, "degree-clean"});
      }
    }
  }
  auto best = std::max_element(candidates.begin(), candidates.end(),
                               [](const auto& l, const auto& r) {
                                 return l.vertices.size() < r.vertices.size();
                               });
  if (!within_bound(g, best->vertices, delta, best->complement_side)) {
    throw std::logic_error("sparse_or_dense_subgraph: degree bound failed re-verification");
  }
  return *best;
}

int union_levels(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("union_biclique: c must lie in (0, 1)");
  return 1 + static_cast<int>(std::ceil(std::log2(1.0 / c) - 1e-12));
}

namespace {

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Runs the oracle on g[part] and returns the lifted, verified answer.
Biclique ask(const SubgraphOracle& oracle, const OrderedGraph& g, const VertexSet& part,
             double c, bool strict, const std::string& where) {
  const auto sub = induced_subgraph(g, part);
  Biclique answer = oracle(sub.graph);
  if (answer.empty()) {
    answer.in_complement = true;
  } else if (!is_biclique(sub.graph, answer)) {
    throw OracleContractViolation(where + ": oracle returned an invalid certificate");
  }
  if (strict && answer.in_complement &&
      answer.size() < static_cast<int>(std::floor(c * static_cast<double>(part.size())))) {
    throw OracleContractViolation(where + ": co-bi-clique of size " +
                                  std::to_string(answer.size()) + " below c|U| for |U|=" +
                                  std::to_string(part.size()));
  }
  return lift(answer, sub.to_parent);
}

}  // namespace

UnionOutcome union_biclique(const OrderedGraph& g1, const OrderedGraph& g2, double c,
                            const SubgraphOracle& oracle1, const SubgraphOracle& oracle2,
                            bool strict) {
  if (g1.size() != g2.size()) throw std::invalid_argument("union_biclique: vertex counts differ");
  const OrderedGraph merged = graph_union(g1, g2);
  UnionOutcome out;
  out.levels = union_levels(c);
  out.c_prime = std::pow(c, out.levels + 1) / 2.0;

  auto forward = [&](Biclique b, std::string stage) {
    if (!is_biclique(merged, b)) {
      throw OracleContractViolation(stage + ": forwarded bi-clique fails on g1 ∪ g2");
    }
    out.certificate = std::move(b);
    out.stage = std::move(stage);
    return out;
  };

  VertexSet all(g1.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<VertexSet> parts{all};
  for (int level = 0; level < out.levels; ++level) {
    std::vector<VertexSet> next;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].empty()) {
        next.emplace_back();
        next.emplace_back();
        continue;
      }
      const std::string where = "g1 level " + std::to_string(level) + " part " + std::to_string(j);
      Biclique b = ask(oracle1, g1, parts[j], c, strict, where);
      if (!b.in_complement) return forward(std::move(b), where + ": bi-clique in g1");
      next.push_back(std::move(b.a));
      next.push_back(std::move(b.b));
    }
    parts = std::move(next);
  }

  VertexSet pooled;
  for (const auto& p : parts) pooled.insert(pooled.end(), p.begin(), p.end());
  pooled = normalized(std::move(pooled));
  out.certificate = Biclique{{}, {}, true};
  out.stage = "g2 on pooled parts";
  if (pooled.empty()) return out;

  Biclique b = ask(oracle2, g2, pooled, c, strict, "g2 pooled");
  if (!b.in_complement) return forward(std::move(b), "g2 pooled: bi-clique in g2");

  std::size_t best = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const VertexSet left = intersect(parts[j], b.a);
    if (left.size() <= best) continue;
    for (std::size_t jj = 0; jj < parts.size(); ++jj) {
      if (jj == j) continue;
      VertexSet right = intersect(parts[jj], b.b);
      const std::size_t size = std::min(left.size(), right.size());
      if (size > best) {
        best = size;
        out.certificate = balanced(left, std::move(right), true);
        out.stage = "pigeonhole parts " + std::to_string(j) + "," + std::to_string(jj);
      }
    }
  }
  if (!out.certificate.empty() && !is_biclique(merged, out.certificate)) {
    throw std::logic_error("union_biclique: pigeonhole co-bi-clique fails on g1 ∪ g2");
  }
  return out;
}

Biclique grounded_oracle(const OrderedGraph& sub, const CurvesOptions& options) {
  if (sub.size() < 2) return {{}, {}, true};
  const auto split = sparse_or_dense_subgraph(sub, options.delta);
  const auto part = induced_subgraph(sub, split.vertices);
  if (!split.complement_side) {
    MatchingOptions mo;
    mo.seed = options.seed;
    mo.exhaustive_fallback = true;
    Outcome r = find_matching_or_cobiclique(part.graph, intertwined_matching(), mo);
    if (std::holds_alternative<InducedCopy>(r)) {
      throw std::logic_error("grounded oracle: induced M1 in a y-ordered grounded graph");
    }
    if (auto* cb = std::get_if<CoBiclique>(&r)) return lift(cb->biclique, part.to_parent);
    return greedy_biclique(sub, split.vertices, true);
  }
  Outcome r = find_path_or_cobiclique(complement(part.graph), 4);
  if (std::holds_alternative<InducedCopy>(r)) {
    throw std::logic_error("grounded oracle: induced P4 in the complement of a grounded graph");
  }
  if (auto* cb = std::get_if<CoBiclique>(&r)) {
    Biclique b = lift(cb->biclique, part.to_parent);
    b.in_complement = false;
    return b;
  }
  return greedy_biclique(sub, split.vertices, false);
}

Biclique trivial_certificate(const OrderedGraph& g) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (g.has_edge(u, v)) return {{u}, {v}, false};
    }
  }
  if (g.size() >= 2) return {{0}, {1}, true};
  return {{}, {}, true};
}

Rational separating_line(const CurveFamily& fam, const Rational& a, const Rational& b) {
  const Rational width = b - a;
  for (int denom = 2; denom <= 64; ++denom) {
    for (int num = 1; num < denom; ++num) {
      const Rational x = a + width * ratio(num, denom);
      std::vector<Rational> heights;
      for (int i : curves_meeting_line(fam, x)) heights.push_back(fam.curves[i].y_at(x));
      std::sort(heights.begin(), heights.end());
      if (std::adjacent_find(heights.begin(), heights.end()) == heights.end()) return x;
    }
  }
  throw DuplicateKey(-1, -1, "no separating line without tied crossing heights");
}

CurvesOutcome curves_ramsey(const CurveFamily& fam, const CurvesOptions& options) {
  const int n = fam.size();
  if (n < 2) throw std::invalid_argument("curves_ramsey needs at least two curves");
  CurvesOutcome out;
  out.order = family_order({fam.curves, CurveOrdering::RightEndpoint});
  out.graph = intersection_graph(fam.curves, out.order);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[out.order[i]] = i;

  auto finish = [&](Biclique cert, std::string stage) {
    if (cert.empty()) {
      cert = trivial_certificate(out.graph);
      stage += "; trivial fallback";
    }
    if (!is_biclique(out.graph, cert)) {
      throw std::logic_error("curves_ramsey: certificate fails on the intersection graph");
    }
    out.certificate = std::move(cert);
    out.stage = std::move(stage);
    return out;
  };

  const int m = n / 3;
  if (m == 0) {
    out.case_id = 0;
    return finish({}, "fewer than three curves");
  }
  const Rational line = separating_line(fam, fam.curves[out.order[m - 1]].x_max(),
                                        fam.curves[out.order[m]].x_max());
  const auto meeting = curves_meeting_line(fam, line);

  if (static_cast<int>(meeting.size()) < m) {
    out.case_id = 2;
    std::vector<char> crosses(n, 0);
    for (int i : meeting) crosses[i] = 1;
    VertexSet left, right;
    for (int i = 0; i < m; ++i) left.push_back(i);
    for (int i = m; i < n; ++i) {
      if (!crosses[out.order[i]]) right.push_back(i);
    }
    return finish(balanced(std::move(left), std::move(right), true), "case 2: separated by line");
  }

  out.case_id = 1;
  CurveFamily crossing;
  for (int i : meeting) crossing.curves.push_back(fam.curves[i]);
  const auto split = split_at_line(crossing, line);
  std::vector<int> identity(split.order.size());
  std::iota(identity.begin(), identity.end(), 0);
  const auto g1 = intersection_graph(split.left.curves, identity);
  const auto g2 = intersection_graph(split.right.curves, identity);

  const SubgraphOracle oracle = [&](const OrderedGraph& sub) {
    return grounded_oracle(sub, options);
  };
  const auto result = union_biclique(g1, g2, options.union_c, oracle, oracle, false);

  Biclique cert{{}, {}, result.certificate.in_complement};
  for (Vertex v : result.certificate.a) cert.a.push_back(position[meeting[split.order[v]]]);
  for (Vertex v : result.certificate.b) cert.b.push_back(position[meeting[split.order[v]]]);
  cert.a = normalized(std::move(cert.a));
  cert.b = normalized(std::move(cert.b));
  return finish(std::move(cert), "case 1: " + result.stage);
}

}  // namespace ordramsey
