#include "ordramsey/magical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ordramsey/curves_ramsey.hpp"

namespace ordramsey {

bool is_bijection(const Ranking& rank, int n) {
  if (static_cast<int>(rank.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int r : rank) {
    if (r < 0 || r >= n || seen[r]) return false;
    seen[r] = 1;
  }
  return true;
}

Ranking identity_ranking(int n) {
  Ranking r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

std::optional<Triple> is_magical(const OrderedGraph& g, const Ranking& rank) {
  const int n = g.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.has_edge(b, c) && !g.has_edge(a, c) && !(rank[b] < rank[a] && rank[b] < rank[c])) {
          return Triple{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

TripleOrderedGraph::TripleOrderedGraph(OrderedGraph g, Ranking rank2, Ranking rank3,
                                       std::optional<MagicalWitness> witness)
    : g_(std::move(g)),
      rank2_(std::move(rank2)),
      rank3_(std::move(rank3)),
      witness_(std::move(witness)) {
  const int n = g_.size();
  if (!is_bijection(rank2_, n)) throw WitnessInvalid("rank2 is not a bijection on 0..n-1");
  if (!is_bijection(rank3_, n)) throw WitnessInvalid("rank3 is not a bijection on 0..n-1");
  if (!witness_) return;
  const auto& w = *witness_;
  if (w.first.size() != n || w.second.size() != n) {
    throw WitnessInvalid("witness graphs have the wrong vertex count");
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g_.has_edge(u, v) != (w.first.has_edge(u, v) && w.second.has_edge(u, v))) {
        throw WitnessInvalid("intersection identity E(G) = E(G1) ∩ E(G2) fails at {" +
                             std::to_string(u) + "," + std::to_string(v) + "}");
      }
    }
  }
  if (auto t = is_magical(w.first, rank2_)) {
    throw WitnessInvalid("first witness is not magical under (<1,<2): triple " + triple_str(*t));
  }
  if (auto t = is_magical(w.second, rank3_)) {
    throw WitnessInvalid("second witness is not magical under (<1,<3): triple " + triple_str(*t));
  }
}

bool is_ihole(Vertex a, Vertex b, Vertex c, const Ranking& rank) {
  return a < b && b < c && rank[b] < rank[a] && rank[b] < rank[c];
}

std::string OrderType::str() const {
  std::string s;
  for (bool p : plus) s.push_back(p ? '+' : '-');
  return s;
}

OrderType OrderType::from_index(int index) {
  return {{(index >> 3 & 1) != 0, (index >> 2 & 1) != 0, (index >> 1 & 1) != 0, (index & 1) != 0}};
}

OrderType order_type(Vertex a, Vertex b, Vertex b2, Vertex c, const Ranking& rank2,
                     const Ranking& rank3) {
  return {{rank2[a] < rank2[b], rank2[b] < rank2[c], rank3[a] < rank3[b2], rank3[b2] < rank3[c]}};
}

bool is_forcing(Vertex a, Vertex b, Vertex b2, Vertex c, const Ranking& rank2,
                const Ranking& rank3) {
  if (!(a < b && b < c && a < b2 && b2 < c)) {
    throw OrderViolation("forcing tuples need a < b < c and a < b' < c");
  }
  const bool by_definition = !is_ihole(a, b, c, rank2) && !is_ihole(a, b2, c, rank3);
  const bool by_type = order_type(a, b, b2, c, rank2, rank3).forcing();
  if (by_definition != by_type) {
    throw std::logic_error("forcing routes disagree on (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(b2) + "," +
                           std::to_string(c) + ")");
  }
  return by_definition;
}

ForcingClaimReport verify_forcing_claim() {
  constexpr int n = 5;
  std::vector<Ranking> perms;
  Ranking p = identity_ranking(n);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  ForcingClaimReport report;
  report.all_contain_forcing = true;
  for (const auto& r2 : perms) {
    for (const auto& r3 : perms) {
      ++report.orderings_checked;
      bool found = false;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex c = a + 2; c < n; ++c) {
          for (Vertex b = a + 1; b < c; ++b) {
            for (Vertex b2 = a + 1; b2 < c; ++b2) {
              ++report.tuples_examined;
              if (is_forcing(a, b, b2, c, r2, r3)) {
                ++report.forcing_tuples;
                found = true;
              }
            }
          }
        }
      }
      if (!found && report.all_contain_forcing) {
        report.all_contain_forcing = false;
        report.first_counterexample = {r2, r3};
      }
    }
  }
  return report;
}

namespace {

Ranking rank_by(const std::vector<Rational>& key) {
  std::vector<int> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return key[l] < key[r]; });
  Ranking rank(key.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

}  // namespace

DoubleMagicalWitness double_magical_witness(const CurveFamily& fam, const Rational& x0) {
  const auto split = split_at_line(fam, x0);
  const int n = fam.size();
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<Rational> left_extent(n), right_extent(n);
  for (int i = 0; i < n; ++i) {
    left_extent[i] = split.left.curves[i].x_max();
    right_extent[i] = split.right.curves[i].x_max();
  }
  MagicalWitness w{complement(intersection_graph(split.left.curves, identity)),
                   complement(intersection_graph(split.right.curves, identity))};
  OrderedGraph g = complement(intersection_graph(fam.curves, split.order));
  return {TripleOrderedGraph(std::move(g), rank_by(left_extent), rank_by(right_extent),
                             std::move(w)),
          split.order};
}

DenseExtraction extract_biclique_dense(const TripleOrderedGraph& tg) {
  const OrderedGraph& g = tg.graph();
  const Ranking& r2 = tg.rank2();
  const Ranking& r3 = tg.rank3();
  const int n = g.size();
  DenseExtraction best;
  best.biclique.in_complement = false;

  struct Bucket {
    long tuples = 0;
    VertexSet a;
    VertexSet c;
  };

  for (Vertex b = 0; b < n; ++b) {
    for (Vertex b2 = 0; b2 < n; ++b2) {
      if (b != b2 && !g.has_edge(b, b2)) continue;
      VertexSet as, cs;
      for (Vertex a = 0; a < std::min(b, b2); ++a) {
        if (g.has_edge(a, b) && g.has_edge(a, b2)) as.push_back(a);
      }
      for (Vertex c = std::max(b, b2) + 1; c < n; ++c) {
        if (g.has_edge(b, c) && g.has_edge(b2, c)) cs.push_back(c);
      }
      if (as.empty() || cs.empty()) continue;

      std::array<Bucket, 16> buckets;
      for (Vertex a : as) {
        for (Vertex c : cs) {
          if (!g.has_edge(a, c) || !is_forcing(a, b, b2, c, r2, r3)) continue;
          auto& bucket = buckets[order_type(a, b, b2, c, r2, r3).index()];
          ++bucket.tuples;
          if (bucket.a.empty() || bucket.a.back() != a) bucket.a.push_back(a);
          bucket.c.push_back(c);
          ++best.forcing_configurations;
        }
      }
      for (int t = 0; t < 16; ++t) {
        auto& bucket = buckets[t];
        if (bucket.tuples == 0) continue;
        bucket.c = normalized(std::move(bucket.c));
        const int potential = static_cast<int>(std::min(bucket.a.size(), bucket.c.size()));
        if (potential < best.biclique.size() ||
            (potential == best.biclique.size() && bucket.tuples <= best.bucket_tuples)) {
          continue;
        }
        Biclique candidate = balanced(bucket.a, bucket.c, false);
        bool complete = true;
        for (Vertex a : bucket.a) {
          for (Vertex c : bucket.c) {
            if (!g.has_edge(a, c)) {
              complete = false;
              break;
            }
          }
          if (!complete) break;
        }
        if (!complete || !is_biclique(g, candidate)) continue;
        const long forcing = best.forcing_configurations;
        best = {std::move(candidate), OrderType::from_index(t), b, b2, bucket.tuples, forcing};
      }
    }
  }
  return best;
}

namespace {

long long pairs_of(long long n) { return n * (n - 1) / 2; }

}  // namespace

ThresholdOutcome threshold_pipeline(const CurveFamily& fam, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw std::invalid_argument("threshold_pipeline: epsilon must lie in (0, 1/2)");
  }
  const int n = fam.size();
  if (n < 2) throw std::invalid_argument("threshold_pipeline needs at least two curves");
  ThresholdOutcome out;
  out.order = family_order({fam.curves, CurveOrdering::RightEndpoint});
  out.graph = intersection_graph(fam.curves, out.order);
  out.density = static_cast<double>(out.graph.edge_count()) / static_cast<double>(pairs_of(n));
  out.edge_budget_ok =
      static_cast<double>(out.graph.edge_count()) <= (0.25 - epsilon) * static_cast<double>(pairs_of(n));
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[out.order[i]] = i;

  auto finish = [&](Biclique cert, std::string stage) {
    if (cert.empty()) {
      cert = trivial_certificate(complement(out.graph));
      cert.in_complement = true;
      stage += "; trivial fallback";
    }
    if (!cert.empty() && !is_biclique(out.graph, cert)) {
      throw std::logic_error("threshold_pipeline: certificate fails on the intersection graph");
    }
    out.certificate = std::move(cert);
    out.stage = std::move(stage);
    return out;
  };

  const int m = std::clamp(static_cast<int>(std::floor(epsilon * n / 2.0)), 1, n - 1);
  const Rational line = separating_line(fam, fam.curves[out.order[m - 1]].x_max(),
                                        fam.curves[out.order[m]].x_max());
  const auto meeting = curves_meeting_line(fam, line);

  if (static_cast<double>(meeting.size()) < (1.0 - epsilon) * n) {
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
  const auto witness = double_magical_witness(crossing, line);
  const auto extraction = extract_biclique_dense(witness.triple);
  out.forcing_configurations = extraction.forcing_configurations;

  Biclique cert{{}, {}, true};
  for (Vertex v : extraction.biclique.a) cert.a.push_back(position[meeting[witness.order[v]]]);
  for (Vertex v : extraction.biclique.b) cert.b.push_back(position[meeting[witness.order[v]]]);
  cert.a = normalized(std::move(cert.a));
  cert.b = normalized(std::move(cert.b));
  return finish(std::move(cert), "case 1: dense extraction, order type " + extraction.type.str());
}

}  // namespace ordramsey
