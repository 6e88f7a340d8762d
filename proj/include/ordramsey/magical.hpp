#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordramsey/biclique.hpp"
#include "ordramsey/curves.hpp"

namespace ordramsey {

// rank[v] is the position of v in a total order on 0..n-1.
using Ranking = std::vector<int>;

bool is_bijection(const Ranking& rank, int n);
Ranking identity_ranking(int n);

class WitnessInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Triple = std::array<Vertex, 3>;

// First triple a < b < c (lexicographic) with ab, bc edges, ac a non-edge and
// b not below both a and c in `rank`; empty when the graph is magical.
std::optional<Triple> is_magical(const OrderedGraph& g, const Ranking& rank);

struct MagicalWitness {
  OrderedGraph first;   // magical under (<1, <2)
  OrderedGraph second;  // magical under (<1, <3)
};

// Graph with orders <1 (index), <2 (rank2), <3 (rank3). A witness pair, when
// given, must satisfy E(G) = E(first) ∩ E(second) with both parts magical;
// the constructor checks this and throws WitnessInvalid otherwise.
class TripleOrderedGraph {
 public:
  TripleOrderedGraph(OrderedGraph g, Ranking rank2, Ranking rank3,
                     std::optional<MagicalWitness> witness = std::nullopt);

  const OrderedGraph& graph() const { return g_; }
  const Ranking& rank2() const { return rank2_; }
  const Ranking& rank3() const { return rank3_; }
  const std::optional<MagicalWitness>& witness() const { return witness_; }
  int size() const { return g_.size(); }

 private:
  OrderedGraph g_;
  Ranking rank2_;
  Ranking rank3_;
  std::optional<MagicalWitness> witness_;
};

// a < b < c and b below both a and c in `rank`.
bool is_ihole(Vertex a, Vertex b, Vertex c, const Ranking& rank);

// Signs (s1, s2, s3, s4): s1 = [a <2 b], s2 = [b <2 c], s3 = [a <3 b'],
// s4 = [b' <3 c]; true is '+'.
struct OrderType {
  std::array<bool, 4> plus{};

  int index() const { return plus[0] << 3 | plus[1] << 2 | plus[2] << 1 | plus[3]; }
  std::string str() const;
  // Non-forcing exactly when (s1,s2) = (-,+) or (s3,s4) = (-,+).
  bool forcing() const { return !((!plus[0] && plus[1]) || (!plus[2] && plus[3])); }
  static OrderType from_index(int index);

  friend bool operator==(const OrderType&, const OrderType&) = default;
};

OrderType order_type(Vertex a, Vertex b, Vertex b2, Vertex c, const Ranking& rank2,
                     const Ranking& rank3);

// Forcing from the hole definition, cross-checked against the order-type
// characterisation (a disagreement throws std::logic_error). Throws
// OrderViolation unless a < b < c and a < b2 < c.
bool is_forcing(Vertex a, Vertex b, Vertex b2, Vertex c, const Ranking& rank2,
                const Ranking& rank3);

struct ForcingClaimReport {
  long orderings_checked = 0;
  bool all_contain_forcing = false;
  std::optional<std::pair<Ranking, Ranking>> first_counterexample;
  long tuples_examined = 0;
  long forcing_tuples = 0;
};

// Every pair of orders (<2, <3) on {0..4} with <1 fixed to the identity:
// search all (a, b, b', c) with a < b, b' < c for a forcing tuple.
ForcingClaimReport verify_forcing_claim();

struct DoubleMagicalWitness {
  TripleOrderedGraph triple;
  std::vector<int> order;  // order[i]: input curve at vertex i
};

// G = complement of the intersection graph; <1 = height at x0; <2, <3 =
// horizontal extent left / right of x0 (ties by input index); witnesses are
// the disjointness graphs of the two halves.
DoubleMagicalWitness double_magical_witness(const CurveFamily& fam, const Rational& x0);

struct DenseExtraction {
  Biclique biclique;  // in tg.graph(); size 0 when nothing was found
  OrderType type;
  Vertex pivot = -1;
  Vertex pivot2 = -1;
  long bucket_tuples = 0;
  long forcing_configurations = 0;
};

// Enumerates forcing 4-tuples spanning a clique, buckets them by order type
// and pivot pair (b, b'), and returns the largest bi-clique (A, C) a bucket
// certifies.
DenseExtraction extract_biclique_dense(const TripleOrderedGraph& tg);

struct ThresholdOutcome {
  Biclique certificate;  // co-bi-clique in the right-endpoint-ordered graph
  int case_id = 0;
  double density = 0.0;
  bool edge_budget_ok = false;  // |E| <= (1/4 - eps) C(n, 2)
  std::string stage;
  std::vector<int> order;
  OrderedGraph graph;
  long forcing_configurations = 0;
};

ThresholdOutcome threshold_pipeline(const CurveFamily& fam, double epsilon);

}  // namespace ordramsey
