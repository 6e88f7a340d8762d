#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordramsey/biclique.hpp"
#include "ordramsey/curves.hpp"

namespace ordramsey {

struct DenseSparseSplit {
  VertexSet vertices;
  bool complement_side = false;  // bound holds in the complement
  std::string method;            // "peel" or "degree-clean"
};

// Drops every vertex of degree > 2 eps |U0| in G[U0] (or in the complement).
VertexSet degree_clean(const OrderedGraph& g, std::span<const Vertex> u0, double eps,
                       bool complement_side);

// Heuristic replacement for the existential step: repeatedly delete a
// maximum-degree vertex of G[U] (and separately of the complement) until
// max degree <= delta |U|, and keep the larger survivor. When the edge count
// of G (or its complement) is already at most (delta/4) C(n,2), degree
// cleaning is tried as well. The returned bound is always re-verified.
DenseSparseSplit sparse_or_dense_subgraph(const OrderedGraph& g, double delta);

// max degree of G[U] (complement_side: of the complement of G[U]).
int induced_max_degree(const OrderedGraph& g, std::span<const Vertex> u, bool complement_side);

class OracleContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Returns a certificate in the indices of the induced subgraph it is given:
// in_complement = false forwards a bi-clique, true is a co-bi-clique.
using SubgraphOracle = std::function<Biclique(const OrderedGraph& sub)>;

struct UnionOutcome {
  Biclique certificate;  // in g1 ∪ g2 (or its complement); may be empty
  int levels = 0;        // k = 1 + ceil(log2(1/c))
  double c_prime = 0.0;  // c^(k+1) / 2
  std::string stage;
};

int union_levels(double c);

// Splits V through k rounds of co-bi-cliques of g1, then takes one
// co-bi-clique of g2 on the union of the parts and pairs it with two parts.
// Oracle answers are verified; an invalid certificate, or (when strict) a
// co-bi-clique smaller than floor(c |U|), raises OracleContractViolation.
UnionOutcome union_biclique(const OrderedGraph& g1, const OrderedGraph& g2, double c,
                            const SubgraphOracle& oracle1, const SubgraphOracle& oracle2,
                            bool strict = true);

struct CurvesOptions {
  double delta = 1.0 / 384.0;  // min(c(M1), c(4)) = min(1/64, 1/384)
  double union_c = 0.25;
  std::uint64_t seed = 0;
};

// Oracle for grounded y-ordered intersection graphs: dense/sparse split, then
// the matching engine with M1 on a sparse part or the path engine with P4 on
// the complement of a dense part; greedy bi-cliques when an engine declines.
Biclique grounded_oracle(const OrderedGraph& sub, const CurvesOptions& options);

struct CurvesOutcome {
  Biclique certificate;   // in the right-endpoint-ordered intersection graph
  int case_id = 0;        // 1: curves meeting the line, 2: separated pair
  std::string stage;
  std::vector<int> order; // order[i]: input curve at vertex i
  OrderedGraph graph;
};

// Returns the trivially available size-1 certificate (an edge, else a non-edge).
Biclique trivial_certificate(const OrderedGraph& g);

CurvesOutcome curves_ramsey(const CurveFamily& fam, const CurvesOptions& options = {});

// A rational strictly between a and b at which no two curves spanning it have
// equal height; tries the midpoint first.
Rational separating_line(const CurveFamily& fam, const Rational& a, const Rational& b);

}  // namespace ordramsey
