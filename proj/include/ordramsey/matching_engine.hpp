#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ordramsey/outcome.hpp"
#include "ordramsey/rng.hpp"

namespace ordramsey {

using Edge = std::pair<Vertex, Vertex>;

struct CrossEdges {
  std::vector<Edge> edges;  // first endpoint in A, second in B
};

// Greedy maximal cross matching between A and B (A scanned upward, each
// matched to its lowest free neighbour in B). With at least m edges the first
// m are returned. Otherwise the unmatched vertices span no cross edge and m
// of each side form a co-bi-clique; when fewer than m remain unmatched on a
// side the result is a SizeInfeasible violation.
std::variant<CrossEdges, Biclique, PreconditionViolation> disjoint_edges_or_cobiclique(
    const OrderedGraph& g, std::span<const Vertex> a, std::span<const Vertex> b, int m);

// Per matching edge i = {a_i, b_i} of the pattern, m vertex-disjoint edges
// between intervals A_{a_i} and A_{b_i}.
struct EdgeSystem {
  int k = 0;
  int m = 0;
  std::vector<Edge> pattern_edges;          // (a_i, b_i), a_i < b_i
  std::vector<VertexSet> intervals;         // A_0..A_{2k-1}
  std::vector<std::vector<Edge>> systems;   // E_i, endpoints (in A_{a_i}, in A_{b_i})

  // B_j: endpoints of the system touching interval j.
  VertexSet endpoints(int pattern_vertex) const;
};

// Interval partition: 2k intervals of floor(n/2k), remainder to the last.
std::vector<VertexSet> matching_intervals(int n, int k);

// Edges per system: ceil(floor(n/2k) / 2).
int matching_system_size(int n, int k);

// Degree threshold constant 1 / (8 k^3).
double matching_degree_constant(int k);
bool matching_degree_gate_ok(const OrderedGraph& g, int k);

// Builds the edge systems, or returns the co-bi-clique that blocks one.
std::variant<EdgeSystem, CoBiclique, PreconditionViolation> build_edge_system(
    const OrderedGraph& g, const Pattern& matching);

// Checks the EdgeSystem invariants against g.
bool is_valid_edge_system(const OrderedGraph& g, const EdgeSystem& system);

// One random trial: one uniform edge from each E_i. Returns the embedding
// when the chosen vertices induce the pattern.
std::optional<Embedding> sample_matching(const OrderedGraph& g, const Pattern& matching,
                                         const EdgeSystem& system, SplitMix64& rng);

// Edge density between B_i and B_j for every pattern non-edge {i, j}.
std::vector<double> cross_densities(const OrderedGraph& g, const Pattern& matching,
                                    const EdgeSystem& system);

// Union bound on the per-trial failure probability from actual set sizes:
// sum over pattern non-edges of min(1, max_degree / max(|B_i|, |B_j|)).
double trial_failure_bound(const OrderedGraph& g, const Pattern& matching,
                           const EdgeSystem& system);

// Deterministic search over E_1 x ... x E_k with pairwise pruning.
std::optional<Embedding> exhaustive_matching_search(const OrderedGraph& g,
                                                    const Pattern& matching,
                                                    const EdgeSystem& system);

// 64 k ceil(ln(1/delta)) with delta = 1e-6.
long default_retry_cap(int k);

struct MatchingOptions {
  std::uint64_t seed = 0;
  long retry_cap = 0;  // 0 selects default_retry_cap(k)
  bool exhaustive_fallback = false;  // honoured for k <= 4
};

Outcome find_matching_or_cobiclique(const OrderedGraph& g, const Pattern& matching,
                                    const MatchingOptions& options);

}  // namespace ordramsey
