#pragma once

#include <optional>
#include <span>

#include "ordramsey/ordered_graph.hpp"
#include "ordramsey/outcome.hpp"

namespace ordramsey {

// P(S, T): the vertices of T reachable from some s in S by a strictly
// increasing path whose vertices after s all lie in T.
struct ReachSet {
  VertexSet sources;
  VertexSet targets;
  VertexSet reached;
};

ReachSet monotone_reach(const OrderedGraph& g, std::span<const Vertex> sources,
                        std::span<const Vertex> targets);

// Largest power of two m <= floor(n / (6 log2 n)), provided that
// m > n / (12 log2 n). Empty when that window holds no power of two.
std::optional<int> reach_block_size(int n_param);

// Either a source vertex v with |P(v, T)| >= ceil(n_param / 12), or a
// co-bi-clique of size m = reach_block_size(n_param). Requires S < T,
// |S| >= n_param / (6 log2 n_param) and |T| >= n_param.
Outcome reach_or_cobiclique(const OrderedGraph& g, std::span<const Vertex> sources,
                            std::span<const Vertex> targets, int n_param);

// Shortest strictly increasing path from `from` to `to` whose vertices after
// `from` all lie in `allowed`. Empty if none exists.
std::vector<Vertex> shortest_increasing_path(const OrderedGraph& g, Vertex from, Vertex to,
                                             std::span<const char> allowed);

// Degree threshold constant for the monotone path extractor: 1 / (24 k^2).
double path_degree_constant(int k);

// True when max_degree(g) < n / (24 k^2).
bool path_degree_gate_ok(const OrderedGraph& g, int k);

// Guaranteed co-bi-clique size for the path extractor: ceil(n / (24 k^2 log2 n)).
int path_cobiclique_bound(int n, int k);

// Smallest n for which every reach step of find_path_or_cobiclique has a valid
// block size. Graphs below this size always report NoValidM.
int path_min_vertices(int k);

// Induced monotone P_k or a co-bi-clique of size >= path_cobiclique_bound.
// Reports a degree-gate violation when max degree >= n / (24 k^2).
Outcome find_path_or_cobiclique(const OrderedGraph& g, int k);

}  // namespace ordramsey
