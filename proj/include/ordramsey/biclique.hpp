#pragma once

#include <span>

#include "ordramsey/ordered_graph.hpp"

namespace ordramsey {

// (A, B) with every cross pair adjacent in the graph, or in its complement
// when in_complement is set. A size-0 value is used as a "none found" sentinel
// and never passes is_biclique.
struct Biclique {
  VertexSet a;
  VertexSet b;
  bool in_complement = false;

  int size() const { return static_cast<int>(a.size()); }
  bool empty() const { return a.empty(); }

  friend bool operator==(const Biclique&, const Biclique&) = default;
};

bool is_biclique(const OrderedGraph& g, const Biclique& b);

// Trims both sides to their first min(|A|, |B|) vertices.
Biclique balanced(VertexSet a, VertexSet b, bool in_complement);

// Maps local indices through `to_parent`.
Biclique lift(const Biclique& b, std::span<const Vertex> to_parent);

inline constexpr int kDefaultOracleCap = 16;

// Exhaustive maximum balanced bi-clique. Branches over the A side in
// increasing index order while tracking the common (non-)neighbourhood as a
// bitmask; B is the first |A| common vertices.
Biclique max_biclique_oracle(const OrderedGraph& g, bool in_complement,
                             int n_cap = kDefaultOracleCap);

// Greedy balanced bi-clique inside `within`: grow A from the lowest vertex
// while the common neighbourhood outside A stays larger than A.
Biclique greedy_biclique(const OrderedGraph& g, std::span<const Vertex> within,
                         bool in_complement);

}  // namespace ordramsey
