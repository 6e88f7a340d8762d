#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordramsey/ordered_graph.hpp"

namespace ordramsey {

// Patterns are ordinary ordered graphs used as induced-subgraph targets.
using Pattern = OrderedGraph;

class InvalidPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Monotone path on k vertices (k counts vertices, not edges).
Pattern monotone_path(int k);

// Ordered matching on 2k vertices from k pairwise disjoint pairs.
Pattern ordered_matching(std::span<const std::pair<Vertex, Vertex>> pairs);

// The intertwined matching {0,2},{1,3}.
Pattern intertwined_matching();

// Returns the matching edges (a < b) if every vertex has degree exactly one.
std::optional<std::vector<std::pair<Vertex, Vertex>>> matching_edges(const Pattern& p);

// image[i] is the host vertex of pattern vertex i.
struct Embedding {
  std::vector<Vertex> image;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Order-preserving and induced: strictly increasing images, and pattern
// adjacency matches host adjacency on every pair.
bool is_induced_embedding(const OrderedGraph& host, const Pattern& pattern, const Embedding& e);

// Order-respecting backtracking. Candidates for pattern vertex i are host
// vertices after the previous image with enough room left for the remaining
// pattern vertices and degree at least the pattern degree.
std::optional<Embedding> find_induced_embedding(const OrderedGraph& host, const Pattern& pattern);

inline bool contains_induced(const OrderedGraph& host, const Pattern& pattern) {
  return find_induced_embedding(host, pattern).has_value();
}

}  // namespace ordramsey
