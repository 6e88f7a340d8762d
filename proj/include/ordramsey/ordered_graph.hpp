#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordramsey {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simple graph on vertices 0..n-1 whose index order is the vertex order.
// Adjacency is held as a dense bit matrix; rows are also exposed as word
// spans so callers can run set operations 64 vertices at a time.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  explicit OrderedGraph(int n);
  OrderedGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  OrderedGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : OrderedGraph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  int size() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const {
    return ((row_ptr(u)[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  int degree(Vertex v) const { return degree_[v]; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  // Canonical (i < j) edge list in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  VertexSet neighbors(Vertex v) const;

  int words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {row_ptr(v), static_cast<std::size_t>(words_)};
  }

  void check_vertex(Vertex v) const;

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  const std::uint64_t* row_ptr(Vertex v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  std::uint64_t* row_ptr(Vertex v) {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degree_;
};

OrderedGraph complement(const OrderedGraph& g);

int max_degree(const OrderedGraph& g);

// N(U): vertices outside U adjacent to some vertex of U.
VertexSet neighborhood(const OrderedGraph& g, std::span<const Vertex> u);

struct InducedSubgraph {
  OrderedGraph graph;
  VertexSet to_parent;  // strictly increasing; local i is parent to_parent[i]
};

InducedSubgraph induced_subgraph(const OrderedGraph& g, std::span<const Vertex> u);

// Union of edge sets on a shared vertex count.
OrderedGraph graph_union(const OrderedGraph& a, const OrderedGraph& b);

VertexSet normalized(VertexSet s);
void check_vertex_set(const OrderedGraph& g, std::span<const Vertex> s);

}  // namespace ordramsey
