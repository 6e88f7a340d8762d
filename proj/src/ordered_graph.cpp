#include "ordramsey/ordered_graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ordramsey {

OrderedGraph::OrderedGraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  degree_.assign(n, 0);
}

OrderedGraph::OrderedGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : OrderedGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void OrderedGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range for n=" +
                          std::to_string(n_));
  }
}

void OrderedGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  row_ptr(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  row_ptr(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
}

void OrderedGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) return;
  row_ptr(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  row_ptr(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  --degree_[u];
  --degree_[v];
  --edge_count_;
}

std::vector<std::pair<Vertex, Vertex>> OrderedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet OrderedGraph::neighbors(Vertex v) const {
  check_vertex(v);
  VertexSet out;
  out.reserve(degree_[v]);
  const auto* r = row_ptr(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

OrderedGraph complement(const OrderedGraph& g) {
  const int n = g.size();
  OrderedGraph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

int max_degree(const OrderedGraph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.size(); ++v) best = std::max(best, g.degree(v));
  return best;
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void check_vertex_set(const OrderedGraph& g, std::span<const Vertex> s) {
  for (Vertex v : s) g.check_vertex(v);
}

VertexSet neighborhood(const OrderedGraph& g, std::span<const Vertex> u) {
  check_vertex_set(g, u);
  std::vector<char> in_u(g.size(), 0), hit(g.size(), 0);
  for (Vertex v : u) in_u[v] = 1;
  for (Vertex v : u) {
    for (Vertex w : g.neighbors(v)) hit[w] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (hit[v] && !in_u[v]) out.push_back(v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const OrderedGraph& g, std::span<const Vertex> u) {
  check_vertex_set(g, u);
  VertexSet keep = normalized(VertexSet(u.begin(), u.end()));
  const int m = static_cast<int>(keep.size());
  OrderedGraph sub(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.has_edge(keep[i], keep[j])) sub.add_edge(i, j);
    }
  }
  return {std::move(sub), std::move(keep)};
}

OrderedGraph graph_union(const OrderedGraph& a, const OrderedGraph& b) {
  if (a.size() != b.size()) throw std::invalid_argument("graph_union: vertex counts differ");
  OrderedGraph out = a;
  for (auto [u, v] : b.edges()) out.add_edge(u, v);
  return out;
}

}  // namespace ordramsey
