#pragma once

// Brute-force reference implementations. None of these call the library's
// search routines; they only read adjacency through has_edge().

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ordramsey/curves.hpp"
#include "ordramsey/ordered_graph.hpp"

namespace oracle {

using ordramsey::OrderedGraph;
using ordramsey::Vertex;

// First (lexicographic) increasing k-subset inducing h, by enumerating every
// subset of size h.size().
inline std::optional<std::vector<Vertex>> embedding(const OrderedGraph& g, const OrderedGraph& h) {
  const int n = g.size(), k = h.size();
  if (k > n) return std::nullopt;
  if (k == 0) return std::vector<Vertex>{};
  std::vector<Vertex> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k && ok; ++j) ok = g.has_edge(pick[i], pick[j]) == h.has_edge(i, j);
    }
    if (ok) return pick;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline bool adjacent(const OrderedGraph& g, Vertex u, Vertex v, bool in_complement) {
  return u != v && g.has_edge(u, v) != in_complement;
}

// Largest balanced bi-clique: for every subset A, the common neighbourhood
// outside A bounds |B|.
inline int max_biclique_size(const OrderedGraph& g, bool in_complement) {
  const int n = g.size();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int a = std::popcount(mask);
    if (a <= best) continue;
    int common = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) continue;
      bool all = true;
      for (Vertex u = 0; u < n && all; ++u) {
        if (mask >> u & 1) all = adjacent(g, u, v, in_complement);
      }
      common += all;
    }
    best = std::max(best, std::min(a, common));
  }
  return best;
}

// Vertices of T reachable from S by a strictly increasing path whose
// vertices after the start lie in T: explicit DFS over all such paths.
inline std::vector<Vertex> reach(const OrderedGraph& g, const std::vector<Vertex>& s,
                                 const std::vector<Vertex>& t) {
  std::vector<char> in_t(g.size(), 0), hit(g.size(), 0);
  for (Vertex v : t) in_t[v] = 1;
  std::function<void(Vertex)> walk = [&](Vertex u) {
    for (Vertex w = u + 1; w < g.size(); ++w) {
      if (in_t[w] && g.has_edge(u, w)) {
        hit[w] = 1;
        walk(w);
      }
    }
  };
  for (Vertex v : s) walk(v);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (hit[v]) out.push_back(v);
  }
  return out;
}

// Kuhn's augmenting-path maximum matching between a and b.
inline int max_matching(const OrderedGraph& g, const std::vector<Vertex>& a,
                        const std::vector<Vertex>& b) {
  std::vector<int> match_b(b.size(), -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (seen[j] || !g.has_edge(a[i], b[j])) continue;
      seen[j] = 1;
      if (match_b[j] < 0 || augment(match_b[j], seen)) {
        match_b[j] = i;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<char> seen(b.size(), 0);
    size += augment(static_cast<int>(i), seen);
  }
  return size;
}

// ---- geometry: closed segments, orientation predicates ----

using ordramsey::Point;
using ordramsey::Rational;

inline int orient(const Point& p, const Point& q, const Point& r) {
  return sgn(Rational((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)));
}

inline bool on_segment(const Point& p, const Point& q, const Point& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

inline bool segments_meet(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
  const int d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

// All segment pairs, no pruning. Single-point curves are degenerate segments.
inline bool curves_meet(const ordramsey::PolylineCurve& a, const ordramsey::PolylineCurve& b) {
  const auto& pa = a.points();
  const auto& pb = b.points();
  const std::size_t sa = std::max<std::size_t>(1, pa.size() - 1);
  const std::size_t sb = std::max<std::size_t>(1, pb.size() - 1);
  for (std::size_t i = 0; i < sa; ++i) {
    for (std::size_t j = 0; j < sb; ++j) {
      const auto& a2 = pa.size() > 1 ? pa[i + 1] : pa[i];
      const auto& b2 = pb.size() > 1 ? pb[j + 1] : pb[j];
      if (segments_meet(pa[i], a2, pb[j], b2)) return true;
    }
  }
  return false;
}

}  // namespace oracle
