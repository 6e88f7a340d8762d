#include "ordramsey/biclique.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace ordramsey {

bool is_biclique(const OrderedGraph& g, const Biclique& b) {
  if (b.a.empty() || b.a.size() != b.b.size()) return false;
  std::vector<char> in_a(g.size(), 0);
  for (Vertex v : b.a) {
    if (v < 0 || v >= g.size() || in_a[v]) return false;
    in_a[v] = 1;
  }
  std::vector<char> in_b(g.size(), 0);
  for (Vertex v : b.b) {
    if (v < 0 || v >= g.size() || in_a[v] || in_b[v]) return false;
    in_b[v] = 1;
  }
  const bool want_edge = !b.in_complement;
  for (Vertex u : b.a) {
    for (Vertex v : b.b) {
      if (g.has_edge(u, v) != want_edge) return false;
    }
  }
  return true;
}

Biclique balanced(VertexSet a, VertexSet b, bool in_complement) {
  a = normalized(std::move(a));
  b = normalized(std::move(b));
  const std::size_t size = std::min(a.size(), b.size());
  a.resize(size);
  b.resize(size);
  return {std::move(a), std::move(b), in_complement};
}

Biclique lift(const Biclique& b, std::span<const Vertex> to_parent) {
  Biclique out{{}, {}, b.in_complement};
  for (Vertex v : b.a) out.a.push_back(to_parent[v]);
  for (Vertex v : b.b) out.b.push_back(to_parent[v]);
  out.a = normalized(std::move(out.a));
  out.b = normalized(std::move(out.b));
  return out;
}

namespace {

using Mask = std::uint64_t;

class BicliqueSearch {
 public:
  BicliqueSearch(const OrderedGraph& g, bool in_complement) : n_(g.size()) {
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    adj_.resize(n_);
    for (Vertex u = 0; u < n_; ++u) {
      Mask row = 0;
      for (Vertex v = 0; v < n_; ++v) {
        if (u != v && g.has_edge(u, v) != in_complement) row |= Mask{1} << v;
      }
      adj_[u] = row & all;
    }
    all_ = all;
  }

  void run() { branch(0, 0, all_, 0); }

  Mask best_a() const { return best_a_; }
  Mask best_common() const { return best_common_; }

 private:
  void branch(Vertex next, Mask a, Mask common, int a_size) {
    const int common_size = std::popcount(common);
    const int value = std::min(a_size, common_size);
    if (value > best_) {
      best_ = value;
      best_a_ = a;
      best_common_ = common;
    }
    if (common_size <= best_) return;
    for (Vertex v = next; v < n_; ++v) {
      if (a_size + 1 + (n_ - v - 1) <= best_) return;
      const Mask next_common = common & adj_[v];
      if (std::popcount(next_common) <= best_) continue;
      branch(v + 1, a | (Mask{1} << v), next_common, a_size + 1);
    }
  }

  int n_;
  Mask all_ = 0;
  std::vector<Mask> adj_;
  int best_ = 0;
  Mask best_a_ = 0;
  Mask best_common_ = 0;
};

VertexSet bits_to_set(std::uint64_t mask, std::size_t limit) {
  VertexSet out;
  while (mask && out.size() < limit) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

Biclique max_biclique_oracle(const OrderedGraph& g, bool in_complement, int n_cap) {
  if (g.size() > n_cap || g.size() > 64) {
    throw InstanceTooLarge("max_biclique_oracle: n=" + std::to_string(g.size()) +
                           " exceeds cap " + std::to_string(std::min(n_cap, 64)));
  }
  BicliqueSearch search(g, in_complement);
  search.run();
  VertexSet a = bits_to_set(search.best_a(), 64);
  VertexSet b = bits_to_set(search.best_common(), a.size());
  a.resize(b.size());
  return {std::move(a), std::move(b), in_complement};
}

Biclique greedy_biclique(const OrderedGraph& g, std::span<const Vertex> within,
                         bool in_complement) {
  VertexSet pool = normalized(VertexSet(within.begin(), within.end()));
  check_vertex_set(g, pool);
  VertexSet a;
  VertexSet common = pool;
  Biclique best{{}, {}, in_complement};
  while (!common.empty()) {
    const Vertex v = common.front();
    VertexSet next;
    for (Vertex w : common) {
      if (w != v && g.has_edge(v, w) != in_complement) next.push_back(w);
    }
    if (next.size() < a.size() + 1) break;
    a.push_back(v);
    common = std::move(next);
    if (static_cast<int>(a.size()) > best.size()) {
      best.a = a;
      best.b.assign(common.begin(), common.begin() + static_cast<std::ptrdiff_t>(a.size()));
    }
  }
  return best;
}

}  // namespace ordramsey
