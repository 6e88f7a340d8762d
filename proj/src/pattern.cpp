#include "ordramsey/pattern.hpp"

#include <string>

namespace ordramsey {

Pattern monotone_path(int k) {
  if (k < 1) throw InvalidPattern("monotone path needs at least one vertex");
  Pattern p(k);
  for (Vertex i = 0; i + 1 < k; ++i) p.add_edge(i, i + 1);
  return p;
}

Pattern ordered_matching(std::span<const std::pair<Vertex, Vertex>> pairs) {
  const int n = 2 * static_cast<int>(pairs.size());
  Pattern p(n);
  std::vector<char> used(n, 0);
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw InvalidPattern("matching pair {" + std::to_string(u) + "," + std::to_string(v) +
                           "} is not a pair of distinct vertices in 0.." +
                           std::to_string(n - 1));
    }
    if (used[u] || used[v]) throw InvalidPattern("matching pairs share an endpoint");
    used[u] = used[v] = 1;
    p.add_edge(u, v);
  }
  return p;
}

Pattern intertwined_matching() {
  const std::pair<Vertex, Vertex> pairs[] = {{0, 2}, {1, 3}};
  return ordered_matching(pairs);
}

std::optional<std::vector<std::pair<Vertex, Vertex>>> matching_edges(const Pattern& p) {
  if (p.size() == 0 || p.size() % 2 != 0) return std::nullopt;
  for (Vertex v = 0; v < p.size(); ++v) {
    if (p.degree(v) != 1) return std::nullopt;
  }
  return p.edges();
}

bool is_induced_embedding(const OrderedGraph& host, const Pattern& pattern, const Embedding& e) {
  const int k = pattern.size();
  if (static_cast<int>(e.image.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (e.image[i] < 0 || e.image[i] >= host.size()) return false;
    if (i > 0 && e.image[i - 1] >= e.image[i]) return false;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (pattern.has_edge(i, j) != host.has_edge(e.image[i], e.image[j])) return false;
    }
  }
  return true;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const OrderedGraph& host, const Pattern& pattern)
      : host_(host), pattern_(pattern), image_(pattern.size(), -1) {}

  bool run() { return extend(0, 0); }
  Embedding result() const { return {image_}; }

 private:
  bool extend(int i, Vertex first_candidate) {
    const int k = pattern_.size();
    if (i == k) return true;
    const int last_candidate = host_.size() - (k - i);
    for (Vertex v = first_candidate; v <= last_candidate; ++v) {
      if (host_.degree(v) < pattern_.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = pattern_.has_edge(j, i) == host_.has_edge(image_[j], v);
      }
      if (!ok) continue;
      image_[i] = v;
      if (extend(i + 1, v + 1)) return true;
    }
    image_[i] = -1;
    return false;
  }

  const OrderedGraph& host_;
  const Pattern& pattern_;
  std::vector<Vertex> image_;
};

}  // namespace

std::optional<Embedding> find_induced_embedding(const OrderedGraph& host, const Pattern& pattern) {
  if (pattern.size() > host.size()) return std::nullopt;
  EmbeddingSearch search(host, pattern);
  if (!search.run()) return std::nullopt;
  Embedding e = search.result();
  if (!is_induced_embedding(host, pattern, e)) {
    throw std::logic_error("find_induced_embedding produced an invalid embedding");
  }
  return e;
}

}  // namespace ordramsey
