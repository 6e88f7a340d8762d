#include "ordramsey/path_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace ordramsey {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, Vertex v) { b[v >> 6] |= std::uint64_t{1} << (v & 63); }

bool intersects(std::span<const std::uint64_t> row, const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (row[w] & b[w]) return true;
  }
  return false;
}

VertexSet reach(const OrderedGraph& g, std::span<const Vertex> sources,
                std::span<const Vertex> targets) {
  std::vector<char> is_source(g.size(), 0), is_target(g.size(), 0);
  for (Vertex v : sources) is_source[v] = 1;
  for (Vertex v : targets) is_target[v] = 1;
  Bits active(g.words_per_row(), 0);
  VertexSet reached;
  for (Vertex v = 0; v < g.size(); ++v) {
    bool add = is_source[v] != 0;
    if (is_target[v] && intersects(g.row(v), active)) {
      reached.push_back(v);
      add = true;
    }
    if (add) set_bit(active, v);
  }
  return reached;
}

VertexSet intersect_sorted(const VertexSet& a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet difference_sorted(std::span<const Vertex> a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet first_n(std::span<const Vertex> s, int n) {
  return VertexSet(s.begin(), s.begin() + std::min<std::ptrdiff_t>(n, std::ssize(s)));
}

PreconditionViolation violation(PreconditionViolation::Kind kind, std::string stage,
                                std::string message) {
  return {kind, std::move(stage), std::move(message)};
}

// Splits `s` into consecutive blocks of `block` vertices; the last block
// absorbs the remainder.
std::vector<VertexSet> blocks_of(const VertexSet& s, int count, int block) {
  std::vector<VertexSet> out(count);
  for (int i = 0; i < count; ++i) {
    auto begin = s.begin() + static_cast<std::ptrdiff_t>(i) * block;
    auto end = i + 1 == count ? s.end() : begin + block;
    out[i].assign(begin, end);
  }
  return out;
}

}  // namespace

ReachSet monotone_reach(const OrderedGraph& g, std::span<const Vertex> sources,
                        std::span<const Vertex> targets) {
  check_vertex_set(g, sources);
  check_vertex_set(g, targets);
  ReachSet out;
  out.sources = normalized(VertexSet(sources.begin(), sources.end()));
  out.targets = normalized(VertexSet(targets.begin(), targets.end()));
  out.reached = reach(g, out.sources, out.targets);
  return out;
}

std::optional<int> reach_block_size(int n_param) {
  if (n_param < 2) return std::nullopt;
  const double log_n = std::log2(static_cast<double>(n_param));
  const auto upper = static_cast<long long>(std::floor(n_param / (6.0 * log_n)));
  if (upper < 1) return std::nullopt;
  const int m = static_cast<int>(std::bit_floor(static_cast<unsigned long long>(upper)));
  if (!(m > n_param / (12.0 * log_n))) return std::nullopt;
  return m;
}

Outcome reach_or_cobiclique(const OrderedGraph& g, std::span<const Vertex> sources,
                            std::span<const Vertex> targets, int n_param) {
  const std::string stage = "reach_or_cobiclique";
  check_vertex_set(g, sources);
  check_vertex_set(g, targets);
  const VertexSet s_set = normalized(VertexSet(sources.begin(), sources.end()));
  const VertexSet t_set = normalized(VertexSet(targets.begin(), targets.end()));

  const auto block = reach_block_size(n_param);
  if (!block) {
    return violation(PreconditionViolation::Kind::NoValidM, stage,
                     "no power of two m with n/(12 log2 n) < m <= n/(6 log2 n) for n=" +
                         std::to_string(n_param));
  }
  const int m = *block;
  const int k = std::countr_zero(static_cast<unsigned>(m));
  const double log_n = std::log2(static_cast<double>(n_param));

  if (s_set.empty() || t_set.empty() || s_set.back() >= t_set.front()) {
    return violation(PreconditionViolation::Kind::Precondition, stage, "S < T fails");
  }
  if (static_cast<double>(s_set.size()) * 6.0 * log_n < n_param) {
    return violation(PreconditionViolation::Kind::Precondition, stage,
                     "|S| >= n/(6 log2 n) fails: |S|=" + std::to_string(s_set.size()) +
                         ", n=" + std::to_string(n_param));
  }
  if (static_cast<int>(t_set.size()) < n_param) {
    return violation(PreconditionViolation::Kind::Precondition, stage,
                     "|T| >= n fails: |T|=" + std::to_string(t_set.size()) +
                         ", n=" + std::to_string(n_param));
  }
  const int interval_count = static_cast<int>(t_set.size()) / (3 * m);
  if (interval_count < k + 1) {
    return violation(PreconditionViolation::Kind::NoValidM, stage,
                     "only " + std::to_string(interval_count) + " intervals of size 3m for " +
                         std::to_string(k) + " halving steps");
  }
  // intervals[0] is A_1.
  const auto intervals = blocks_of(t_set, interval_count, 3 * m);

  VertexSet current = first_n(s_set, m);  // S_i
  VertexSet frontier = current;           // X = S_0, then P(S_i,T) ∩ A_i
  for (int i = 0; i < k; ++i) {
    const VertexSet& next_interval = intervals[i];  // A_{i+1}
    const VertexSet nx = intersect_sorted(neighborhood(g, frontier), next_interval);
    if (static_cast<int>(nx.size()) < 2 * m) {
      const VertexSet free = difference_sorted(next_interval, nx);
      std::ostringstream note;
      note << (i == 0 ? "A in S_0" : "A in P(S_i,T)∩A_" + std::to_string(i))
           << ", B in A_" << i + 1 << "\\N(X); halving step " << i;
      return CoBiclique{{first_n(frontier, m), first_n(free, m), true}, note.str()};
    }
    const std::size_t half = current.size() / 2;
    VertexSet lower(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(half));
    VertexSet upper(current.begin() + static_cast<std::ptrdiff_t>(half), current.end());
    VertexSet lower_reach = intersect_sorted(reach(g, lower, t_set), next_interval);
    if (static_cast<int>(lower_reach.size()) >= m) {
      current = std::move(lower);
      frontier = std::move(lower_reach);
    } else {
      VertexSet upper_reach = intersect_sorted(reach(g, upper, t_set), next_interval);
      if (static_cast<int>(upper_reach.size()) < m) {
        throw std::logic_error("reach_or_cobiclique: both halves fall short of m");
      }
      current = std::move(upper);
      frontier = std::move(upper_reach);
    }
  }

  const Vertex v = current.front();
  const Vertex single[] = {v};
  VertexSet reached = reach(g, single, t_set);
  // No edge joins `frontier` (reached, or v itself) to an unreached later target.
  for (int j = k; j < interval_count; ++j) {
    const VertexSet hit = intersect_sorted(reached, intervals[j]);
    if (static_cast<int>(hit.size()) < m) {
      const VertexSet miss = difference_sorted(intervals[j], reached);
      std::ostringstream note;
      note << "A in " << (k == 0 ? "{v}" : "P(v,T)∩A_" + std::to_string(k)) << ", B in A_"
           << j + 1 << "\\P(v,T); sweep";
      return CoBiclique{{first_n(frontier, m), first_n(miss, m), true}, note.str()};
    }
  }
  if (static_cast<long long>(reached.size()) * 12 < n_param) {
    throw std::logic_error("reach_or_cobiclique: far vertex reach below n/12");
  }
  return FarVertex{v, std::move(reached)};
}

std::vector<Vertex> shortest_increasing_path(const OrderedGraph& g, Vertex from, Vertex to,
                                             std::span<const char> allowed) {
  g.check_vertex(from);
  g.check_vertex(to);
  if (to <= from) return {};
  std::vector<Vertex> parent(g.size(), -1);
  std::vector<char> seen(g.size(), 0);
  std::deque<Vertex> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (Vertex w : g.neighbors(u)) {
      if (w <= u || w > to || seen[w] || !allowed[w]) continue;
      seen[w] = 1;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (!seen[to]) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

double path_degree_constant(int k) { return 1.0 / (24.0 * k * k); }

bool path_degree_gate_ok(const OrderedGraph& g, int k) {
  return static_cast<long long>(max_degree(g)) * 24 * k * k < g.size();
}

int path_cobiclique_bound(int n, int k) {
  if (n < 2) return 0;
  return static_cast<int>(std::ceil(n / (24.0 * k * k * std::log2(static_cast<double>(n)))));
}

int path_min_vertices(int k) {
  for (int n = 2 * k;; ++n) {
    if (reach_block_size(n / k) && reach_block_size(n / (2 * k))) return n;
  }
}

Outcome find_path_or_cobiclique(const OrderedGraph& g, int k) {
  if (k < 2) throw std::invalid_argument("find_path_or_cobiclique: k must be at least 2");
  const int n = g.size();
  if (n < 2 * k) {
    return violation(PreconditionViolation::Kind::Precondition, "path", "n < 2k");
  }
  if (!path_degree_gate_ok(g, k)) {
    return violation(PreconditionViolation::Kind::DegreeGate, "path",
                     "max degree " + std::to_string(max_degree(g)) + " >= n/(24k^2) with n=" +
                         std::to_string(n) + ", k=" + std::to_string(k));
  }

  // A_1..A_k, each floor(n/k) with the last absorbing the remainder.
  VertexSet all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  const auto intervals = blocks_of(all, k, n / k);

  std::vector<Vertex> chosen;  // x_1..x_l
  auto partial = [&](int l) {
    std::ostringstream out;
    out << "step l=" << l << ", chosen x=[";
    for (std::size_t i = 0; i < chosen.size(); ++i) out << (i ? "," : "") << chosen[i];
    out << "]";
    return out.str();
  };
  // Annotates a terminal reach outcome with the partial state; false for FarVertex.
  auto terminal = [&](Outcome& r, int l) {
    if (auto* pv = std::get_if<PreconditionViolation>(&r)) {
      pv->stage = "path/" + pv->stage;
      pv->message += "; " + partial(l);
      return true;
    }
    if (auto* cb = std::get_if<CoBiclique>(&r)) {
      cb->note = partial(l) + "; " + cb->note;
      return true;
    }
    return false;
  };

  Outcome first = reach_or_cobiclique(g, intervals[0], intervals[1], n / k);
  if (terminal(first, 1)) return first;
  chosen.push_back(std::get<FarVertex>(first).vertex);

  // allowed_prev = U_l, allowed = U_{l+1}.
  std::vector<char> allowed_prev(n, 1), allowed(n, 1);
  for (int l = 2; l <= k; ++l) {
    const Vertex prev = chosen.back();
    allowed_prev = allowed;
    for (Vertex w : g.neighbors(prev)) allowed[w] = 0;

    VertexSet u_prev;
    for (Vertex v = 0; v < n; ++v) {
      if (allowed_prev[v]) u_prev.push_back(v);
    }
    const Vertex single[] = {prev};
    const VertexSet sources = intersect_sorted(reach(g, single, u_prev), intervals[l - 1]);
    if (sources.empty()) {
      return violation(PreconditionViolation::Kind::Precondition, "path",
                       "P(x_{l-1}, U_l) ∩ A_l is empty; " + partial(l));
    }

    Vertex target = sources.front();
    if (l < k) {
      VertexSet targets;
      for (Vertex v : intervals[l]) {
        if (allowed[v]) targets.push_back(v);
      }
      Outcome step = reach_or_cobiclique(g, sources, targets, n / (2 * k));
      if (terminal(step, l)) return step;
      target = std::get<FarVertex>(step).vertex;
    }

    const auto path = shortest_increasing_path(g, prev, target, allowed_prev);
    if (path.size() < 2) throw std::logic_error("find_path_or_cobiclique: lost the witness path");
    chosen.push_back(path[1]);
  }

  Embedding e{chosen};
  if (!is_induced_embedding(g, monotone_path(k), e)) {
    throw std::logic_error("find_path_or_cobiclique: extracted vertices are not an induced path");
  }
  return InducedCopy{std::move(e)};
}

}  // namespace ordramsey
