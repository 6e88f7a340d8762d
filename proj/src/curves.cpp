#include "ordramsey/curves.hpp"

#include <algorithm>
#include <numeric>

namespace ordramsey {

PolylineCurve::PolylineCurve(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidCurve("curve has no points");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].x < points_[i].x)) {
      throw InvalidCurve("x is not strictly increasing at point " + std::to_string(i));
    }
  }
  y_min_ = y_max_ = points_.front().y;
  for (const auto& p : points_) {
    if (p.y < y_min_) y_min_ = p.y;
    if (p.y > y_max_) y_max_ = p.y;
  }
}

Rational PolylineCurve::y_at(const Rational& x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Point& p, const Rational& v) { return p.x < v; });
  if (it == points_.end()) throw std::out_of_range("y_at: x beyond curve");
  if (it->x == x) return it->y;
  if (it == points_.begin()) throw std::out_of_range("y_at: x before curve");
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

const char* ordering_name(CurveOrdering o) {
  switch (o) {
    case CurveOrdering::GroundedY: return "grounded-y-order";
    case CurveOrdering::RightEndpoint: return "right-endpoint-order";
    case CurveOrdering::None: return "none";
  }
  return "none";
}

bool curves_intersect(const PolylineCurve& a, const PolylineCurve& b) {
  if (a.y_max() < b.y_min() || b.y_max() < a.y_min()) return false;
  const Rational& lo = a.x_min() > b.x_min() ? a.x_min() : b.x_min();
  const Rational& hi = a.x_max() < b.x_max() ? a.x_max() : b.x_max();
  if (lo > hi) return false;

  std::vector<Rational> xs{lo, hi};
  for (const auto* c : {&a, &b}) {
    for (const auto& p : c->points()) {
      if (lo < p.x && p.x < hi) xs.push_back(p.x);
    }
  }
  // The height difference is linear between consecutive breakpoints, so a
  // zero exists on [lo, hi] iff it vanishes or changes sign at a breakpoint.
  bool pos = false, neg = false;
  for (const auto& x : xs) {
    const int s = sgn(Rational(a.y_at(x) - b.y_at(x)));
    if (s == 0) return true;
    (s > 0 ? pos : neg) = true;
    if (pos && neg) return true;
  }
  return false;
}

std::vector<int> family_order(const CurveFamily& fam) {
  std::vector<int> order(fam.curves.size());
  std::iota(order.begin(), order.end(), 0);
  if (fam.ordering == CurveOrdering::None) return order;

  std::vector<Rational> key(fam.curves.size());
  for (std::size_t i = 0; i < fam.curves.size(); ++i) {
    const auto& c = fam.curves[i];
    if (fam.ordering == CurveOrdering::GroundedY) {
      if (!c.is_grounded()) {
        throw InvalidCurve("curve " + std::to_string(i) + " is not grounded at x = 0");
      }
      key[i] = c.points().front().y;
    } else {
      key[i] = c.x_max();
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return key[l] < key[r]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (key[order[i - 1]] == key[order[i]]) {
      throw DuplicateKey(order[i - 1], order[i],
                         "curves " + std::to_string(order[i - 1]) + " and " +
                             std::to_string(order[i]) + " tie on the " +
                             ordering_name(fam.ordering) + " key");
    }
  }
  return order;
}

OrderedGraph intersection_graph(const std::vector<PolylineCurve>& curves,
                                const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  OrderedGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (curves_intersect(curves[order[i]], curves[order[j]])) g.add_edge(i, j);
    }
  }
  return g;
}

CurveGraph intersection_graph(const CurveFamily& fam) {
  auto order = family_order(fam);
  auto g = intersection_graph(fam.curves, order);
  return {std::move(g), std::move(order)};
}

GroundedReport grounded_ordering_properties(const CurveFamily& fam) {
  CurveFamily grounded{fam.curves, CurveOrdering::GroundedY};
  const auto cg = intersection_graph(grounded);
  GroundedReport report;
  report.m1_witness = find_induced_embedding(cg.graph, intertwined_matching());
  report.p4_witness = find_induced_embedding(complement(cg.graph), monotone_path(4));
  return report;
}

std::vector<int> curves_meeting_line(const CurveFamily& fam, const Rational& x0) {
  std::vector<int> out;
  for (int i = 0; i < fam.size(); ++i) {
    if (fam.curves[i].spans(x0)) out.push_back(i);
  }
  return out;
}

LineSplit split_at_line(const CurveFamily& fam, const Rational& x0) {
  const int n = fam.size();
  std::vector<Rational> height(n);
  for (int i = 0; i < n; ++i) {
    const auto& c = fam.curves[i];
    if (!c.spans(x0)) {
      throw CurveMissesLine(i, "curve " + std::to_string(i) + " does not meet x = " +
                                   x0.get_str());
    }
    height[i] = c.y_at(x0);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int l, int r) { return height[l] < height[r]; });
  for (int i = 1; i < n; ++i) {
    if (height[order[i - 1]] == height[order[i]]) {
      throw DuplicateKey(order[i - 1], order[i],
                         "curves " + std::to_string(order[i - 1]) + " and " +
                             std::to_string(order[i]) + " cross x = " + x0.get_str() +
                             " at the same height");
    }
  }

  LineSplit out;
  out.line = x0;
  out.order = order;
  out.left.ordering = out.right.ordering = CurveOrdering::GroundedY;
  for (int idx : order) {
    const auto& pts = fam.curves[idx].points();
    const Point cut{x0, height[idx]};
    std::vector<Point> left{{Rational(0), cut.y}};
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
      if (it->x < x0) left.push_back({x0 - it->x, it->y});
    }
    std::vector<Point> right{{Rational(0), cut.y}};
    for (const auto& p : pts) {
      if (p.x > x0) right.push_back({p.x - x0, p.y});
    }
    out.left.curves.emplace_back(std::move(left));
    out.right.curves.emplace_back(std::move(right));
  }
  return out;
}

}  // namespace ordramsey
