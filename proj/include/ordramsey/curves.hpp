#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordramsey/ordered_graph.hpp"
#include "ordramsey/pattern.hpp"

namespace ordramsey {

using Rational = mpq_class;

// num/den in lowest terms. gmpxx leaves two-argument construction unreduced,
// and GMP arithmetic on unreduced values is undefined.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

struct Point {
  Rational x;
  Rational y;
};

class InvalidCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuplicateKey : public std::runtime_error {
 public:
  DuplicateKey(int first, int second, const std::string& what)
      : std::runtime_error(what), first_index(first), second_index(second) {}
  int first_index;
  int second_index;
};

class CurveMissesLine : public std::runtime_error {
 public:
  CurveMissesLine(int index, const std::string& what) : std::runtime_error(what), index(index) {}
  int index;
};

// x-monotone polyline: x strictly increasing along the vertices. A single
// point is accepted as a degenerate curve; it arises when a curve is cut at
// one of its endpoints.
class PolylineCurve {
 public:
  explicit PolylineCurve(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  const Rational& x_min() const { return points_.front().x; }
  const Rational& x_max() const { return points_.back().x; }
  const Rational& y_min() const { return y_min_; }
  const Rational& y_max() const { return y_max_; }

  bool spans(const Rational& x) const { return x_min() <= x && x <= x_max(); }
  // Height at x; requires spans(x).
  Rational y_at(const Rational& x) const;

  bool is_grounded() const { return x_min() == 0; }

 private:
  std::vector<Point> points_;
  Rational y_min_;
  Rational y_max_;
};

enum class CurveOrdering { GroundedY, RightEndpoint, None };

const char* ordering_name(CurveOrdering o);

struct CurveFamily {
  std::vector<PolylineCurve> curves;
  CurveOrdering ordering = CurveOrdering::None;

  int size() const { return static_cast<int>(curves.size()); }
};

// Closed-set intersection: touching counts. Decided exactly by evaluating the
// height difference at every breakpoint of the common x-range.
bool curves_intersect(const PolylineCurve& a, const PolylineCurve& b);

// Vertex order of a family: by y-intercept for GroundedY, by right endpoint
// for RightEndpoint, input order for None. order[i] is the curve at vertex i.
std::vector<int> family_order(const CurveFamily& fam);

// Intersection graph where vertex i is curves[order[i]].
OrderedGraph intersection_graph(const std::vector<PolylineCurve>& curves,
                                const std::vector<int>& order);

struct CurveGraph {
  OrderedGraph graph;
  std::vector<int> order;
};

CurveGraph intersection_graph(const CurveFamily& fam);

struct GroundedReport {
  std::optional<Embedding> m1_witness;  // induced M1 in G
  std::optional<Embedding> p4_witness;  // induced P4 in the complement
  bool ok() const { return !m1_witness && !p4_witness; }
};

// Checks both grounded-ordering properties on the y-ordered intersection graph.
GroundedReport grounded_ordering_properties(const CurveFamily& fam);

struct LineSplit {
  CurveFamily left;   // reflected about the line, grounded at x = 0
  CurveFamily right;  // translated, grounded at x = 0
  std::vector<int> order;  // order[i]: input index of the curve at vertex i
  Rational line;
};

// Cuts every curve at x = x0. Vertex order of both halves is the height at
// x0. Throws CurveMissesLine or DuplicateKey on tied heights.
LineSplit split_at_line(const CurveFamily& fam, const Rational& x0);

// Curves whose x-range contains x0.
std::vector<int> curves_meeting_line(const CurveFamily& fam, const Rational& x0);

}  // namespace ordramsey
