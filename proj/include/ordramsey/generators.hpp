#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "ordramsey/curves.hpp"
#include "ordramsey/ordered_graph.hpp"

namespace ordramsey {

// All generators draw from SplitMix64 in a fixed order, so the output is a
// pure function of the arguments. Curve coordinates are rationals with
// denominator kCoordDenominator.
inline constexpr int kCoordDenominator = 8;

// Cliques on [0, n/2) and [n/2, n); each cross pair independently with p.
OrderedGraph gen_two_clique(int n, double p, std::uint64_t seed);

// Cliques on four intervals of floor(n/4) (remainder to the last); each cross
// pair independently with probability epsilon.
OrderedGraph gen_four_clique(int n, double epsilon, std::uint64_t seed);

// G(n, p) on the ordered vertex set.
OrderedGraph gen_random_ordered(int n, double p, std::uint64_t seed);

// Grounded family: curve i starts at (0, y_i) with y_i a permutation of
// 0..n-1, then `segs` segments with x steps in (0, range] and a height
// random walk with steps in [-range, range], clamped to [0, n].
CurveFamily gen_grounded_curves(int n, int segs, std::uint64_t seed, int range = 4);

// Every curve crosses x = x0 at a distinct height (a permutation of 0..n-1),
// with distinct left and right extents. Off the line each breakpoint deviates
// from the crossing height by at most `jitter`; small jitter gives sparse
// intersection graphs.
CurveFamily gen_crossing_curves(int n, int segs, const Rational& x0, std::uint64_t seed,
                                double jitter = 2.0);

// General family of short curves in [0, width] x [0, height] with distinct
// right endpoints; the expected density falls as `width` grows.
CurveFamily gen_random_curves(int n, int segs, std::uint64_t seed, int width = 100,
                              int height = 100, int max_length = 10);

class InvalidGenSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GenSpec {
  enum class Kind { TwoClique, FourClique, RandomOrdered, GroundedCurves, CrossingCurves, RandomCurves };
  Kind kind = Kind::RandomOrdered;
  int n = 0;
  double p = 0.5;
  double epsilon = 0.1;
  int segments = 4;
  int range = 4;        // grounded x step bound
  double jitter = 2.0;  // crossing curves
  int width = 100;      // random curves
  int height = 100;
  int max_length = 10;
  Rational x0 = 0;
  std::uint64_t seed = 0;
};

const char* kind_name(GenSpec::Kind kind);
GenSpec::Kind parse_gen_kind(const std::string& name);
bool is_curve_kind(GenSpec::Kind kind);

// Checks parameter ranges; throws InvalidGenSpec.
void validate(const GenSpec& spec);

std::variant<OrderedGraph, CurveFamily> generate(const GenSpec& spec);

}  // namespace ordramsey
