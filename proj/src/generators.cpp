#include "ordramsey/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ordramsey/rng.hpp"

namespace ordramsey {

namespace {

// Fisher-Yates with our own RNG; std::shuffle is not specified bit-for-bit.
std::vector<int> permutation(int n, SplitMix64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
  }
  return p;
}

Rational coord(std::int64_t num) { return ratio(num, kCoordDenominator); }

void interval_clique(OrderedGraph& g, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    for (int j = i + 1; j < hi; ++j) g.add_edge(i, j);
  }
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidGenSpec(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

OrderedGraph gen_two_clique(int n, double p, std::uint64_t seed) {
  check_probability(p, "p");
  SplitMix64 rng(seed);
  OrderedGraph g(n);
  const int half = n / 2;
  interval_clique(g, 0, half);
  interval_clique(g, half, n);
  for (int i = 0; i < half; ++i) {
    for (int j = half; j < n; ++j) {
      if (rng.bernoulli(p)) g.add_edge(i, j);
    }
  }
  return g;
}

OrderedGraph gen_four_clique(int n, double epsilon, std::uint64_t seed) {
  check_probability(epsilon, "epsilon");
  SplitMix64 rng(seed);
  OrderedGraph g(n);
  const int q = n / 4;
  std::vector<int> part(n);
  for (int i = 0; i < n; ++i) part[i] = q == 0 ? 3 : std::min(i / q, 3);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part[i] == part[j] || rng.bernoulli(epsilon)) g.add_edge(i, j);
    }
  }
  return g;
}

OrderedGraph gen_random_ordered(int n, double p, std::uint64_t seed) {
  check_probability(p, "p");
  SplitMix64 rng(seed);
  OrderedGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) g.add_edge(i, j);
    }
  }
  return g;
}

CurveFamily gen_grounded_curves(int n, int segs, std::uint64_t seed, int range) {
  if (n < 1 || segs < 1 || range < 1) throw InvalidGenSpec("grounded curves need n, segs, range >= 1");
  SplitMix64 rng(seed);
  const auto start = permutation(n, rng);
  CurveFamily fam;
  fam.ordering = CurveOrdering::GroundedY;
  for (int i = 0; i < n; ++i) {
    std::vector<Point> pts{{Rational(0), Rational(start[i])}};
    const std::int64_t step = static_cast<std::int64_t>(range) * kCoordDenominator;
    const std::int64_t top = static_cast<std::int64_t>(n) * kCoordDenominator;
    std::int64_t x = 0, y = start[i] * kCoordDenominator;
    for (int s = 0; s < segs; ++s) {
      x += rng.between(1, step);
      y = std::clamp(y + rng.between(-step, step), std::int64_t{0}, top);
      pts.push_back({coord(x), coord(y)});
    }
    fam.curves.emplace_back(std::move(pts));
  }
  return fam;
}

CurveFamily gen_crossing_curves(int n, int segs, const Rational& x0, std::uint64_t seed,
                                double jitter) {
  if (n < 1 || segs < 1) throw InvalidGenSpec("crossing curves need n, segs >= 1");
  if (!(jitter >= 0.0)) throw InvalidGenSpec("jitter must be non-negative");
  SplitMix64 rng(seed);
  const auto height = permutation(n, rng);
  const auto left = permutation(n, rng);
  const auto right = permutation(n, rng);
  const auto spread = static_cast<std::int64_t>(std::llround(jitter * kCoordDenominator));
  const int segs_left = std::max(1, segs / 2);
  const int segs_right = std::max(1, segs - segs_left);

  auto wiggle = [&](int i) -> Rational {
    return Rational(height[i]) + coord(rng.between(-spread, spread));
  };
  CurveFamily fam;
  fam.ordering = CurveOrdering::None;
  for (int i = 0; i < n; ++i) {
    const Rational lo = x0 - (left[i] + 1);
    const Rational hi = x0 + (right[i] + 1);
    std::vector<Point> pts;
    for (int s = 0; s < segs_left; ++s) {
      pts.push_back({lo + (x0 - lo) * ratio(s, segs_left), wiggle(i)});
    }
    pts.push_back({x0, Rational(height[i])});
    for (int s = 1; s <= segs_right; ++s) {
      pts.push_back({x0 + (hi - x0) * ratio(s, segs_right), wiggle(i)});
    }
    fam.curves.emplace_back(std::move(pts));
  }
  return fam;
}

CurveFamily gen_random_curves(int n, int segs, std::uint64_t seed, int width, int height,
                              int max_length) {
  if (n < 1 || segs < 1 || width < 1 || height < 1 || max_length < 1) {
    throw InvalidGenSpec("random curves need positive n, segs, width, height, max_length");
  }
  SplitMix64 rng(seed);
  const auto tiebreak = permutation(n, rng);
  const std::int64_t d = kCoordDenominator;
  CurveFamily fam;
  fam.ordering = CurveOrdering::RightEndpoint;
  for (int i = 0; i < n; ++i) {
    const Rational lo = coord(rng.between(0, width * d));
    // Distinct right endpoints: the offset below 1/d differs between curves.
    const Rational hi = lo + coord(rng.between(d, max_length * d)) + ratio(tiebreak[i] + 1, static_cast<long>(n + 1) * d);
    const Rational base = coord(rng.between(0, height * d));
    std::vector<Point> pts;
    for (int s = 0; s <= segs; ++s) {
      pts.push_back({lo + (hi - lo) * ratio(s, segs), base + coord(rng.between(-2 * d, 2 * d))});
    }
    fam.curves.emplace_back(std::move(pts));
  }
  return fam;
}

const char* kind_name(GenSpec::Kind kind) {
  switch (kind) {
    case GenSpec::Kind::TwoClique: return "two-clique";
    case GenSpec::Kind::FourClique: return "four-clique";
    case GenSpec::Kind::RandomOrdered: return "random-ordered";
    case GenSpec::Kind::GroundedCurves: return "grounded-curves";
    case GenSpec::Kind::CrossingCurves: return "crossing-curves";
    case GenSpec::Kind::RandomCurves: return "random-curves";
  }
  return "random-ordered";
}

GenSpec::Kind parse_gen_kind(const std::string& name) {
  for (auto k : {GenSpec::Kind::TwoClique, GenSpec::Kind::FourClique, GenSpec::Kind::RandomOrdered,
                 GenSpec::Kind::GroundedCurves, GenSpec::Kind::CrossingCurves,
                 GenSpec::Kind::RandomCurves}) {
    if (name == kind_name(k)) return k;
  }
  throw InvalidGenSpec("unknown generator kind '" + name + "'");
}

bool is_curve_kind(GenSpec::Kind kind) {
  return kind == GenSpec::Kind::GroundedCurves || kind == GenSpec::Kind::CrossingCurves ||
         kind == GenSpec::Kind::RandomCurves;
}

void validate(const GenSpec& spec) {
  if (spec.n < 0) throw InvalidGenSpec("n must be non-negative");
  if (is_curve_kind(spec.kind) && spec.n < 1) throw InvalidGenSpec("curve families need n >= 1");
  if (spec.n > 100000) throw InvalidGenSpec("n above 100000 is out of range");
  check_probability(spec.p, "p");
  check_probability(spec.epsilon, "epsilon");
  if (spec.segments < 1) throw InvalidGenSpec("segments must be >= 1");
}

std::variant<OrderedGraph, CurveFamily> generate(const GenSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case GenSpec::Kind::TwoClique: return gen_two_clique(spec.n, spec.p, spec.seed);
    case GenSpec::Kind::FourClique: return gen_four_clique(spec.n, spec.epsilon, spec.seed);
    case GenSpec::Kind::RandomOrdered: return gen_random_ordered(spec.n, spec.p, spec.seed);
    case GenSpec::Kind::GroundedCurves:
      return gen_grounded_curves(spec.n, spec.segments, spec.seed, spec.range);
    case GenSpec::Kind::CrossingCurves:
      return gen_crossing_curves(spec.n, spec.segments, spec.x0, spec.seed, spec.jitter);
    case GenSpec::Kind::RandomCurves:
      return gen_random_curves(spec.n, spec.segments, spec.seed, spec.width, spec.height,
                               spec.max_length);
  }
  throw InvalidGenSpec("unknown generator kind");
}

}  // namespace ordramsey
