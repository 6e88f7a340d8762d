#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ordramsey/biclique.hpp"
#include "ordramsey/pattern.hpp"

namespace ordramsey {

// A source vertex whose monotone reach into T is large.
struct FarVertex {
  Vertex vertex = -1;
  VertexSet reached;
};

// Induced ordered copy of the requested pattern.
struct InducedCopy {
  Embedding embedding;
};

// Bi-clique in the complement. `note` records where the sides came from.
struct CoBiclique {
  Biclique biclique;
  std::string note;
};

struct PreconditionViolation {
  enum class Kind { Precondition, NoValidM, DegreeGate, SizeInfeasible };
  Kind kind = Kind::Precondition;
  std::string stage;
  std::string message;
};

struct RetryExhausted {
  std::uint64_t seed = 0;
  long trials = 0;
  // Measured edge density between endpoint sets B_i, B_j for pattern
  // non-edges {i, j}, in lexicographic order of (i, j).
  std::vector<double> cross_densities;
  double failure_bound = 0.0;
};

using Outcome = std::variant<FarVertex, InducedCopy, CoBiclique, PreconditionViolation, RetryExhausted>;

const char* variant_name(const Outcome& o);
const char* kind_name(PreconditionViolation::Kind kind);

}  // namespace ordramsey
