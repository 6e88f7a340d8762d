#include "ordramsey/outcome.hpp"

namespace ordramsey {

namespace {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

const char* variant_name(const Outcome& o) {
  return std::visit(Overloaded{
                        [](const FarVertex&) { return "far_vertex"; },
                        [](const InducedCopy&) { return "induced_copy"; },
                        [](const CoBiclique&) { return "co_biclique"; },
                        [](const PreconditionViolation&) { return "precondition_violation"; },
                        [](const RetryExhausted&) { return "retry_exhausted"; },
                    },
                    o);
}

const char* kind_name(PreconditionViolation::Kind kind) {
  switch (kind) {
    case PreconditionViolation::Kind::Precondition: return "precondition";
    case PreconditionViolation::Kind::NoValidM: return "no_valid_m";
    case PreconditionViolation::Kind::DegreeGate: return "degree_gate";
    case PreconditionViolation::Kind::SizeInfeasible: return "size_infeasible";
  }
  return "unknown";
}

}  // namespace ordramsey
