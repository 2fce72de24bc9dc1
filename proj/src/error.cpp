#include "kminor/error.hpp"

namespace kminor {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::capacity_exceeded: return "capacity-exceeded";
    case ErrorKind::loop_edge: return "loop-edge";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::not_an_edge: return "not-an-edge";
    case ErrorKind::not_a_clique: return "not-a-clique";
    case ErrorKind::not_a_k4: return "not-a-k4";
    case ErrorKind::empty_graph: return "empty-graph";
    case ErrorKind::trivial_partition: return "trivial-partition";
    case ErrorKind::order_too_large: return "order-too-large";
    case ErrorKind::order_too_small: return "order-too-small";
    case ErrorKind::arity_mismatch: return "arity-mismatch";
    case ErrorKind::parameter_out_of_range: return "parameter-out-of-range";
    case ErrorKind::disconnected_input: return "disconnected-input";
    case ErrorKind::precondition_violated: return "precondition-violated";
    case ErrorKind::unreachable_order: return "unreachable-order";
    case ErrorKind::hypothesis_violated: return "hypothesis-violated";
    case ErrorKind::internal_failure: return "internal-failure";
    case ErrorKind::infeasible_constraints: return "infeasible-constraints";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::unknown_kind: return "unknown-kind";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace kminor
