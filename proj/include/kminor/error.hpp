#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kminor {

enum class ErrorKind {
  capacity_exceeded,
  loop_edge,
  index_out_of_range,
  not_an_edge,
  not_a_clique,
  not_a_k4,
  empty_graph,
  trivial_partition,
  order_too_large,
  order_too_small,
  arity_mismatch,
  parameter_out_of_range,
  disconnected_input,
  precondition_violated,
  unreachable_order,
  hypothesis_violated,
  internal_failure,
  infeasible_constraints,
  parse_error,
  io_error,
  unknown_kind,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception. Every failure carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kminor
