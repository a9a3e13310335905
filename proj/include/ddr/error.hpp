#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddr {

enum class ErrorKind {
  invalid_parameters,
  point_space_mismatch,
  too_large,
  duplicate_element,
  degree_exceeds_capacity,
  tolerance_not_met,
  unsupported_degree,
  wrong_family,
  not_a_group,
  strength_insufficient,
  t_exceeds_capacity,
  unknown_kind,
  not_2_transitive,
  malformed_header,
  malformed_line,
  io_error,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameters: return "invalid-parameters";
    case ErrorKind::point_space_mismatch: return "point-space-mismatch";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::duplicate_element: return "duplicate-element";
    case ErrorKind::degree_exceeds_capacity: return "degree-exceeds-capacity";
    case ErrorKind::tolerance_not_met: return "tolerance-not-met";
    case ErrorKind::unsupported_degree: return "unsupported-degree";
    case ErrorKind::wrong_family: return "wrong-family";
    case ErrorKind::not_a_group: return "not-a-group";
    case ErrorKind::strength_insufficient: return "strength-insufficient";
    case ErrorKind::t_exceeds_capacity: return "t-exceeds-N(X)";
    case ErrorKind::unknown_kind: return "unknown-kind";
    case ErrorKind::not_2_transitive: return "not-2-transitive";
    case ErrorKind::malformed_header: return "malformed-header";
    case ErrorKind::malformed_line: return "malformed-line";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

/// Every failure in the library is reported through this exception; `kind()` is stable,
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ddr
