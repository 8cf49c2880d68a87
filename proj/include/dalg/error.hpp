#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dalg {

enum class ErrorCode {
  degenerate_divisor,
  constant_reducer,
  irreducibility_unverified,
  unbound_variable,
  inseparable_or_not_squarefree,
  zero_saturation,
  empty_variety,
  equation_inconsistent,
  trivial_witness,
  not_autonomous_coefficient,
  invalid_modular_data,
  parse_error,
  signature_mismatch,
  order_mismatch,
  invalid_argument,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dalg
