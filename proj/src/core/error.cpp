#include "dalg/error.hpp"

namespace dalg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::degenerate_divisor: return "DEGENERATE_DIVISOR";
    case ErrorCode::constant_reducer: return "CONSTANT_REDUCER";
    case ErrorCode::irreducibility_unverified: return "IRREDUCIBILITY_UNVERIFIED";
    case ErrorCode::unbound_variable: return "UNBOUND_VARIABLE";
    case ErrorCode::inseparable_or_not_squarefree: return "INSEPARABLE_OR_NOT_SQUAREFREE";
    case ErrorCode::zero_saturation: return "ZERO_SATURATION";
    case ErrorCode::empty_variety: return "EMPTY_VARIETY";
    case ErrorCode::equation_inconsistent: return "EQUATION_INCONSISTENT";
    case ErrorCode::trivial_witness: return "TRIVIAL_WITNESS";
    case ErrorCode::not_autonomous_coefficient: return "NOT_AUTONOMOUS_COEFFICIENT";
    case ErrorCode::invalid_modular_data: return "INVALID_MODULAR_DATA";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::signature_mismatch: return "SIGNATURE_MISMATCH";
    case ErrorCode::order_mismatch: return "ORDER_MISMATCH";
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace dalg
