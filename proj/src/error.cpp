#include "iwasawa/error.hpp"

namespace iwasawa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::SingularMinor: return "singular_minor";
    case ErrorCode::WrongInertia: return "wrong_inertia";
    case ErrorCode::NotHermitian: return "not_hermitian";
    case ErrorCode::SingularDiagonal: return "singular_diagonal";
    case ErrorCode::ZeroVector: return "zero_vector";
    case ErrorCode::NotTimelike: return "not_timelike";
    case ErrorCode::NotInG: return "not_in_g";
    case ErrorCode::NotInG0: return "not_in_g0";
    case ErrorCode::NotInQ: return "not_in_q";
    case ErrorCode::NotInAN: return "not_in_an";
    case ErrorCode::EigenFailure: return "eigen_failure";
    case ErrorCode::NotDecomposable: return "not_decomposable";
    case ErrorCode::NotAdmissible: return "not_admissible";
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::ParseError: return "parse_error";
  }
  return "unknown";
}

}  // namespace iwasawa
