#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idelic {

enum class ErrorCode {
  AsymmetricMatrix,
  NotQHS3,
  BadDimensions,
  DuplicateName,
  UnknownKnot,
  SelfLinking,
  MismatchedKnot,
  SupportOutsideL,
  DivisorNotPrincipal,
  CoverIllDefined,
  KnotOutsideL,
  NotAdmissible,
  BadModulus,
  ParseError,
  UsageError,
  IoError,
};

// Stable machine-readable names; the CLI emits these in {"error": ...}.
inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricMatrix: return "asymmetric_matrix";
    case ErrorCode::NotQHS3: return "not_qhs3";
    case ErrorCode::BadDimensions: return "bad_dimensions";
    case ErrorCode::DuplicateName: return "duplicate_name";
    case ErrorCode::UnknownKnot: return "unknown_knot";
    case ErrorCode::SelfLinking: return "self_linking";
    case ErrorCode::MismatchedKnot: return "mismatched_knot";
    case ErrorCode::SupportOutsideL: return "support_outside_link";
    case ErrorCode::DivisorNotPrincipal: return "divisor_not_principal";
    case ErrorCode::CoverIllDefined: return "cover_ill_defined";
    case ErrorCode::KnotOutsideL: return "knot_outside_link";
    case ErrorCode::NotAdmissible: return "not_admissible";
    case ErrorCode::BadModulus: return "bad_modulus";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::UsageError: return "usage_error";
    case ErrorCode::IoError: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace idelic
