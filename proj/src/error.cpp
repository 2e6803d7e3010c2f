#include "qseq4/error.hpp"

namespace qseq4 {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidModulus: return "invalid-modulus";
    case ErrorCode::UndefinedGcd: return "undefined-gcd";
    case ErrorCode::ShapeError: return "shape-error";
    case ErrorCode::InvalidFamily: return "invalid-family";
    case ErrorCode::InvalidField: return "invalid-field";
    case ErrorCode::ConstructionRejected: return "construction-rejected";
    case ErrorCode::InvalidIndex: return "invalid-index";
    case ErrorCode::InvalidQuery: return "invalid-query";
    case ErrorCode::NotApplicable: return "not-applicable";
    case ErrorCode::NoPrediction: return "no-prediction";
    case ErrorCode::ParseError: return "parse-error";
  }
  return "unknown";
}

}  // namespace qseq4
