#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qseq4 {

enum class ErrorCode {
  InvalidModulus,
  UndefinedGcd,
  ShapeError,
  InvalidFamily,
  InvalidField,
  ConstructionRejected,
  InvalidIndex,
  InvalidQuery,
  NotApplicable,
  NoPrediction,
  ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qseq4
