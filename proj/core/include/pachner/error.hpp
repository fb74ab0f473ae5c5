#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pachner {

enum class ErrorCode {
  DivisionByZero,
  DegenerateKey,
  SingularTransport,
  InconsistentVolumes,
  SingularOmega,
  NotFlat,
  BadAuxFace,
  NotRealizable,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, so
/// callers can branch on `code()` instead of parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pachner
