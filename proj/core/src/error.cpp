#include "pachner/error.hpp"

namespace pachner {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegenerateKey: return "DegenerateKey";
    case ErrorCode::SingularTransport: return "SingularTransport";
    case ErrorCode::InconsistentVolumes: return "InconsistentVolumes";
    case ErrorCode::SingularOmega: return "SingularOmega";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::BadAuxFace: return "BadAuxFace";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace pachner
