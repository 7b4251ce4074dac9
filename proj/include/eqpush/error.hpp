#pragma once

/**
 * @file error.hpp
 * @brief Exception type shared by every eqpush module.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqpush {

enum class ErrorKind {
  VariableCountMismatch,
  InexactDivision,
  ZeroToNegativePower,
  InvalidPartition,
  ExplicitSizeLimit,
  NotSymmetric,
  MixedParity,
  DegenerateEulerClass,
  InternalInconsistency,
  ParseError,
  InvalidSpace,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::ExplicitSizeLimit: return "ExplicitSizeLimit";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::MixedParity: return "MixedParity";
    case ErrorKind::DegenerateEulerClass: return "DegenerateEulerClass";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eqpush
