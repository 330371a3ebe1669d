#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tq {

enum class ErrorCode {
  DimensionMismatch,
  SingularMatrix,
  NotSymmetric,
  OddModulus,
  InvalidModulus,
  NotPrimitive,
  NotIsotropic,
  NotSymplectic,
  NotUnimodular,
  SpaceMismatch,
  NotTransverse,
  TransverseInput,
  BasesNotPairAdapted,
  BasisMismatch,
  BaseMismatch,
  FrameMismatch,
  InvalidLift,
  Overflow,
  ParseError,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::OddModulus: return "OddModulus";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::TransverseInput: return "TransverseInput";
    case ErrorCode::BasesNotPairAdapted: return "BasesNotPairAdapted";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::InvalidLift: return "InvalidLift";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every library failure is reported as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tq
