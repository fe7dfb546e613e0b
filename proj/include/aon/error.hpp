#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aon {

enum class ErrorCode {
  EmptyInstance,
  NonPositiveProfit,
  ProbabilityOutOfRange,
  IndexOutOfRange,
  EmptySupport,
  ZeroProbabilityInSupport,
  TooLargeForEnumeration,
  CapacityOverflow,
  UnreachableProfit,
  EpsilonOutOfRange,
  ExtraNotLow,
  BadDomain,
  Overflow,
  TargetTooSmall,
  AllWeightsExceedTarget,
  PrecisionExhausted,
  BadDistributionSpec,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::NonPositiveProfit: return "NonPositiveProfit";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::ZeroProbabilityInSupport: return "ZeroProbabilityInSupport";
    case ErrorCode::TooLargeForEnumeration: return "TooLargeForEnumeration";
    case ErrorCode::CapacityOverflow: return "CapacityOverflow";
    case ErrorCode::UnreachableProfit: return "UnreachableProfit";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::ExtraNotLow: return "ExtraNotLow";
    case ErrorCode::BadDomain: return "BadDomain";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::TargetTooSmall: return "TargetTooSmall";
    case ErrorCode::AllWeightsExceedTarget: return "AllWeightsExceedTarget";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::BadDistributionSpec: return "BadDistributionSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aon
