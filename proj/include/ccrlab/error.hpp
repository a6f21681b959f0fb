#pragma once

#include <stdexcept>
#include <string>

namespace ccrlab {

enum class ErrorCode {
  NotSpanning,
  NotPointed,
  DimensionTooLarge,
  EmptyInterior,
  NotInteriorFunctional,
  FunctionalNotOrthogonal,
  ChartMismatch,
  NotInCone,
  LadderTooShort,
  InfiniteMultiplicity,
  WindowChartMismatch,
  SampleOffGrid,
  UnsafeShift,
  UnsafeInteriorPoint,
  TruncationGuard,
  NotConditionallyPSD,
  LatticeNotOrthogonal,
  IncomparableScenarios,
  ZeroDirection,
  ParseError,
  BadInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::NotInteriorFunctional: return "NotInteriorFunctional";
    case ErrorCode::FunctionalNotOrthogonal: return "FunctionalNotOrthogonal";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::LadderTooShort: return "LadderTooShort";
    case ErrorCode::InfiniteMultiplicity: return "InfiniteMultiplicity";
    case ErrorCode::WindowChartMismatch: return "WindowChartMismatch";
    case ErrorCode::SampleOffGrid: return "SampleOffGrid";
    case ErrorCode::UnsafeShift: return "UnsafeShift";
    case ErrorCode::UnsafeInteriorPoint: return "UnsafeInteriorPoint";
    case ErrorCode::TruncationGuard: return "TruncationGuard";
    case ErrorCode::NotConditionallyPSD: return "NotConditionallyPSD";
    case ErrorCode::LatticeNotOrthogonal: return "LatticeNotOrthogonal";
    case ErrorCode::IncomparableScenarios: return "IncomparableScenarios";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Library-wide exception carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace ccrlab
