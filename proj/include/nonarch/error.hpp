#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nonarch {

/// Failure categories raised by the library. The CLI reports these by name.
enum class ErrorCode {
  NotPrime,
  ParseError,
  ValidationError,
  NegativeValuation,
  RootsUnavailable,
  EmptyWindow,
  OutsideRadius,
  Uncertifiable,
  DuplicatePoint,
  ZeroPoint,
  OutsideReliableWindow,
  ZeroSeries,
  ConstantSeries,
  NotDominant,
  NeedExtremal,
  NotUnit,
  NoContraction,
  IncompatibleSlope,
  RequiresExact,
  DerivativeVanishes,
  TooFewTargets,
  NotCoprime,
  UnsplitDenominator,
  PoleOnCircle,
  OnCircle,
  UnknownSuite,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace nonarch
