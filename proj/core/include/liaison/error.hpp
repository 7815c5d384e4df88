#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liaison {

enum class ErrorCode {
  RankMismatch,
  NegativeHeight,
  EtaNegative,
  EtaDisconnectedBelow,
  InvalidRank,
  NotIdealMode,
  Degenerate,
  PreconditionViolated,
  InadmissibleDegree,
  BudgetExceeded,
  NotPrime,
  FieldMismatch,
  DimensionMismatch,
  MinorTooLarge,
  DegreeCapExceeded,
  Parse,
  Io,
  UnknownPreset,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` is stable; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liaison
