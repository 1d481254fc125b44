#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ohno {

enum class ErrorCode {
  EmptyIndex,
  NonPositivePart,
  LastPartTooSmall,
  PatternLengthMismatch,
  InfeasibleTotal,
  BinomialOverflow,
  ParameterDomain,
  DepthTooLarge,
  RadiusDomain,
  OutsideDisk,
  WeightTooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every library operation; `code()` names the violated rule.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ohno
