#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqiso {

enum class ErrorCode {
  InvalidPrime,
  InvalidExponent,
  DivisionByZero,
  InvalidOrder,
  NotSymmetrizable,
  InvalidPermutation,
  WitnessMismatch,
  InvalidShift,
  NotInvolutory,
  NotUnimodular,
  RankMismatch,
  NotConference,
  ExactLayerUnavailable,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception; `code()` identifies the failed precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eqiso
