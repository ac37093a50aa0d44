#include "eqiso/errors.hpp"

namespace eqiso {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::WitnessMismatch: return "WitnessMismatch";
    case ErrorCode::InvalidShift: return "InvalidShift";
    case ErrorCode::NotInvolutory: return "NotInvolutory";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotConference: return "NotConference";
    case ErrorCode::ExactLayerUnavailable: return "ExactLayerUnavailable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace eqiso
