#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcl {

enum class ErrorCode {
  kInvalidArgument,
  kZeroInverse,
  kZeroDenominator,
  kNotPrime,
  kInvalidRank,
  kInvalidMultiplicity,
  kLoopContraction,
  kNotSparsePaving,
  kLoopElement,
  kInvalidPair,
  kDegeneratePair,
  kNoEligiblePair,
  kOutOfRange,
  kDisconnectedGraph,
  kParseError,
  kEnumerationLimit,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kInvalidMultiplicity: return "InvalidMultiplicity";
    case ErrorCode::kLoopContraction: return "LoopContraction";
    case ErrorCode::kNotSparsePaving: return "NotSparsePaving";
    case ErrorCode::kLoopElement: return "LoopElement";
    case ErrorCode::kInvalidPair: return "InvalidPair";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kNoEligiblePair: return "NoEligiblePair";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEnumerationLimit: return "EnumerationLimit";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above, so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace mcl
