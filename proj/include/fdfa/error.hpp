#pragma once

#include <stdexcept>
#include <string>

namespace fdfa {

enum class ErrorCode {
  kSyntax,
  kIncompleteTable,
  kUnknownSymbol,
  kStateOutOfRange,
  kEmptyAlphabet,
  kBadAlphabet,
  kAlphabetMismatch,
  kAlphabetTooSmall,
  kInfiniteLanguage,
  kNotInFinitePart,
  kNotInInfinitePart,
  kNotFinitelyDifferent,
  kSameState,
  kTargetReachesMerged,
  kNotMinimized,
  kNotFMinimal,
  kBadBijection,
  kIo,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax error";
    case ErrorCode::kIncompleteTable: return "incomplete transition table";
    case ErrorCode::kUnknownSymbol: return "symbol not in alphabet";
    case ErrorCode::kStateOutOfRange: return "state id out of range";
    case ErrorCode::kEmptyAlphabet: return "empty alphabet";
    case ErrorCode::kBadAlphabet: return "invalid alphabet";
    case ErrorCode::kAlphabetMismatch: return "alphabet mismatch";
    case ErrorCode::kAlphabetTooSmall: return "alphabet too small";
    case ErrorCode::kInfiniteLanguage: return "language is infinite";
    case ErrorCode::kNotInFinitePart: return "state not in finite part";
    case ErrorCode::kNotInInfinitePart: return "state not in infinite part";
    case ErrorCode::kNotFinitelyDifferent: return "not finitely different";
    case ErrorCode::kTargetReachesMerged: return "merge target reaches the merged state";
    case ErrorCode::kSameState: return "states are identical";
    case ErrorCode::kNotMinimized: return "automaton is not minimized";
    case ErrorCode::kNotFMinimal: return "automaton is not f-minimal";
    case ErrorCode::kBadBijection: return "bijection does not match the tagged parts";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

/// Every recoverable failure in the library surfaces as an Error carrying a
/// code, so callers (the CLI in particular) can tell precondition
/// violations apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fdfa
