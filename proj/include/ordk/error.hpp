#pragma once

#include <stdexcept>
#include <string>

namespace ordk {

enum class ErrorCode {
  Input,                 // malformed or out-of-range argument
  Parse,                 // text/JSON that could not be parsed
  UnsupportedVariant,    // operation not defined for this cone variant
  InvalidIdeal,          // subgroup is not order-convex
  Ordering,              // an ordering precondition does not hold
  NoUniqueState,
  DecompositionFailure,
  Rank,                  // linearly dependent frame
  CocycleViolation,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Input: return "input error";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::UnsupportedVariant: return "unsupported variant";
    case ErrorCode::InvalidIdeal: return "invalid ideal";
    case ErrorCode::Ordering: return "ordering error";
    case ErrorCode::NoUniqueState: return "no unique state";
    case ErrorCode::DecompositionFailure: return "decomposition failure";
    case ErrorCode::Rank: return "rank error";
    case ErrorCode::CocycleViolation: return "cocycle violation";
  }
  return "error";
}

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

}  // namespace ordk
