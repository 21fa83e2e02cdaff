// errors.hpp — error codes and the exception type thrown by every module.
//
// All failure modes surface as k3m::Error carrying a stable ErrorCode, so
// callers (tests, the CLI) can branch on the code rather than parse messages.
#pragma once

#include <stdexcept>
#include <string>

namespace k3m {

enum class ErrorCode {
  DIVISION_BY_ZERO,   // field division or inverse of zero
  FIELD_MISMATCH,     // operands live in different field contexts
  ZERO_INPUT,         // an all-zero vector/point/polynomial where nonzero is required
  POLE,               // rational function evaluated at a zero of its denominator
  TOO_LARGE,          // enumeration refused (e.g. weight enumerator of a code of dim > 12)
  NOT_ADMISSIBLE,     // code fails the surface-code admissibility conditions
  BAD_INPUT,          // malformed argument (parse error, unsupported degree, bad label)
  BAD_WEIGHT,         // code contains a word of forbidden weight
  NO_SOLUTION,        // linear problem has no solution (e.g. no map takes frame to frame)
  NOT_UNIQUE,         // linear problem underdetermined where uniqueness is required
  LINE_IN_CONIC,      // tangency query for a line entirely contained in the conic
  NOT_IN_STRATUM,     // point configuration matches no parametric family
  DEGENERATE_CENTER,  // six-point set violates the center conditions
  MAP_UNDEFINED,      // rational map applied at a fundamental point
  ENDPOINT_MISMATCH,  // composition of correspondences with incompatible middle factor
  UNKNOWN_COMPONENT,  // curve component not matched by any catalog entry
  EXPLOSION,          // group closure exceeded its safety bound
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DIVISION_BY_ZERO: return "DIVISION_BY_ZERO";
    case ErrorCode::FIELD_MISMATCH: return "FIELD_MISMATCH";
    case ErrorCode::ZERO_INPUT: return "ZERO_INPUT";
    case ErrorCode::POLE: return "POLE";
    case ErrorCode::TOO_LARGE: return "TOO_LARGE";
    case ErrorCode::NOT_ADMISSIBLE: return "NOT_ADMISSIBLE";
    case ErrorCode::BAD_INPUT: return "BAD_INPUT";
    case ErrorCode::BAD_WEIGHT: return "BAD_WEIGHT";
    case ErrorCode::NO_SOLUTION: return "NO_SOLUTION";
    case ErrorCode::NOT_UNIQUE: return "NOT_UNIQUE";
    case ErrorCode::LINE_IN_CONIC: return "LINE_IN_CONIC";
    case ErrorCode::NOT_IN_STRATUM: return "NOT_IN_STRATUM";
    case ErrorCode::DEGENERATE_CENTER: return "DEGENERATE_CENTER";
    case ErrorCode::MAP_UNDEFINED: return "MAP_UNDEFINED";
    case ErrorCode::ENDPOINT_MISMATCH: return "ENDPOINT_MISMATCH";
    case ErrorCode::UNKNOWN_COMPONENT: return "UNKNOWN_COMPONENT";
    case ErrorCode::EXPLOSION: return "EXPLOSION";
  }
  return "UNKNOWN";
}

}  // namespace k3m
