#pragma once

#include <stdexcept>
#include <string>

namespace dgc {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes (config -> 2, numerical/solver -> 3).
enum class ErrorKind {
  RejectedCoefficient,
  DivergentIntegral,
  SingularSolve,
  OffGridTime,
  OutOfWindow,
  ZeroDenominator,
  NoConvergence,
  NonSymmetricOperator,
  BadControlWindow,
  RoundTripMismatch,
  InvalidArgument,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::RejectedCoefficient: return "RejectedCoefficient";
    case ErrorKind::DivergentIntegral: return "DivergentIntegral";
    case ErrorKind::SingularSolve: return "SingularSolve";
    case ErrorKind::OffGridTime: return "OffGridTime";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonSymmetricOperator: return "NonSymmetricOperator";
    case ErrorKind::BadControlWindow: return "BadControlWindow";
    case ErrorKind::RoundTripMismatch: return "RoundTripMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + msg);
}

}  // namespace dgc
