#pragma once

#include <stdexcept>
#include <string>

namespace holonomy {

enum class ErrorCode {
  NotConnected,
  UnknownVertex,
  SelfLoop,
  EmptyGraph,
  NotQuasicanonical,
  NoUniqueTerminals,
  StepBudgetExceeded,
  NotALineDigraph,
  BrokenChain,
  InconsistentSeed,
  ParseError,
  ReservedToken,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotQuasicanonical: return "NotQuasicanonical";
    case ErrorCode::NoUniqueTerminals: return "NoUniqueTerminals";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::NotALineDigraph: return "NotALineDigraph";
    case ErrorCode::BrokenChain: return "BrokenChain";
    case ErrorCode::InconsistentSeed: return "InconsistentSeed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ReservedToken: return "ReservedToken";
  }
  return "UnknownError";
}

/// Domain error carrying a stable code; the CLI maps codes to exit status.
class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw GraphError(code, message);
}

}  // namespace holonomy
