#pragma once

#include <stdexcept>
#include <string>

namespace glrmf {

// Single error taxonomy for the library. The code keys programmatic
// handling; the message carries context (neuron index, offending value...).
enum class ErrorCode {
  DomainZero,
  Overflow,
  DomainNonPositive,
  DomainError,
  NonFeedforward,
  HypothesisMismatch,
  NegativeParameter,
  MissingPrefix,
  ZeroWeight,
  QuadratureFailure,
  SolverDivergence,
  InvalidTargets,
  ConfigError,
  InsufficientData,
  SpecMismatch,
  ParseError,
  ValidationError,
  NoDriftFound,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DomainZero: return "DomainZero";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DomainNonPositive: return "DomainNonPositive";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonFeedforward: return "NonFeedforward";
    case ErrorCode::HypothesisMismatch: return "HypothesisMismatch";
    case ErrorCode::NegativeParameter: return "NegativeParameter";
    case ErrorCode::MissingPrefix: return "MissingPrefix";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::SolverDivergence: return "SolverDivergence";
    case ErrorCode::InvalidTargets: return "InvalidTargets";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NoDriftFound: return "NoDriftFound";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace glrmf
