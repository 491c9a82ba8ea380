#pragma once

#include <stdexcept>
#include <string>

namespace parcs {

enum class ErrorKind {
  NonPositiveDimension,
  TooCoarse,
  MarginTooSmall,
  SubdomainTouchesBoundary,
  CyclicCoupling,
  SelfLoop,
  SingularStep,
  NonFiniteState,
  NewtonDiverged,
  CGStalled,
  InconsistentOptimality,
  PowerIterationStalled,
  DegenerateSample,
  EvalAtSingularTime,
  RangeExceeded,
  ClassMembershipLost,
  NoConvergence,
  ParseError,
  SchemaError,
  ValidationFailed,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPositiveDimension: return "NonPositiveDimension";
    case ErrorKind::TooCoarse: return "TooCoarse";
    case ErrorKind::MarginTooSmall: return "MarginTooSmall";
    case ErrorKind::SubdomainTouchesBoundary: return "SubdomainTouchesBoundary";
    case ErrorKind::CyclicCoupling: return "CyclicCoupling";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::SingularStep: return "SingularStep";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    case ErrorKind::CGStalled: return "CGStalled";
    case ErrorKind::InconsistentOptimality: return "InconsistentOptimality";
    case ErrorKind::PowerIterationStalled: return "PowerIterationStalled";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::EvalAtSingularTime: return "EvalAtSingularTime";
    case ErrorKind::RangeExceeded: return "RangeExceeded";
    case ErrorKind::ClassMembershipLost: return "ClassMembershipLost";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace parcs
