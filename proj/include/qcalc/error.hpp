#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcalc {

enum class ErrorKind {
  DivisionByZero,
  ModeMismatch,
  IndexOutOfRange,
  NonConvergent,
  UnknownGenerator,
  AlgebraMismatch,
  NonNilpotentArgument,
  NonUnitConstantTerm,
  RelationViolation,
  PoleHit,
  MissingSample,
  TailNotConverged,
  DivergentUpperTail,
  HypothesisFailed,
  UnknownIdentity,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NonNilpotentArgument: return "NonNilpotentArgument";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::MissingSample: return "MissingSample";
    case ErrorKind::TailNotConverged: return "TailNotConverged";
    case ErrorKind::DivergentUpperTail: return "DivergentUpperTail";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qcalc
