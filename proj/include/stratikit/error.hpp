#pragma once

#include <stdexcept>
#include <string>

namespace stratikit {

enum class ErrorKind {
  DimensionMismatch,
  NotAdmissible,
  InvalidRelation,
  NotBasic,
  LiftingFailed,
  AlgebraMismatch,
  NotASubmodule,
  DecompositionFailed,
  InternalInconsistency,
  PreconditionUnverified,
  RoutesDisagree,
  NotFiltered,
  ConstructionDiverged,
  TooManyIdempotents,
  InvalidInput,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::InvalidRelation: return "InvalidRelation";
    case ErrorKind::NotBasic: return "NotBasic";
    case ErrorKind::LiftingFailed: return "LiftingFailed";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotASubmodule: return "NotASubmodule";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::PreconditionUnverified: return "PreconditionUnverified";
    case ErrorKind::RoutesDisagree: return "RoutesDisagree";
    case ErrorKind::NotFiltered: return "NotFiltered";
    case ErrorKind::ConstructionDiverged: return "ConstructionDiverged";
    case ErrorKind::TooManyIdempotents: return "TooManyIdempotents";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stratikit
