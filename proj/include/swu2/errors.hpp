#pragma once

#include <stdexcept>
#include <string>

namespace swu2 {

/// Typed domain errors. Every precondition failure maps to one of these so
/// that callers (and the CLI) can report machine-readable error names.
enum class Err {
  LengthMismatch,
  NotPRestricted,
  DepthTooSmall,
  NotCentrallyTrivial,
  NotDescended,
  NonIrreducibleType,
  NotAFactor,
  NotSelfDual,
  TrivialCharacter,
  DegenerateParameter,
  ConsistencyFailure,
  PreconditionViolated,
  SearchExhausted,
  WrongDeterminantValuation,
  NotAdmissible,
  ZeroUnit,
  RelationViolated,
  TruncationTooShort,
  GenericityViolation,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::NotPRestricted: return "NotPRestricted";
    case Err::DepthTooSmall: return "DepthTooSmall";
    case Err::NotCentrallyTrivial: return "NotCentrallyTrivial";
    case Err::NotDescended: return "NotDescended";
    case Err::NonIrreducibleType: return "NonIrreducibleType";
    case Err::NotAFactor: return "NotAFactor";
    case Err::NotSelfDual: return "NotSelfDual";
    case Err::TrivialCharacter: return "TrivialCharacter";
    case Err::DegenerateParameter: return "DegenerateParameter";
    case Err::ConsistencyFailure: return "ConsistencyFailure";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::SearchExhausted: return "SearchExhausted";
    case Err::WrongDeterminantValuation: return "WrongDeterminantValuation";
    case Err::NotAdmissible: return "NotAdmissible";
    case Err::ZeroUnit: return "ZeroUnit";
    case Err::RelationViolated: return "RelationViolated";
    case Err::TruncationTooShort: return "TruncationTooShort";
    case Err::GenericityViolation: return "GenericityViolation";
  }
  return "Unknown";
}

class SpecError : public std::runtime_error {
 public:
  SpecError(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }
  const char* name() const { return err_name(code_); }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw SpecError(code, what);
}

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace swu2
