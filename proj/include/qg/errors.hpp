// Error taxonomy shared by the whole library: every throwing operation uses
// qg::Error with a stable machine-readable code plus a human-readable message.
#pragma once

#include <stdexcept>
#include <string>

namespace qg {

enum class Err {
  // graph construction / topology
  DanglingEndpoint,
  NonpositiveLength,
  ZeroDeltaPrimeStrength,
  Disconnected,
  PositionOutOfRange,
  NotDegreeTwo,
  NotStandard,
  WouldCreateDanglingLoop,
  NotATree,
  // solve / evaluation
  KMaxExceedsDofs,
  ConstraintRankDeficiency,
  LambdaBeyondComputedRange,
  ConstraintViolation,
  // oracle
  RobinNotClosedForm,
  BracketingFailure,
  // surgery
  UnknownVertex,
  MixedConditionFamilies,
  PartitionIncomplete,
  StrengthSumMismatch,
  AssignmentIncomplete,
  NonpositiveFactor,
  // bounds
  IndexOutOfRange,
  ZeroStrengthVertexWithoutRemarkPath,
  NotBipartite,
  NotDeltaPrime,
  // checker / config
  UnsatisfiableParams,
  ConfigInvalid,
  // i/o
  ParseError,
};

inline const char* to_string(Err e) {
  switch (e) {
    case Err::DanglingEndpoint: return "DanglingEndpoint";
    case Err::NonpositiveLength: return "NonpositiveLength";
    case Err::ZeroDeltaPrimeStrength: return "ZeroDeltaPrimeStrength";
    case Err::Disconnected: return "Disconnected";
    case Err::PositionOutOfRange: return "PositionOutOfRange";
    case Err::NotDegreeTwo: return "NotDegreeTwo";
    case Err::NotStandard: return "NotStandard";
    case Err::WouldCreateDanglingLoop: return "WouldCreateDanglingLoop";
    case Err::NotATree: return "NotATree";
    case Err::KMaxExceedsDofs: return "KMaxExceedsDofs";
    case Err::ConstraintRankDeficiency: return "ConstraintRankDeficiency";
    case Err::LambdaBeyondComputedRange: return "LambdaBeyondComputedRange";
    case Err::ConstraintViolation: return "ConstraintViolation";
    case Err::RobinNotClosedForm: return "RobinNotClosedForm";
    case Err::BracketingFailure: return "BracketingFailure";
    case Err::UnknownVertex: return "UnknownVertex";
    case Err::MixedConditionFamilies: return "MixedConditionFamilies";
    case Err::PartitionIncomplete: return "PartitionIncomplete";
    case Err::StrengthSumMismatch: return "StrengthSumMismatch";
    case Err::AssignmentIncomplete: return "AssignmentIncomplete";
    case Err::NonpositiveFactor: return "NonpositiveFactor";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::ZeroStrengthVertexWithoutRemarkPath:
      return "ZeroStrengthVertexWithoutRemarkPath";
    case Err::NotBipartite: return "NotBipartite";
    case Err::NotDeltaPrime: return "NotDeltaPrime";
    case Err::UnsatisfiableParams: return "UnsatisfiableParams";
    case Err::ConfigInvalid: return "ConfigInvalid";
    case Err::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qg
