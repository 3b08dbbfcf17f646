#pragma once

#include <stdexcept>
#include <string>

namespace paycap {

enum class ErrorCode {
  MalformedXml,
  BranchingChain,
  MissingInertial,
  InvalidLimit,
  NonUnitAxis,
  DimensionMismatch,
  NonFiniteInput,
  NoConvergence,
  SingularityStall,
  JointLimitHit,
  IkFailure,
  MalformedTrajectory,
  EmptyTrajectory,
  MalformedJson,
  IoFailure,
  InvalidArgument,
};

inline const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml: return "MalformedXml";
    case ErrorCode::BranchingChain: return "BranchingChain";
    case ErrorCode::MissingInertial: return "MissingInertial";
    case ErrorCode::InvalidLimit: return "InvalidLimit";
    case ErrorCode::NonUnitAxis: return "NonUnitAxis";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularityStall: return "SingularityStall";
    case ErrorCode::JointLimitHit: return "JointLimitHit";
    case ErrorCode::IkFailure: return "IkFailure";
    case ErrorCode::MalformedTrajectory: return "MalformedTrajectory";
    case ErrorCode::EmptyTrajectory: return "EmptyTrajectory";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace paycap
