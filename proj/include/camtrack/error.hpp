// Copyright (c) 2026 camtrack contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace camtrack {

enum class ErrorCode {
  // numerics
  NonSymmetric,
  NoConvergence,
  RankDeficient,
  NonFiniteObjective,
  // geometry
  PointAtInfinity,
  InvalidPhysical,
  DegenerateProjection,
  NearPiRotation,
  // calibration
  InsufficientPoints,
  DegenerateConfiguration,
  InconsistentB,
  SingularInput,
  SingularIntrinsics,
  // tracking
  SingularGeometry,
  SingularJacobian,
  // synth
  PointBehindCamera,
  // io
  ParseError,
  ValidationError,
  SchemaError,
  // generic precondition violation
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Input/validation errors map to CLI exit code 2, numerical failures to 3.
inline bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidPhysical:
    case ErrorCode::InsufficientPoints:
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::SchemaError:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NonFiniteObjective: return "NonFiniteObjective";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::InvalidPhysical: return "InvalidPhysical";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::NearPiRotation: return "NearPiRotation";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::InconsistentB: return "InconsistentB";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::SingularIntrinsics: return "SingularIntrinsics";
    case ErrorCode::SingularGeometry: return "SingularGeometry";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::PointBehindCamera: return "PointBehindCamera";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace camtrack
