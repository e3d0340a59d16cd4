// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/error.hpp"

namespace unigraph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingParticle: return "MissingParticle";
    case ErrorCode::DuplicateParticle: return "DuplicateParticle";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OddParticleCount: return "OddParticleCount";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::BlockDimMismatch: return "BlockDimMismatch";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::FewerThanTwoPhases: return "FewerThanTwoPhases";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::NotAProbabilityVector: return "NotAProbabilityVector";
    case ErrorCode::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorCode::FullKeepSet: return "FullKeepSet";
    case ErrorCode::NormViolation: return "NormViolation";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::ZeroNormProjection: return "ZeroNormProjection";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IncompatibleAnalysis: return "IncompatibleAnalysis";
  }
  return "Unknown";
}

bool Error::is_spec_error() const noexcept {
  switch (code_) {
    case ErrorCode::MissingParticle:
    case ErrorCode::DuplicateParticle:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::OddParticleCount:
    case ErrorCode::InvalidPartition:
    case ErrorCode::SyntaxError:
    case ErrorCode::InvalidDimension:
    case ErrorCode::DimensionOverflow:
    case ErrorCode::DimensionZero:
    case ErrorCode::InvalidArgument:
    case ErrorCode::IncompatibleAnalysis:
      return true;
    default:
      return false;
  }
}

}  // namespace unigraph
