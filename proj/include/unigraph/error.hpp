// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace unigraph {

enum class ErrorCode {
  // graph
  MissingParticle,
  DuplicateParticle,
  IndexOutOfRange,
  OddParticleCount,
  InvalidPartition,
  SyntaxError,
  InvalidDimension,
  DimensionOverflow,
  // rand / tensor
  DimensionZero,
  NotUnitary,
  BlockDimMismatch,
  DimensionCapExceeded,
  OutOfRange,
  // spectral
  ConvergenceFailure,
  FewerThanTwoPhases,
  NegativeArgument,
  EmptySample,
  InsufficientData,
  // entropy
  NotAProbabilityVector,
  EmptyKeepSet,
  FullKeepSet,
  NormViolation,
  OrderViolation,
  ZeroNormProjection,
  // ensemble / cli
  InvalidArgument,
  IncompatibleAnalysis,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library error. `index()` carries the offending particle or basis index
/// (1-based for particles) or a dimension, when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<std::uint64_t> index = std::nullopt)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::optional<std::uint64_t> index() const noexcept {
    return index_;
  }

  /// True for errors raised while validating a graph spec.
  [[nodiscard]] bool is_spec_error() const noexcept;

 private:
  ErrorCode code_;
  std::optional<std::uint64_t> index_;
};

}  // namespace unigraph
