// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "unigraph/types.hpp"

namespace unigraph {

/// Default unitarity tolerance: 1e-12, or 1e-14 * N once N exceeds 1024.
double default_unitarity_tolerance(std::size_t dim) noexcept;

/// max |(M^dagger M - I)_ij|.
double unitarity_defect(const Matrix& m);

/// Dense complex square matrix whose unitarity was checked on construction.
class UnitaryMatrix {
 public:
  /// Throws NotUnitary when the defect exceeds `tolerance` (negative selects
  /// the default) and InvalidArgument for non-square input.
  explicit UnitaryMatrix(Matrix entries, double tolerance = -1.0);

  static UnitaryMatrix identity(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept {
    return static_cast<std::size_t>(entries_.rows());
  }
  [[nodiscard]] const Matrix& matrix() const noexcept { return entries_; }
  [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  struct Trusted {};
  UnitaryMatrix(Matrix entries, Trusted) : entries_(std::move(entries)) {}

  Matrix entries_;
};

}  // namespace unigraph
