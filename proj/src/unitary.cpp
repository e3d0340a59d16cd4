// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/unitary.hpp"

#include <sstream>

#include "unigraph/error.hpp"

namespace unigraph {

double default_unitarity_tolerance(std::size_t dim) noexcept {
  return dim > 1024 ? 1e-14 * static_cast<double>(dim) : 1e-12;
}

double unitarity_defect(const Matrix& m) {
  Matrix gram = m.adjoint() * m;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(Matrix entries, double tolerance)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "unitary matrix must be square and non-empty");
  }
  const std::size_t n = dim();
  const double tol = tolerance < 0.0 ? default_unitarity_tolerance(n) : tolerance;
  const double defect = unitarity_defect(entries_);
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "matrix of order " << n << " is not unitary: defect " << defect
        << " > " << tol;
    throw Error(ErrorCode::NotUnitary, msg.str(), n);
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::DimensionZero, "identity of order 0");
  const auto n = static_cast<Eigen::Index>(dim);
  return {Matrix::Identity(n, n), Trusted{}};
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::BlockDimMismatch, "product of unitaries of different order");
  }
  return UnitaryMatrix(a.entries_ * b.entries_);
}

}  // namespace unigraph
