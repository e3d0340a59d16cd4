// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unigraph/spectral.hpp"
#include "unigraph/types.hpp"
#include "unigraph/unitary.hpp"

// All entropies are in nats.
namespace unigraph {

/// -sum p ln p with 0 ln 0 = 0. Throws NotAProbabilityVector unless entries are
/// non-negative and sum to 1 within 1e-8.
double shannon_entropy(std::span<const double> p);

/// -(1/N) sum_ij |m_ij|^2 ln |m_ij|^2 with N the column count.
double matrix_entropy(const Matrix& m);

/// Average Shannon entropy of the eigenvectors' squared moduli.
double eigenvector_entropy(const SpectralData& spec);

/// Element entropy of U.
double element_entropy(const UnitaryMatrix& u);

/// sum_{j=2}^{N} 1/j = psi(N+1) - psi(2); the mean entropy of a random
/// complex unit vector of length N.
double mean_random_vector_entropy(std::size_t n);

/// Unit-trace Hermitian positive semidefinite matrix.
class ReducedState {
 public:
  /// Checks trace (1e-10), Hermiticity (1e-12) and eigenvalues (>= -1e-10).
  explicit ReducedState(Matrix entries);

  [[nodiscard]] std::size_t dim() const noexcept {
    return static_cast<std::size_t>(entries_.rows());
  }
  [[nodiscard]] const Matrix& matrix() const noexcept { return entries_; }
  /// Eigenvalues ascending, clamped at 0.
  [[nodiscard]] const RealVector& eigenvalues() const noexcept { return eigenvalues_; }

 private:
  Matrix entries_;
  RealVector eigenvalues_;
};

/// Tr over the particles not in `keep` of |state><state|. `keep` holds sorted
/// 0-based particles; rows follow the multi-index order of the kept particles.
/// Throws EmptyKeepSet, FullKeepSet, IndexOutOfRange, NormViolation
/// (|norm - 1| > 1e-10).
ReducedState partial_trace(const Vector& state, std::span<const std::size_t> dims,
                           std::span<const std::size_t> keep);

double von_neumann_entropy(const ReducedState& sigma);
/// Tr sigma^2 as the squared Frobenius norm.
double purity(const ReducedState& sigma);

/// ln N_A - (N_A - 1) / (2 N_B). Throws OrderViolation when N_A > N_B.
double page_mean_entropy(std::size_t dim_a, std::size_t dim_b);

/// (N_A + N_B) / (N_A N_B + 1).
double mean_purity(std::size_t dim_a, std::size_t dim_b);

struct Projection {
  Vector state;   ///< renormalized slice over the remaining particles
  double weight;  ///< squared norm of the slice
};

/// Slice <i|state> on `particle` (0-based) at basis index `basis_index`.
/// Throws OutOfRange and ZeroNormProjection (weight < 1e-14).
Projection project_onto_basis(const Vector& state, std::span<const std::size_t> dims,
                              std::size_t particle, std::size_t basis_index);

enum class ProjectionWeighting { ByWeight, Uniform };

struct ProjectedEntanglement {
  double mean_purity = 0.0;
  double mean_entropy = 0.0;
  std::size_t slices = 0;  ///< non-null slices that were averaged
};

/// Projects `state` onto every basis vector of `particle`, traces the remaining
/// system down to `keep` (0-based indices into the original particles, not
/// containing `particle`) and averages purity and entropy over the slices.
/// Null slices are skipped and the average renormalized.
ProjectedEntanglement projected_entanglement(const Vector& state,
                                             std::span<const std::size_t> dims,
                                             std::size_t particle,
                                             std::span<const std::size_t> keep,
                                             ProjectionWeighting weighting);

}  // namespace unigraph
