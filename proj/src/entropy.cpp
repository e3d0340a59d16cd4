// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unigraph/error.hpp"
#include "unigraph/kernels.hpp"
#include "unigraph/tensor.hpp"

namespace unigraph {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kNullSlice = 1e-14;

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return n;
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  double h = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::NotAProbabilityVector, "negative or NaN probability");
    }
    total += v;
    if (v > 0.0) h -= v * std::log(v);
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw Error(ErrorCode::NotAProbabilityVector,
                "probabilities sum to " + std::to_string(total));
  }
  return h;
}

double matrix_entropy(const Matrix& m) {
  // Column-major storage is contiguous, so the whole matrix is one span.
  const auto& kern = kernels::active();
  const double h = kern.entropy_abs2(m.data(), static_cast<std::size_t>(m.size()));
  return h / static_cast<double>(m.cols());
}

double eigenvector_entropy(const SpectralData& spec) { return matrix_entropy(spec.vectors); }

double element_entropy(const UnitaryMatrix& u) { return matrix_entropy(u.matrix()); }

double mean_random_vector_entropy(std::size_t n) {
  double s = 0.0;
  // Summing small terms first keeps the rounding error at a few ulps.
  for (std::size_t j = n; j >= 2; --j) s += 1.0 / static_cast<double>(j);
  return s;
}

ReducedState::ReducedState(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "reduced state must be square and non-empty");
  }
  const Complex trace = entries_.trace();
  if (std::abs(trace - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::NormViolation, "reduced state trace differs from 1");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "reduced state is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver failed");
  }
  eigenvalues_ = solver.eigenvalues();
  if (eigenvalues_.minCoeff() < -1e-10) {
    throw Error(ErrorCode::InvalidArgument, "reduced state has a negative eigenvalue");
  }
  eigenvalues_ = eigenvalues_.cwiseMax(0.0);
}

ReducedState partial_trace(const Vector& state, std::span<const std::size_t> dims,
                           std::span<const std::size_t> keep) {
  const std::size_t k = dims.size();
  if (keep.empty()) throw Error(ErrorCode::EmptyKeepSet, "keep set is empty");
  std::vector<bool> kept(k, false);
  for (std::size_t p : keep) {
    if (p >= k) {
      throw Error(ErrorCode::IndexOutOfRange, "kept particle beyond k", p + 1);
    }
    if (kept[p]) throw Error(ErrorCode::DuplicateParticle, "kept particle repeated", p + 1);
    kept[p] = true;
  }
  if (keep.size() == k) throw Error(ErrorCode::FullKeepSet, "keep set contains every particle");
  const std::size_t n = product(dims);
  if (static_cast<std::size_t>(state.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "state length does not match the dimensions");
  }
  const double norm2 = kernels::sum_abs2({state.data(), n});
  if (std::abs(std::sqrt(norm2) - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::NormViolation, "state is not normalized");
  }

  std::vector<std::size_t> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<std::size_t> dims_a;
  std::vector<std::size_t> dims_b;
  for (std::size_t p = 0; p < k; ++p) (kept[p] ? dims_a : dims_b).push_back(dims[p]);
  const std::size_t na = product(dims_a);
  const std::size_t nb = product(dims_b);

  // Reshape into an na x nb matrix, then sigma = M M^dagger.
  Matrix m(static_cast<Eigen::Index>(na), static_cast<Eigen::Index>(nb));
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (kept[p]) {
        a = a * dims[p] + digits[p];
      } else {
        b = b * dims[p] + digits[p];
      }
    }
    m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = state(static_cast<Eigen::Index>(g));
    for (std::size_t p = k; p-- > 0;) {
      if (++digits[p] < dims[p]) break;
      digits[p] = 0;
    }
  }
  Matrix sigma = m * m.adjoint();
  sigma = (0.5 * (sigma + sigma.adjoint())).eval();
  return ReducedState(std::move(sigma));
}

double von_neumann_entropy(const ReducedState& sigma) {
  double h = 0.0;
  for (double lambda : sigma.eigenvalues()) {
    if (lambda > 0.0) h -= lambda * std::log(lambda);
  }
  return h;
}

double purity(const ReducedState& sigma) { return sigma.matrix().squaredNorm(); }

double page_mean_entropy(std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0) {
    throw Error(ErrorCode::InvalidArgument, "subsystem dimensions must be >= 1");
  }
  if (dim_a > dim_b) {
    throw Error(ErrorCode::OrderViolation, "mean entropy formula needs N_A <= N_B");
  }
  const double na = static_cast<double>(dim_a);
  return std::log(na) - (na - 1.0) / (2.0 * static_cast<double>(dim_b));
}

double mean_purity(std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0) {
    throw Error(ErrorCode::InvalidArgument, "subsystem dimensions must be >= 1");
  }
  const double na = static_cast<double>(dim_a);
  const double nb = static_cast<double>(dim_b);
  return (na + nb) / (na * nb + 1.0);
}

Projection project_onto_basis(const Vector& state, std::span<const std::size_t> dims,
                              std::size_t particle, std::size_t basis_index) {
  if (particle >= dims.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "projected particle beyond k", particle + 1);
  }
  if (basis_index >= dims[particle]) {
    throw Error(ErrorCode::OutOfRange, "basis index beyond the particle dimension", basis_index);
  }
  const std::size_t n = product(dims);
  if (static_cast<std::size_t>(state.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "state length does not match the dimensions");
  }
  // g = outer * (d_p * inner) + digit * inner + rest
  const std::size_t inner = strides(dims)[particle];
  const std::size_t outer = n / (inner * dims[particle]);
  Vector slice(static_cast<Eigen::Index>(outer * inner));
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t src = o * dims[particle] * inner + basis_index * inner;
    slice.segment(static_cast<Eigen::Index>(o * inner), static_cast<Eigen::Index>(inner)) =
        state.segment(static_cast<Eigen::Index>(src), static_cast<Eigen::Index>(inner));
  }
  const double weight = kernels::sum_abs2({slice.data(), static_cast<std::size_t>(slice.size())});
  if (weight < kNullSlice) {
    throw Error(ErrorCode::ZeroNormProjection, "projected slice is numerically null", basis_index);
  }
  slice /= std::sqrt(weight);
  return {std::move(slice), weight};
}

ProjectedEntanglement projected_entanglement(const Vector& state,
                                             std::span<const std::size_t> dims,
                                             std::size_t particle,
                                             std::span<const std::size_t> keep,
                                             ProjectionWeighting weighting) {
  if (particle >= dims.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "projected particle beyond k", particle + 1);
  }
  if (dims.size() < 3) {
    throw Error(ErrorCode::IncompatibleAnalysis, "projection needs at least three particles");
  }
  std::vector<std::size_t> rest_dims;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (p != particle) rest_dims.push_back(dims[p]);
  }
  std::vector<std::size_t> rest_keep;
  for (std::size_t p : keep) {
    if (p == particle) {
      throw Error(ErrorCode::InvalidArgument, "keep set contains the projected particle");
    }
    rest_keep.push_back(p > particle ? p - 1 : p);
  }
  ProjectedEntanglement out;
  double total_weight = 0.0;
  for (std::size_t i = 0; i < dims[particle]; ++i) {
    Projection proj{Vector(), 0.0};
    try {
      proj = project_onto_basis(state, dims, particle, i);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ZeroNormProjection) continue;
      throw;
    }
    const ReducedState sigma = partial_trace(proj.state, rest_dims, rest_keep);
    const double w = weighting == ProjectionWeighting::ByWeight ? proj.weight : 1.0;
    out.mean_purity += w * purity(sigma);
    out.mean_entropy += w * von_neumann_entropy(sigma);
    total_weight += w;
    ++out.slices;
  }
  if (out.slices > 0) {
    out.mean_purity /= total_weight;
    out.mean_entropy /= total_weight;
  }
  return out;
}

}  // namespace unigraph
