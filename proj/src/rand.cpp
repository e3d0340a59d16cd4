// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/rand.hpp"

#include <cmath>

#include "unigraph/error.hpp"

namespace unigraph {

namespace {

void require_dim(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::DimensionZero, "dimension must be >= 1");
}

}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed,
                           std::uint64_t stream_index) noexcept
    : master_seed_(master_seed),
      stream_index_(stream_index),
      key_(mix64(mix64(master_seed) ^ mix64(~stream_index))) {}

RandomStream RandomStream::substream(std::uint64_t index) const noexcept {
  return {master_seed_, stream_index_, mix64(key_ + mix64(index ^ 0xa5a5a5a5a5a5a5a5ULL))};
}

Complex Sampler::complex_normal() noexcept {
  // 1 - u keeps the log argument in (0, 1].
  const double r = std::sqrt(-std::log(1.0 - uniform()));
  const double t = kTwoPi * uniform();
  return {r * std::cos(t), r * std::sin(t)};
}

double Sampler::normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const Complex z = complex_normal();
  spare_ = z.imag() * std::sqrt(2.0);
  has_spare_ = true;
  return z.real() * std::sqrt(2.0);
}

Matrix ginibre(std::size_t dim, Sampler& sampler) {
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix g(n, n);
  Complex* data = g.data();
  for (Eigen::Index i = 0; i < n * n; ++i) data[i] = sampler.complex_normal();
  return g;
}

UnitaryMatrix haar_unitary(std::size_t dim, const RandomStream& stream) {
  require_dim(dim);
  Sampler sampler(stream);
  Eigen::HouseholderQR<Matrix> qr(ginibre(dim, sampler));
  Matrix q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double mod = std::abs(d);
    if (mod > 0.0) q.col(j) *= d / mod;
  }
  return UnitaryMatrix(std::move(q));
}

std::vector<double> random_phases(std::size_t dim, const RandomStream& stream) {
  require_dim(dim);
  Sampler sampler(stream);
  std::vector<double> phases(dim);
  for (auto& p : phases) p = kTwoPi * sampler.uniform();
  return phases;
}

UnitaryMatrix random_phases_diagonal(std::size_t dim, const RandomStream& stream) {
  const auto phases = random_phases(dim, stream);
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = std::polar(1.0, phases[i]);
  return UnitaryMatrix(std::move(d));
}

UnitaryMatrix sample_composed(std::size_t dim, const RandomStream& stream) {
  require_dim(dim);
  const auto p1 = random_phases(dim, stream.substream(0));
  const auto x = haar_unitary(dim, stream.substream(1));
  const auto p2 = random_phases(dim, stream.substream(2));
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::VectorXcd d1(n), d2(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d1(i) = std::polar(1.0, p1[i]);
    d2(i) = std::polar(1.0, p2[i]);
  }
  Matrix m = d1.asDiagonal() * x.matrix() * d2.asDiagonal() * x.matrix().adjoint();
  return UnitaryMatrix(std::move(m));
}

}  // namespace unigraph
