// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "unigraph/types.hpp"
#include "unigraph/unitary.hpp"

namespace unigraph {

/// Eigenphases sorted ascending in [0, 2pi); column j of `vectors` belongs to
/// phases[j]. Columns are orthonormal.
struct SpectralData {
  std::vector<double> phases;
  Matrix vectors;
};

/// Complex Schur factorization U = Q T Q^dagger. For a unitary (normal) matrix
/// T is diagonal up to rounding, so the Schur vectors are the eigenvectors.
/// Throws ConvergenceFailure if the QR iteration does not converge.
SpectralData eigendecompose(const UnitaryMatrix& u);

/// Eigenphases only (no eigenvectors), sorted ascending in [0, 2pi).
std::vector<double> eigenphases(const UnitaryMatrix& u);

/// Maps an angle to [0, 2pi).
double wrap_phase(double theta) noexcept;

/// Nearest-neighbour spacings scaled by N/(2pi). With `include_wrap` the
/// circular gap theta_1 + 2pi - theta_N is appended, giving N spacings whose
/// mean is 1; otherwise the N-1 interior gaps only.
/// Throws FewerThanTwoPhases.
std::vector<double> spacings(std::span<const double> sorted_phases, bool include_wrap = true);

enum class Reference { Wigner, Poisson };

/// (32/pi^2) S^2 exp(-4 S^2 / pi). Throws NegativeArgument for S < 0.
double wigner_pdf(double s);
/// exp(-S). Throws NegativeArgument for S < 0.
double poisson_pdf(double s);

/// CDF of the chosen reference density. The Wigner branch integrates the pdf
/// with adaptive Gauss-Kronrod quadrature (absolute error <= 1e-10); the
/// Poisson branch is 1 - exp(-S).
double reference_cdf(Reference which, double s);

/// sup |F_empirical - F_reference|. Throws EmptySample.
double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf);
double ks_statistic(std::span<const double> sample, Reference which);

struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t degrees_of_freedom = 0;
};

/// Pearson chi-square of the phases against the uniform density on [0, 2pi)
/// using `bins` equal bins. Throws InsufficientData when fewer than 10*bins
/// phases are given.
ChiSquareResult phase_uniformity(std::span<const double> phases, std::size_t bins);

/// Fixed-width histogram with an explicit out-of-range tally. Merging is
/// exact (integer counts), so reductions are order independent.
class Histogram {
 public:
  Histogram(double lo, double hi, std::size_t bins);
  /// 50 bins on [0, 4].
  static Histogram spacing_default() { return {0.0, 4.0, 50}; }

  void add(double x) noexcept;
  void add(std::span<const double> xs) noexcept;
  void merge(const Histogram& other);

  [[nodiscard]] std::size_t bins() const noexcept { return counts_.size(); }
  [[nodiscard]] double lo() const noexcept { return lo_; }
  [[nodiscard]] double hi() const noexcept { return hi_; }
  [[nodiscard]] double bin_width() const noexcept {
    return (hi_ - lo_) / static_cast<double>(counts_.size());
  }
  [[nodiscard]] double edge(std::size_t i) const noexcept;
  [[nodiscard]] const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  [[nodiscard]] std::size_t overflow() const noexcept { return overflow_; }
  [[nodiscard]] std::size_t total() const noexcept { return total_; }
  /// counts / (total * width): integrates to the in-range fraction.
  [[nodiscard]] std::vector<double> density() const;

  /// bin_left,bin_right,count,density rows plus a final overflow row.
  void write_csv(std::ostream& out) const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  double lo_;
  double hi_;
  std::vector<std::size_t> counts_;
  std::size_t overflow_ = 0;
  std::size_t total_ = 0;
};

}  // namespace unigraph
