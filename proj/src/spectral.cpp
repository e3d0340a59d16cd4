// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "unigraph/error.hpp"

namespace unigraph {

namespace {

void require_non_negative(double s) {
  if (!(s >= 0.0)) {
    throw Error(ErrorCode::NegativeArgument, "spacing argument must be >= 0");
  }
}

std::vector<std::size_t> order_by_phase(const std::vector<double>& phases) {
  std::vector<std::size_t> order(phases.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return phases[a] < phases[b]; });
  return order;
}

Eigen::ComplexSchur<Matrix> schur_of(const UnitaryMatrix& u, bool with_vectors) {
  Eigen::ComplexSchur<Matrix> schur(u.matrix(), with_vectors);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure,
                "Schur iteration did not converge for a matrix of order " +
                    std::to_string(u.dim()),
                u.dim());
  }
  return schur;
}

}  // namespace

double wrap_phase(double theta) noexcept {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

SpectralData eigendecompose(const UnitaryMatrix& u) {
  const auto schur = schur_of(u, true);
  const auto& t = schur.matrixT();
  const auto& q = schur.matrixU();
  const auto n = static_cast<std::size_t>(t.rows());
  std::vector<double> raw(n);
  for (std::size_t j = 0; j < n; ++j) {
    raw[j] = wrap_phase(std::arg(t(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j))));
  }
  const auto order = order_by_phase(raw);
  SpectralData out;
  out.phases.resize(n);
  out.vectors.resize(q.rows(), q.cols());
  for (std::size_t j = 0; j < n; ++j) {
    out.phases[j] = raw[order[j]];
    out.vectors.col(static_cast<Eigen::Index>(j)) =
        q.col(static_cast<Eigen::Index>(order[j])).normalized();
  }
  return out;
}

std::vector<double> eigenphases(const UnitaryMatrix& u) {
  const auto schur = schur_of(u, false);
  const auto& t = schur.matrixT();
  std::vector<double> phases(static_cast<std::size_t>(t.rows()));
  for (Eigen::Index j = 0; j < t.rows(); ++j) {
    phases[static_cast<std::size_t>(j)] = wrap_phase(std::arg(t(j, j)));
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

std::vector<double> spacings(std::span<const double> sorted_phases, bool include_wrap) {
  const std::size_t n = sorted_phases.size();
  if (n < 2) {
    throw Error(ErrorCode::FewerThanTwoPhases, "need at least two phases", n);
  }
  const double scale = static_cast<double>(n) / kTwoPi;
  std::vector<double> s;
  s.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s.push_back(scale * (sorted_phases[i + 1] - sorted_phases[i]));
  }
  if (include_wrap) s.push_back(scale * (sorted_phases[0] + kTwoPi - sorted_phases[n - 1]));
  return s;
}

double wigner_pdf(double s) {
  require_non_negative(s);
  constexpr double pi = std::numbers::pi;
  return (32.0 / (pi * pi)) * s * s * std::exp(-4.0 * s * s / pi);
}

double poisson_pdf(double s) {
  require_non_negative(s);
  return std::exp(-s);
}

double reference_cdf(Reference which, double s) {
  require_non_negative(s);
  if (which == Reference::Poisson) return -std::expm1(-s);
  if (s == 0.0) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  // Beyond S = 12 the remaining mass is below 1e-78.
  const double upper = std::min(s, 12.0);
  double error = 0.0;
  const double value = gauss_kronrod<double, 15>::integrate(
      [](double x) { return wigner_pdf(x); }, 0.0, upper, 15, 1e-13, &error);
  return std::min(value, 1.0);
}

double ks_statistic(std::span<const double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw Error(ErrorCode::EmptySample, "KS statistic of an empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return std::clamp(d, 0.0, 1.0);
}

double ks_statistic(std::span<const double> sample, Reference which) {
  return ks_statistic(sample, [which](double s) { return reference_cdf(which, std::max(s, 0.0)); });
}

ChiSquareResult phase_uniformity(std::span<const double> phases, std::size_t bins) {
  if (bins < 2) throw Error(ErrorCode::InvalidArgument, "chi-square needs >= 2 bins");
  if (phases.size() < 10 * bins) {
    throw Error(ErrorCode::InsufficientData,
                "need at least " + std::to_string(10 * bins) + " phases, got " +
                    std::to_string(phases.size()),
                phases.size());
  }
  Histogram h(0.0, kTwoPi, bins);
  for (double p : phases) h.add(wrap_phase(p));
  const double expected = static_cast<double>(phases.size()) / static_cast<double>(bins);
  ChiSquareResult r;
  for (std::size_t c : h.counts()) {
    const double diff = static_cast<double>(c) - expected;
    r.statistic += diff * diff / expected;
  }
  r.degrees_of_freedom = bins - 1;
  r.p_value = boost::math::gamma_q(0.5 * static_cast<double>(r.degrees_of_freedom),
                                   0.5 * r.statistic);
  return r;
}

Histogram::Histogram(double lo, double hi, std::size_t bins)
    : lo_(lo), hi_(hi), counts_(bins, 0) {
  if (bins == 0 || !(hi > lo)) {
    throw Error(ErrorCode::InvalidArgument, "histogram needs bins >= 1 and hi > lo");
  }
}

double Histogram::edge(std::size_t i) const noexcept {
  return i == counts_.size() ? hi_ : lo_ + static_cast<double>(i) * bin_width();
}

void Histogram::add(double x) noexcept {
  ++total_;
  if (!(x >= lo_ && x < hi_)) {
    ++overflow_;
    return;
  }
  auto bin = static_cast<std::size_t>((x - lo_) / bin_width());
  counts_[std::min(bin, counts_.size() - 1)] += 1;
}

void Histogram::add(std::span<const double> xs) noexcept {
  for (double x : xs) add(x);
}

void Histogram::merge(const Histogram& other) {
  if (other.lo_ != lo_ || other.hi_ != hi_ || other.counts_.size() != counts_.size()) {
    throw Error(ErrorCode::InvalidArgument, "merging histograms with different binning");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  overflow_ += other.overflow_;
  total_ += other.total_;
}

std::vector<double> Histogram::density() const {
  std::vector<double> d(counts_.size(), 0.0);
  if (total_ == 0) return d;
  const double norm = static_cast<double>(total_) * bin_width();
  for (std::size_t i = 0; i < counts_.size(); ++i) d[i] = static_cast<double>(counts_[i]) / norm;
  return d;
}

void Histogram::write_csv(std::ostream& out) const {
  const auto d = density();
  const auto old_precision = out.precision(17);
  out << "bin_left,bin_right,count,density\n";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out << edge(i) << ',' << edge(i + 1) << ',' << counts_[i] << ',' << d[i] << '\n';
  }
  out << "overflow,," << overflow_ << ",\n";
  out.precision(old_precision);
}

}  // namespace unigraph
