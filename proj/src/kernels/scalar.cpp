// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "unigraph/kernels.hpp"

namespace unigraph::kernels::scalar {

namespace {

void caxpy(Complex a, const Complex* x, Complex* y, std::size_t n) noexcept {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex(y[i].real() + (ar * xr - ai * xi),
                   y[i].imag() + (ar * xi + ai * xr));
  }
}

void abs2(const Complex* x, double* out, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
}

double sum_abs2(const Complex* x, std::size_t n) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

double entropy_abs2(const Complex* x, std::size_t n) noexcept {
  double h = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace

const KernelTable kTable{&caxpy, &abs2, &sum_abs2, &entropy_abs2};

}  // namespace unigraph::kernels::scalar
