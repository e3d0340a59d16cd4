// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2 -mfma; only reached after a CPUID check.

#include <immintrin.h>

#include <cmath>

#include "unigraph/kernels.hpp"

namespace unigraph::kernels::avx2 {

namespace {

static_assert(sizeof(Complex) == 2 * sizeof(double));

inline const double* as_doubles(const Complex* p) noexcept {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(Complex* p) noexcept {
  return reinterpret_cast<double*>(p);
}

// (|x0|^2, |x1|^2, |x2|^2, |x3|^2) from two registers of interleaved re/im.
inline __m256d abs2_4(__m256d lo, __m256d hi) noexcept {
  const __m256d sl = _mm256_mul_pd(lo, lo);
  const __m256d sh = _mm256_mul_pd(hi, hi);
  // hadd yields (s0, s2, s1, s3).
  const __m256d h = _mm256_hadd_pd(sl, sh);
  return _mm256_permute4x64_pd(h, 0b11011000);
}

void caxpy(Complex a, const Complex* x, Complex* y, std::size_t n) noexcept {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xs = as_doubles(x);
  double* ys = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d xsw = _mm256_permute_pd(xv, 0b0101);
    const __m256d t = _mm256_mul_pd(ai, xsw);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, t);
    _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(_mm256_loadu_pd(ys + 2 * i), prod));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex(y[i].real() + (a.real() * xr - a.imag() * xi),
                   y[i].imag() + (a.real() * xi + a.imag() * xr));
  }
}

void abs2(const Complex* x, double* out, std::size_t n) noexcept {
  const double* xs = as_doubles(x);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d lo = _mm256_loadu_pd(xs + 2 * i);
    const __m256d hi = _mm256_loadu_pd(xs + 2 * i + 4);
    _mm256_storeu_pd(out + i, abs2_4(lo, hi));
  }
  for (; i < n; ++i) out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
}

double sum_abs2(const Complex* x, std::size_t n) noexcept {
  const double* xs = as_doubles(x);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d lo = _mm256_loadu_pd(xs + 2 * i);
    const __m256d hi = _mm256_loadu_pd(xs + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(lo, lo, acc0);
    acc1 = _mm256_fmadd_pd(hi, hi, acc1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

double entropy_abs2(const Complex* x, std::size_t n) noexcept {
  const double* xs = as_doubles(x);
  alignas(32) double p[4];
  double h = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_store_pd(p, abs2_4(_mm256_loadu_pd(xs + 2 * i), _mm256_loadu_pd(xs + 2 * i + 4)));
    for (double v : p) {
      if (v > 0.0) h -= v * std::log(v);
    }
  }
  for (; i < n; ++i) {
    const double v = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

}  // namespace

const KernelTable kTable{&caxpy, &abs2, &sum_abs2, &entropy_abs2};

}  // namespace unigraph::kernels::avx2
