// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "unigraph/types.hpp"

/// Data-parallel inner loops. Each kernel has a scalar reference version and,
/// on x86-64, an AVX2+FMA version; the implementation is picked once at
/// startup from CPUID. Setting UNIGRAPH_ISA=scalar forces the reference path.
namespace unigraph::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  /// y[i] += a * x[i]
  void (*caxpy)(Complex a, const Complex* x, Complex* y, std::size_t n) noexcept;
  /// out[i] = |x[i]|^2
  void (*abs2)(const Complex* x, double* out, std::size_t n) noexcept;
  /// sum |x[i]|^2
  double (*sum_abs2)(const Complex* x, std::size_t n) noexcept;
  /// sum over i of -p ln p with p = |x[i]|^2 (zero moduli contribute 0)
  double (*entropy_abs2)(const Complex* x, std::size_t n) noexcept;
};

bool isa_available(Isa isa) noexcept;
/// Table for a specific ISA; falls back to scalar when unavailable.
const KernelTable& table(Isa isa) noexcept;
const KernelTable& active() noexcept;
Isa active_isa() noexcept;
/// Overrides the selection (tests and benchmarks). Ignored when unavailable.
void select_isa(Isa isa) noexcept;

namespace scalar {
extern const KernelTable kTable;
}
#if defined(UNIGRAPH_HAVE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}
#endif

inline void caxpy(Complex a, std::span<const Complex> x, std::span<Complex> y) noexcept {
  active().caxpy(a, x.data(), y.data(), x.size());
}
inline void abs2(std::span<const Complex> x, std::span<double> out) noexcept {
  active().abs2(x.data(), out.data(), x.size());
}
inline double sum_abs2(std::span<const Complex> x) noexcept {
  return active().sum_abs2(x.data(), x.size());
}
inline double entropy_abs2(std::span<const Complex> x) noexcept {
  return active().entropy_abs2(x.data(), x.size());
}

}  // namespace unigraph::kernels
