// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "unigraph/kernels.hpp"

namespace unigraph::kernels {

namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("UNIGRAPH_ISA")) {
    if (std::string_view(env) == "scalar") return Isa::Scalar;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(UNIGRAPH_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) noexcept {
#if defined(UNIGRAPH_HAVE_AVX2)
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return avx2::kTable;
#endif
  (void)isa;
  return scalar::kTable;
}

const KernelTable& active() noexcept { return table(current().load(std::memory_order_relaxed)); }

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void select_isa(Isa isa) noexcept {
  if (isa_available(isa)) current().store(isa, std::memory_order_relaxed);
}

}  // namespace unigraph::kernels
