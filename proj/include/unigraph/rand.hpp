// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "unigraph/types.hpp"
#include "unigraph/unitary.hpp"

namespace unigraph {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic sample source. The generator state is derived by hashing
/// (master_seed, stream_index) and the path of substream() calls, so a given
/// key always yields the same numbers no matter which thread or in what order
/// it is consumed.
///
/// Number format: std::mt19937_64 seeded with the key; uniforms are
/// (x >> 11) * 2^-53; complex normals use Box-Muller with E|z|^2 = 1.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

  [[nodiscard]] RandomStream substream(std::uint64_t index) const noexcept;

  [[nodiscard]] std::uint64_t master_seed() const noexcept { return master_seed_; }
  [[nodiscard]] std::uint64_t stream_index() const noexcept { return stream_index_; }
  [[nodiscard]] std::uint64_t key() const noexcept { return key_; }

  friend bool operator==(const RandomStream&, const RandomStream&) = default;

 private:
  RandomStream(std::uint64_t master, std::uint64_t index, std::uint64_t key) noexcept
      : master_seed_(master), stream_index_(index), key_(key) {}

  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t key_;
};

/// Stateful generator opened on a stream.
class Sampler {
 public:
  explicit Sampler(const RandomStream& stream) : engine_(stream.key()) {}

  /// Uniform on [0, 1).
  double uniform() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal() noexcept;
  /// Real standard normal.
  double normal() noexcept;

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// N x N Ginibre matrix of i.i.d. standard complex Gaussians, filled
/// column-major.
Matrix ginibre(std::size_t dim, Sampler& sampler);

/// Haar-distributed unitary: Q * diag(r_jj / |r_jj|) from the QR factors of a
/// Ginibre matrix.
UnitaryMatrix haar_unitary(std::size_t dim, const RandomStream& stream);

/// N i.i.d. phases uniform on [0, 2pi), in draw order.
std::vector<double> random_phases(std::size_t dim, const RandomStream& stream);

UnitaryMatrix random_phases_diagonal(std::size_t dim, const RandomStream& stream);

/// P1 X P2 X^dagger with P1 = substream 0, X = substream 1, P2 = substream 2.
UnitaryMatrix sample_composed(std::size_t dim, const RandomStream& stream);

}  // namespace unigraph
