// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/tensor.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "unigraph/error.hpp"
#include "unigraph/kernels.hpp"

namespace unigraph {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t n = 1;
  for (std::size_t d : dims) {
    if (d != 0 && n > std::numeric_limits<std::size_t>::max() / d) {
      throw Error(ErrorCode::DimensionOverflow, "dimension product overflows");
    }
    n *= d;
  }
  return n;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "total dimension " + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap),
                n);
  }
}

// Offsets of every block basis state relative to a base index whose clique
// digits are all zero.
std::vector<std::size_t> block_offsets(const Clique& clique,
                                       std::span<const std::size_t> dims,
                                       std::span<const std::size_t> stride) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t p : clique.particles()) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[p]);
    for (std::size_t o : offsets) {
      for (std::size_t digit = 0; digit < dims[p]; ++digit) {
        next.push_back(o + digit * stride[p]);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<std::size_t> block_bases(const Clique& clique,
                                     std::span<const std::size_t> dims,
                                     std::span<const std::size_t> stride) {
  std::vector<std::size_t> bases{0};
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (clique.contains(p)) continue;
    std::vector<std::size_t> next;
    next.reserve(bases.size() * dims[p]);
    for (std::size_t b : bases) {
      for (std::size_t digit = 0; digit < dims[p]; ++digit) {
        next.push_back(b + digit * stride[p]);
      }
    }
    bases = std::move(next);
  }
  return bases;
}

std::size_t clique_dim(const Clique& clique, std::span<const std::size_t> dims) {
  std::size_t d = 1;
  for (std::size_t p : clique.particles()) {
    if (p >= dims.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "clique particle beyond k", p + 1);
    }
    d *= dims[p];
  }
  return d;
}

bool skipped(const Layer& layer, const Clique& clique) {
  return clique.size() == 1 && layer.singletons() == SingletonMode::Identity;
}

}  // namespace

std::vector<std::size_t> strides(std::span<const std::size_t> dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t j = dims.size(); j-- > 1;) s[j - 1] = s[j] * dims[j];
  return s;
}

std::size_t global_index(std::span<const std::size_t> digits,
                         std::span<const std::size_t> dims) {
  if (digits.size() != dims.size()) {
    throw Error(ErrorCode::OutOfRange, "multi-index length does not match k");
  }
  const auto s = strides(dims);
  std::size_t g = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (digits[j] >= dims[j]) {
      throw Error(ErrorCode::OutOfRange,
                  "digit " + std::to_string(digits[j]) + " out of range for particle " +
                      std::to_string(j + 1),
                  j + 1);
    }
    g += digits[j] * s[j];
  }
  return g;
}

std::vector<std::size_t> multi_index(std::size_t g, std::span<const std::size_t> dims) {
  if (g >= product(dims)) {
    throw Error(ErrorCode::OutOfRange, "global index " + std::to_string(g) + " >= N", g);
  }
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t j = dims.size(); j-- > 0;) {
    digits[j] = g % dims[j];
    g /= dims[j];
  }
  return digits;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ra = static_cast<std::size_t>(a.rows());
  const std::size_t rb = static_cast<std::size_t>(b.rows());
  const std::size_t ca = static_cast<std::size_t>(a.cols());
  const std::size_t cb = static_cast<std::size_t>(b.cols());
  const std::size_t rows[] = {ra, rb};
  const std::size_t cols[] = {ca, cb};
  product(rows);
  product(cols);
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  const std::size_t dims[] = {a.dim(), b.dim()};
  product(dims);
  return UnitaryMatrix(kron(a.matrix(), b.matrix()));
}

void apply_block_right(Matrix& m, const Matrix& block, const Clique& clique,
                       std::span<const std::size_t> dims) {
  const std::size_t n = product(dims);
  const std::size_t d = clique_dim(clique, dims);
  if (static_cast<std::size_t>(block.rows()) != d || static_cast<std::size_t>(block.cols()) != d) {
    throw Error(ErrorCode::BlockDimMismatch,
                "block of order " + std::to_string(block.rows()) + " on a clique of dimension " +
                    std::to_string(d),
                d);
  }
  if (static_cast<std::size_t>(m.cols()) != n) {
    throw Error(ErrorCode::BlockDimMismatch, "matrix width does not match N", n);
  }
  const auto stride = strides(dims);
  const auto offsets = block_offsets(clique, dims, stride);
  const auto bases = block_bases(clique, dims, stride);
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto& kern = kernels::active();

  Matrix saved(m.rows(), static_cast<Eigen::Index>(d));
  for (std::size_t base : bases) {
    for (std::size_t i = 0; i < d; ++i) {
      saved.col(static_cast<Eigen::Index>(i)) = m.col(static_cast<Eigen::Index>(base + offsets[i]));
    }
    for (std::size_t j = 0; j < d; ++j) {
      Complex* target = m.col(static_cast<Eigen::Index>(base + offsets[j])).data();
      std::fill(target, target + rows, Complex{});
      for (std::size_t i = 0; i < d; ++i) {
        const Complex coeff = block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (coeff == Complex{}) continue;
        kern.caxpy(coeff, saved.col(static_cast<Eigen::Index>(i)).data(), target, rows);
      }
    }
  }
}

UnitaryMatrix lift(const UnitaryMatrix& block, const Clique& clique,
                   std::span<const std::size_t> dims) {
  const std::size_t n = product(dims);
  const auto size = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Identity(size, size);
  apply_block_right(m, block.matrix(), clique, dims);
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix layer_unitary(const Layer& layer, std::span<const std::size_t> dims,
                            const RandomStream& stream) {
  validate_layer(layer, dims.size());
  const auto size = static_cast<Eigen::Index>(product(dims));
  Matrix m = Matrix::Identity(size, size);
  for (std::size_t c = 0; c < layer.cliques().size(); ++c) {
    const Clique& clique = layer.cliques()[c];
    if (skipped(layer, clique)) continue;
    const auto block = haar_unitary(clique_dim(clique, dims), stream.substream(c));
    apply_block_right(m, block.matrix(), clique, dims);
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix evolution_unitary(const InteractionGraph& graph, const RandomStream& stream,
                                std::size_t cap) {
  std::vector<std::size_t> all(graph.particle_count());
  for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
  return restricted_evolution(graph, all, stream, cap);
}

UnitaryMatrix restricted_evolution(const InteractionGraph& graph,
                                   const std::vector<std::size_t>& particles,
                                   const RandomStream& stream, std::size_t cap) {
  const std::size_t k = graph.particle_count();
  if (particles.empty() || !std::is_sorted(particles.begin(), particles.end()) ||
      std::adjacent_find(particles.begin(), particles.end()) != particles.end() ||
      particles.back() >= k) {
    throw Error(ErrorCode::InvalidArgument, "particle subset must be sorted, unique, in range");
  }
  // position of each kept particle in the restricted system
  std::vector<std::size_t> position(k, k);
  std::vector<std::size_t> dims;
  for (std::size_t p : particles) {
    position[p] = dims.size();
    dims.push_back(graph.system().dim(p));
  }
  const std::size_t n = product(dims);
  check_cap(n, cap);

  const auto size = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Identity(size, size);
  const auto& layers = graph.layers();
  for (std::size_t l = layers.size(); l-- > 0;) {
    const Layer& layer = layers[l];
    const RandomStream layer_stream = stream.substream(l);
    for (std::size_t c = 0; c < layer.cliques().size(); ++c) {
      const Clique& clique = layer.cliques()[c];
      const auto inside = std::count_if(clique.particles().begin(), clique.particles().end(),
                                        [&](std::size_t p) { return position[p] < k; });
      if (inside == 0) continue;
      if (static_cast<std::size_t>(inside) != clique.size()) {
        throw Error(ErrorCode::InvalidArgument,
                    "particle subset cuts through a clique of layer '" + layer.color() + "'");
      }
      if (skipped(layer, clique)) continue;
      std::vector<std::size_t> local;
      for (std::size_t p : clique.particles()) local.push_back(position[p]);
      const Clique local_clique(std::move(local));
      const auto block = haar_unitary(clique_dim(local_clique, dims), layer_stream.substream(c));
      apply_block_right(m, block.matrix(), local_clique, dims);
    }
  }
  return UnitaryMatrix(std::move(m));
}

}  // namespace unigraph
