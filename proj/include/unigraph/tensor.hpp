// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unigraph/graph.hpp"
#include "unigraph/rand.hpp"
#include "unigraph/types.hpp"
#include "unigraph/unitary.hpp"

namespace unigraph {

inline constexpr std::size_t kDefaultDimCap = 4096;

/// Positional strides with particle 0 most significant: stride[k-1] = 1.
std::vector<std::size_t> strides(std::span<const std::size_t> dims);

/// sum_j digits[j] * stride[j]. Throws OutOfRange for a digit >= dims[j] or a
/// length mismatch.
std::size_t global_index(std::span<const std::size_t> digits,
                         std::span<const std::size_t> dims);

/// Inverse of global_index. Throws OutOfRange for g >= prod(dims).
std::vector<std::size_t> multi_index(std::size_t g, std::span<const std::size_t> dims);

/// Kronecker product a (x) b.
UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// In place m <- m * lift(block, clique). Columns of m are combined with
/// caxpy kernels; cost O(rows * N * dim(block)).
void apply_block_right(Matrix& m, const Matrix& block, const Clique& clique,
                       std::span<const std::size_t> dims);

/// The N x N operator acting as `block` on the clique's legs (increasing
/// particle order) and as identity on the others.
UnitaryMatrix lift(const UnitaryMatrix& block, const Clique& clique,
                   std::span<const std::size_t> dims);

/// Product of the lifted clique blocks of one layer; clique c draws its Haar
/// block from stream.substream(c).
UnitaryMatrix layer_unitary(const Layer& layer, std::span<const std::size_t> dims,
                            const RandomStream& stream);

/// U = layer_L ... layer_1; layer l uses stream.substream(l), so
/// evolution_unitary == product of layer_unitary(layers[l], dims, stream.substream(l)).
/// Throws DimensionCapExceeded when N > cap.
UnitaryMatrix evolution_unitary(const InteractionGraph& graph, const RandomStream& stream,
                                std::size_t cap = kDefaultDimCap);

/// Evolution restricted to `particles` (sorted, 0-based), which must be a union
/// of connected components. Blocks are drawn from the same sub-streams as in
/// evolution_unitary, so for a disconnected graph whose components occupy
/// consecutive particles the full operator is the Kronecker product of the
/// restricted ones.
UnitaryMatrix restricted_evolution(const InteractionGraph& graph,
                                   const std::vector<std::size_t>& particles,
                                   const RandomStream& stream,
                                   std::size_t cap = kDefaultDimCap);

}  // namespace unigraph
