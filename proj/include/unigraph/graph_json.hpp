// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "unigraph/graph.hpp"

namespace unigraph {

/// Parses a graph spec document:
///
///   { "dims": [2,2,2,2],
///     "layers": [ { "color": "red", "cliques": [[1,3],[2,4]],
///                   "singletons": "haar" },
///                 { "color": "black", "cliques": [[1,2],[3,4]] } ] }
///
/// `"n": 2, "k": 4` may replace "dims". Unknown keys are rejected. Malformed
/// JSON raises SyntaxError with the byte offset as index().
InteractionGraph parse_graph_spec(std::string_view text);

InteractionGraph load_graph_spec(const std::string& path);

/// Canonical form: explicit dims, 1-based sorted cliques, every key present.
std::string serialize_graph_spec(const InteractionGraph& graph);

/// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string graph_spec_hash(const InteractionGraph& graph);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace unigraph
