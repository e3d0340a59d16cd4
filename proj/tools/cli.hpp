// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace unigraph::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kSpecError = 2;
inline constexpr int kCapExceeded = 3;

/// Entry point of the `unigraph` tool: gen | run | bench | validate.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unigraph::cli
