// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "unigraph/ensemble.hpp"

namespace unigraph {

enum class LogBase { Nats, Bits };

/// JSON document with one object per analysis. Histograms are embedded as
/// CSV text under "csv". Entropies are converted for display when `base` is
/// Bits. Timing fields live under "timing" so callers can drop them when
/// comparing runs.
std::string report_to_json(const EnsembleReport& report, LogBase base = LogBase::Nats,
                           int indent = 2);

/// Histogram CSV per analysis, keyed by analysis name ("spacing",
/// "phase_density", "evec_entropy", "element_entropy").
std::map<std::string, std::string> report_histograms(const EnsembleReport& report,
                                                     LogBase base = LogBase::Nats);

}  // namespace unigraph
