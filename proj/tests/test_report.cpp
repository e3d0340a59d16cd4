// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "json.hpp"
#include "unigraph/report.hpp"

using namespace unigraph;
using nlohmann::json;

namespace {

EnsembleReport sample_report() {
  EnsembleSpec spec{ring_graph(4, 2)};
  spec.draws = 8;
  spec.analyses.spacing = true;
  spec.analyses.evec_entropy = true;
  spec.analyses.entanglement = std::vector<std::size_t>{0, 1};
  spec.analyses.trace_moments = 2;
  return run_ensemble(spec);
}

}  // namespace

TEST_CASE("json report layout") {
  const auto r = sample_report();
  const auto doc = json::parse(report_to_json(r));
  CHECK(doc["dim"] == 16);
  CHECK(doc["draws"] == 8);
  CHECK(doc["master_seed"] == kDefaultSeed);
  CHECK(doc["log_base"] == "e");
  const auto& a = doc["analyses"];
  CHECK(a["spacing"]["count"] == 8 * 16);
  CHECK(a["spacing"]["csv"].get<std::string>().rfind("bin_left,bin_right,count,density\n", 0) == 0);
  CHECK(a["entanglement"]["keep"] == json::array({1, 2}));
  CHECK(a["trace_moments"].size() == 2);
  CHECK(a["trace_moments"][1]["power"] == 2);
  CHECK(doc["timing"].contains("wall_seconds"));
  CHECK(a["evec_entropy"]["value"]["mean"].get<double>() ==
        doctest::Approx(r.evec_entropy->value.mean));
}

TEST_CASE("entropies in bits") {
  const auto r = sample_report();
  const auto nats = json::parse(report_to_json(r, LogBase::Nats));
  const auto bits = json::parse(report_to_json(r, LogBase::Bits));
  CHECK(bits["log_base"] == "2");
  const double h = nats["analyses"]["entanglement"]["entropy"]["mean"].get<double>();
  CHECK(bits["analyses"]["entanglement"]["entropy"]["mean"].get<double>() ==
        doctest::Approx(h / std::numbers::ln2));
  CHECK(bits["analyses"]["entanglement"]["purity"] == nats["analyses"]["entanglement"]["purity"]);
  CHECK(bits["analyses"]["spacing"]["variance"] == nats["analyses"]["spacing"]["variance"]);
}

TEST_CASE("histogram csv per analysis") {
  const auto r = sample_report();
  const auto h = report_histograms(r);
  CHECK(h.size() == 2);
  CHECK(h.count("spacing") == 1);
  CHECK(h.count("evec_entropy") == 1);
  const auto& csv = h.at("spacing");
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 1 + 50 + 1);
  CHECK(csv.find("\noverflow,,") != std::string::npos);

  // Rescaling keeps every count.
  const auto bits = report_histograms(r, LogBase::Bits);
  const auto count_sum = [](const std::string& text) {
    std::size_t total = 0;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      const auto a = line.find(',');
      const auto b = line.find(',', a + 1);
      const auto c = line.find(',', b + 1);
      total += std::stoul(line.substr(b + 1, c - b - 1));
    }
    return total;
  };
  CHECK(count_sum(bits.at("evec_entropy")) == count_sum(h.at("evec_entropy")));
}
