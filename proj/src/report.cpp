// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/report.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace unigraph {

namespace {

using nlohmann::json;

double entropy_scale(LogBase base) { return base == LogBase::Bits ? 1.0 / std::numbers::ln2 : 1.0; }

json to_json(const MeanStat& m, double scale = 1.0) {
  return {{"mean", m.mean * scale}, {"std_error", m.std_error * scale}, {"count", m.count}};
}

std::string csv(const Histogram& h) {
  std::ostringstream out;
  h.write_csv(out);
  return out.str();
}

// Entropy histograms are binned in nats; rescale the edges for display.
Histogram rescaled(const Histogram& h, double scale) {
  if (scale == 1.0) return h;
  Histogram out(h.lo() * scale, h.hi() * scale, h.bins());
  // Rebinning is not needed: each bin maps to exactly one scaled bin.
  for (std::size_t i = 0; i < h.bins(); ++i) {
    const double centre = 0.5 * (out.edge(i) + out.edge(i + 1));
    for (std::size_t c = 0; c < h.counts()[i]; ++c) out.add(centre);
  }
  for (std::size_t c = 0; c < h.overflow(); ++c) out.add(-1.0);
  return out;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (std::size_t p : v) out.push_back(p + 1);
  return out;
}

json entanglement_json(const EntanglementReport& e, double scale) {
  return {{"keep", one_based(e.keep)},
          {"dim_kept", e.dim_kept},
          {"dim_traced", e.dim_traced},
          {"entropy", to_json(e.entropy, scale)},
          {"purity", to_json(e.purity)},
          {"entropy_prediction", e.entropy_prediction * scale},
          {"purity_prediction", e.purity_prediction}};
}

json scalar_json(const ScalarReport& s, double scale) {
  json j = {{"value", to_json(s.value, scale)},
            {"variance", s.variance * scale * scale},
            {"csv", csv(rescaled(s.histogram, scale))}};
  if (!s.per_draw.empty()) {
    std::vector<double> v;
    for (double x : s.per_draw) v.push_back(x * scale);
    j["per_draw"] = v;
  }
  return j;
}

}  // namespace

std::string report_to_json(const EnsembleReport& report, LogBase base, int indent) {
  const double scale = entropy_scale(base);
  json doc;
  doc["source"] = report.source;
  doc["dim"] = report.dim;
  doc["draws"] = report.draws;
  doc["master_seed"] = report.master_seed;
  doc["log_base"] = base == LogBase::Bits ? "2" : "e";
  json analyses = json::object();
  if (report.spacing) {
    const auto& s = *report.spacing;
    analyses["spacing"] = {{"count", s.count},
                           {"mean", s.mean},
                           {"variance", s.variance},
                           {"draw_variance", to_json(s.draw_variance)},
                           {"ks_wigner", s.ks_wigner},
                           {"ks_poisson", s.ks_poisson},
                           {"overflow", s.histogram.overflow()},
                           {"csv", csv(s.histogram)}};
  }
  if (report.phase_density) {
    const auto& p = *report.phase_density;
    analyses["phase_density"] = {{"chi_square", p.chi_square.statistic},
                                 {"p_value", p.chi_square.p_value},
                                 {"degrees_of_freedom", p.chi_square.degrees_of_freedom},
                                 {"csv", csv(p.histogram)}};
  }
  if (report.evec_entropy) {
    analyses["evec_entropy"] = scalar_json(*report.evec_entropy, scale);
    analyses["evec_entropy"]["prediction"] = report.evec_entropy_prediction * scale;
  }
  if (report.element_entropy) analyses["element_entropy"] = scalar_json(*report.element_entropy, scale);
  if (report.entanglement) analyses["entanglement"] = entanglement_json(*report.entanglement, scale);
  if (report.projection) {
    const auto& p = *report.projection;
    analyses["projection"] = {{"particle", p.particle + 1},
                              {"keep", one_based(p.keep)},
                              {"dim_kept", p.dim_kept},
                              {"dim_traced", p.dim_traced},
                              {"entropy", to_json(p.entropy, scale)},
                              {"purity", to_json(p.purity)},
                              {"entropy_prediction", p.entropy_prediction * scale},
                              {"purity_prediction", p.purity_prediction}};
  }
  if (report.trace_moments) {
    json moments = json::array();
    const auto& tm = *report.trace_moments;
    for (std::size_t m = 0; m < tm.real.size(); ++m) {
      moments.push_back({{"power", m + 1},
                         {"real", to_json(tm.real[m])},
                         {"imag", to_json(tm.imag[m])},
                         {"abs2", to_json(tm.abs2[m])}});
    }
    analyses["trace_moments"] = std::move(moments);
  }
  if (report.state_sample) analyses["state_sample"] = entanglement_json(*report.state_sample, scale);
  doc["analyses"] = std::move(analyses);
  doc["timing"] = {{"generation_seconds", report.generation_seconds},
                   {"analysis_seconds", report.analysis_seconds},
                   {"wall_seconds", report.wall_seconds}};
  return doc.dump(indent);
}

std::map<std::string, std::string> report_histograms(const EnsembleReport& report, LogBase base) {
  const double scale = entropy_scale(base);
  std::map<std::string, std::string> out;
  if (report.spacing) out["spacing"] = csv(report.spacing->histogram);
  if (report.phase_density) out["phase_density"] = csv(report.phase_density->histogram);
  if (report.evec_entropy) out["evec_entropy"] = csv(rescaled(report.evec_entropy->histogram, scale));
  if (report.element_entropy) {
    out["element_entropy"] = csv(rescaled(report.element_entropy->histogram, scale));
  }
  return out;
}

}  // namespace unigraph
