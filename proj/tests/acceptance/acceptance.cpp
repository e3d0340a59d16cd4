// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance runs. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Every run uses the default master seed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "unigraph/ensemble.hpp"
#include "unigraph/kernels.hpp"

using namespace unigraph;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWignerVariance = 3.0 * kPi / 8.0 - 1.0;

struct Outcome {
  bool pass;
  std::string detail;
};

char buf[512];

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

EnsembleReport run(EnsembleSource source, std::size_t draws, const Analyses& a,
                   bool keep_samples = false) {
  EnsembleSpec spec{std::move(source)};
  spec.draws = draws;
  spec.analyses = a;
  spec.options.keep_samples = keep_samples;
  return run_ensemble(spec);
}

Analyses spacing_only(bool phases = false) {
  Analyses a;
  a.spacing = true;
  a.phase_density = phases;
  return a;
}

// Pooled phases from the connected-graph runs, reused by the phase-density check.
std::vector<double> g_connected_phases;

Outcome wigner_reference() {
  boost::math::quadrature::exp_sinh<double> integrator;
  const auto moment = [&](int m) {
    return integrator.integrate([m](double s) { return std::pow(s, m) * wigner_pdf(s); },
                                0.0, std::numeric_limits<double>::infinity());
  };
  const double mass = moment(0);
  const double mean = moment(1);
  const double variance = moment(2) - mean * mean;
  const double cdf_tail = reference_cdf(Reference::Wigner, 50.0);
  const bool pass = std::abs(mass - 1.0) <= 1e-8 && std::abs(mean - 1.0) <= 1e-8 &&
                    std::abs(variance - kWignerVariance) <= 1e-6 &&
                    std::abs(cdf_tail - 1.0) <= 1e-8;
  return {pass, fmt("mass %.12f mean %.12f variance %.10f (target %.10f) cdf(50) %.12f", mass,
                    mean, variance, kWignerVariance, cdf_tail)};
}

Outcome connected_graphs() {
  std::string detail;
  bool pass = true;
  struct Case {
    const char* name;
    InteractionGraph graph;
    std::size_t draws;
  };
  const Case cases[] = {{"pair n=10", pair_graph(10), 1000},
                        {"six-qubit triangle", triangle_graph(2), 1500}};
  for (const auto& c : cases) {
    const auto r = run(c.graph, c.draws, spacing_only(true), true);
    const auto& s = *r.spacing;
    const bool ok = std::abs(s.variance - 0.178) <= 0.015 && s.ks_wigner < s.ks_poisson &&
                    s.ks_wigner <= 0.015;
    pass = pass && ok;
    detail += fmt("%s N=%zu T=%zu: var %.4f KS(W) %.4f KS(P) %.4f; ", c.name, r.dim, r.draws,
                  s.variance, s.ks_wigner, s.ks_poisson);
    const auto& p = r.phase_density->samples;
    g_connected_phases.insert(g_connected_phases.end(), p.begin(), p.end());
  }
  return {pass, detail};
}

double circular_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kTwoPi - d);
}

Outcome disconnected_graph() {
  const auto g = disjoint_pairs_graph(2, 4);
  const std::size_t draws = 400;

  // Each draw is A (x) B, so its phases are all sums of component phases.
  std::vector<double> pooled;
  double worst = 0.0;
  std::size_t n = 0;
  for (std::size_t t = 0; t < draws; ++t) {
    const RandomStream stream(kDefaultSeed, t);
    const auto full = eigenphases(evolution_unitary(g, stream));
    const auto s = spacings(full);
    pooled.insert(pooled.end(), s.begin(), s.end());
    const auto a = eigenphases(restricted_evolution(g, {0, 1}, stream));
    const auto b = eigenphases(restricted_evolution(g, {2, 3}, stream));
    std::vector<double> predicted;
    for (double x : a)
      for (double y : b) predicted.push_back(wrap_phase(x + y));
    std::sort(predicted.begin(), predicted.end());
    if (predicted.size() != full.size()) return {false, "component spectra have the wrong size"};
    n = full.size();
    // Rotate to the best alignment to absorb phases sitting on the 0 / 2pi seam.
    double best = kTwoPi;
    for (std::size_t shift : {n - 1, std::size_t{0}, std::size_t{1}}) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        d = std::max(d, circular_distance(full[(i + shift) % n], predicted[i]));
      }
      best = std::min(best, d);
    }
    worst = std::max(worst, best);
  }
  const double variance = sample_variance(pooled);
  const double ks_p = ks_statistic(pooled, Reference::Poisson);
  const double ks_w = ks_statistic(pooled, Reference::Wigner);
  const bool pass = std::abs(variance - 1.0) <= 0.1 && ks_p < ks_w && worst <= 1e-9;
  return {pass, fmt("N=%zu T=%zu: var %.4f KS(P) %.4f KS(W) %.4f; factorization max error %.2e",
                    n, draws, variance, ks_p, ks_w, worst)};
}

Outcome eigenvector_entropy_mean() {
  Analyses a;
  a.evec_entropy = true;
  const auto r = run(ReferenceSource{ReferenceKind::Cue, 64, {}}, 200, a);
  const double expected = mean_random_vector_entropy(64);
  const double rel = std::abs(r.evec_entropy->value.mean - expected) / expected;
  return {rel <= 0.01, fmt("CUE N=64 T=200: mean %.5f expected %.5f rel %.4f",
                           r.evec_entropy->value.mean, expected, rel)};
}

Outcome page_entanglement() {
  Analyses a;
  a.entanglement = std::vector<std::size_t>{0, 1};
  const auto r = run(square_graph(4), 200, a);
  const double expected = 0.5 * std::log(256.0) - 0.5;
  const double mean = r.entanglement->entropy.mean;
  const double rel = std::abs(mean - expected) / expected;
  return {rel <= 0.02,
          fmt("square n=4 N=256 T=200 keep {1,2}: mean %.5f expected %.5f rel %.4f", mean,
              expected, rel)};
}

Outcome projection_study() {
  const double target = mean_purity(3, 3);
  std::vector<double> means;
  std::string detail;
  bool pass = true;
  for (std::size_t nb : {2, 3, 4}) {
    Analyses a;
    a.projection = 1;
    a.projection_keep = std::vector<std::size_t>{0};
    const auto r = run(two_colour_chain_graph({3, nb, 3}), 300, a);
    const double m = r.projection->purity.mean;
    means.push_back(m);
    const double rel = std::abs(m - target) / target;
    pass = pass && rel <= 0.03;
    detail += fmt("N_B=%zu purity %.5f (rel %.4f); ", nb, m, rel);
  }
  const double lo = *std::min_element(means.begin(), means.end());
  const double hi = *std::max_element(means.begin(), means.end());
  const double spread = (hi - lo) / lo;
  pass = pass && spread <= 0.03;
  detail += fmt("target %.4f, spread %.4f", target, spread);
  return {pass, detail};
}

Outcome element_entropy_additivity() {
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const RandomStream s(kDefaultSeed, t);
    const auto a = haar_unitary(4, s.substream(0));
    const auto b = haar_unitary(8, s.substream(1));
    worst = std::max(worst,
                     std::abs(element_entropy(kron(a, b)) - element_entropy(a) - element_entropy(b)));
  }
  return {worst <= 1e-10, fmt("200 pairs, dims 4 and 8: max deviation %.2e", worst)};
}

Outcome element_entropy_separation() {
  Analyses a;
  a.element_entropy = true;
  const auto chain = run(two_colour_chain_graph(std::vector<std::size_t>(6, 2)), 2000, a);
  const auto cue = run(ReferenceSource{ReferenceKind::Cue, 64, {}}, 2000, a);
  const auto& c = *chain.element_entropy;
  const auto& u = *cue.element_entropy;
  const bool pass = c.variance > u.variance && c.value.mean < u.value.mean;
  return {pass, fmt("chain: mean %.5f var %.3e; CUE: mean %.5f var %.3e", c.value.mean,
                    c.variance, u.value.mean, u.variance)};
}

Outcome composed_ensemble() {
  const auto r = run(ReferenceSource{ReferenceKind::Composed, 100, {}}, 1000, spacing_only());
  const auto& s = *r.spacing;
  return {std::abs(s.variance - 0.178) <= 0.02,
          fmt("N=100 T=1000: var %.4f KS(W) %.4f KS(P) %.4f", s.variance, s.ks_wigner,
              s.ks_poisson)};
}

Outcome five_step_chain() {
  const auto r = run(chain_graph(6, 2), 2000, spacing_only());
  const auto& s = *r.spacing;
  return {s.ks_wigner < s.ks_poisson,
          fmt("six qubits T=2000: var %.4f KS(W) %.4f KS(P) %.4f", s.variance, s.ks_wigner,
              s.ks_poisson)};
}

Outcome phase_density() {
  if (g_connected_phases.empty()) return {false, "no phases from the connected-graph runs"};
  const auto chi = phase_uniformity(g_connected_phases, 32);
  return {chi.p_value > 0.01, fmt("%zu phases, 32 bins: chi2 %.2f p %.4f",
                                  g_connected_phases.size(), chi.statistic, chi.p_value)};
}

Outcome generation_benchmark() {
  const auto t = benchmark_generation(ring_graph(8, 2), 100);
  return {t.ratio() < 1.0, fmt("ring of 8 qubits N=%zu T=100: graph %.3f s, CUE %.3f s, ratio %.3f",
                               t.dim, t.structured_seconds, t.cue_seconds, t.ratio())};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "Wigner reference self-consistency", wigner_reference},
      {2, "connected graphs follow Wigner", connected_graphs},
      {3, "disconnected graph is Poissonian and factorizes", disconnected_graph},
      {4, "CUE eigenvector entropy mean", eigenvector_entropy_mean},
      {5, "mean eigenvector entanglement", page_entanglement},
      {6, "projected purity independent of the central particle", projection_study},
      {7, "element entropy additivity", element_entropy_additivity},
      {8, "structured vs CUE element entropy", element_entropy_separation},
      {9, "composed ensemble spacing", composed_ensemble},
      {10, "five-step chain spacing", five_step_chain},
      {11, "phase density uniformity", phase_density},
      {12, "generation benchmark", generation_benchmark},
  };
  std::printf("kernels: %s\n", std::string(kernels::to_string(kernels::active_isa())).c_str());
  std::fflush(stdout);
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s AC%-2d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
