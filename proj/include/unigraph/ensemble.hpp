// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unigraph/entropy.hpp"
#include "unigraph/graph.hpp"
#include "unigraph/rand.hpp"
#include "unigraph/spectral.hpp"
#include "unigraph/tensor.hpp"

namespace unigraph {

enum class ReferenceKind { Cue, Composed, Diagonal };

std::string_view to_string(ReferenceKind kind) noexcept;

/// Unstructured reference ensemble of order `dim`. `factors`, when non-empty,
/// gives the matrix a tensor-factor structure (product must equal dim) so
/// particle-based analyses can be compared against a structured graph.
struct ReferenceSource {
  ReferenceKind kind = ReferenceKind::Cue;
  std::size_t dim = 0;
  std::vector<std::size_t> factors;
};

using EnsembleSource = std::variant<InteractionGraph, ReferenceSource>;

/// Requested analyses. Particle indices are 0-based.
struct Analyses {
  bool spacing = false;
  bool phase_density = false;
  bool evec_entropy = false;
  /// Kept particles of the eigenvector bipartition.
  std::optional<std::vector<std::size_t>> entanglement;
  bool element_entropy = false;
  /// Particle whose basis the eigenvectors are projected onto.
  std::optional<std::size_t> projection;
  /// Kept particles after projection; defaults to the lowest other particle.
  std::optional<std::vector<std::size_t>> projection_keep;
  /// Highest power m of Tr(U^m).
  std::optional<std::size_t> trace_moments;
  /// Entanglement of U|0...0> across the `entanglement` bipartition (or the
  /// first half of the particles when none is given).
  bool state_sample = false;
};

struct EnsembleOptions {
  std::size_t workers = 1;
  std::size_t dim_cap = kDefaultDimCap;
  /// Append the circular wrap gap to each draw's spacings.
  bool include_wrap = true;
  std::size_t phase_bins = 32;
  ProjectionWeighting projection_weighting = ProjectionWeighting::ByWeight;
  /// Retain pooled spacings / phases / per-draw values in the report.
  bool keep_samples = false;
};

struct EnsembleSpec {
  EnsembleSource source;
  std::size_t draws = 1;
  std::uint64_t master_seed = kDefaultSeed;
  Analyses analyses;
  EnsembleOptions options;
};

/// Mean of per-draw values with its standard error.
struct MeanStat {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
  friend bool operator==(const MeanStat&, const MeanStat&) = default;
};

MeanStat mean_stat(std::span<const double> values);
/// Unbiased sample variance (0 for fewer than two values).
double sample_variance(std::span<const double> values);

struct SpacingReport {
  Histogram histogram = Histogram::spacing_default();
  std::size_t count = 0;
  double mean = 0.0;      ///< pooled
  double variance = 0.0;  ///< pooled
  MeanStat draw_variance; ///< per-draw spacing variance
  double ks_wigner = 0.0;
  double ks_poisson = 0.0;
  std::vector<double> samples;  ///< only with keep_samples
};

struct PhaseDensityReport {
  Histogram histogram{0.0, kTwoPi, 32};
  ChiSquareResult chi_square;
  std::vector<double> samples;  ///< only with keep_samples
};

struct ScalarReport {
  MeanStat value;
  double variance = 0.0;  ///< sample variance of the per-draw values
  Histogram histogram{0.0, 1.0, 50};
  std::vector<double> per_draw;  ///< only with keep_samples
};

struct EntanglementReport {
  std::vector<std::size_t> keep;
  std::size_t dim_kept = 0;
  std::size_t dim_traced = 0;
  MeanStat entropy;
  MeanStat purity;
  double entropy_prediction = 0.0;
  double purity_prediction = 0.0;
};

struct ProjectionReport {
  std::size_t particle = 0;
  std::vector<std::size_t> keep;
  std::size_t dim_kept = 0;
  std::size_t dim_traced = 0;
  MeanStat entropy;
  MeanStat purity;
  double entropy_prediction = 0.0;
  double purity_prediction = 0.0;
};

struct TraceMomentsReport {
  std::vector<MeanStat> real;
  std::vector<MeanStat> imag;
  std::vector<MeanStat> abs2;
};

struct EnsembleReport {
  std::string source;
  std::size_t dim = 0;
  std::size_t draws = 0;
  std::uint64_t master_seed = 0;
  std::optional<SpacingReport> spacing;
  std::optional<PhaseDensityReport> phase_density;
  std::optional<ScalarReport> evec_entropy;
  double evec_entropy_prediction = 0.0;
  std::optional<EntanglementReport> entanglement;
  std::optional<ScalarReport> element_entropy;
  std::optional<ProjectionReport> projection;
  std::optional<TraceMomentsReport> trace_moments;
  std::optional<EntanglementReport> state_sample;
  double generation_seconds = 0.0;
  double analysis_seconds = 0.0;
  double wall_seconds = 0.0;
};

/// Throws InvalidArgument / IncompatibleAnalysis for inconsistent specs.
void validate_spec(const EnsembleSpec& spec);

/// Draw t uses RandomStream(master_seed, t). Results are merged in draw order,
/// so the report does not depend on the worker count. A failing draw aborts the
/// run with that draw's error.
EnsembleReport run_ensemble(const EnsembleSpec& spec);

/// Matrix of draw `t` exactly as run_ensemble builds it.
UnitaryMatrix draw_matrix(const EnsembleSource& source, const RandomStream& stream,
                          std::size_t cap = kDefaultDimCap);

/// U|0...0>: the first column of the evolution operator.
Vector random_graph_state(const InteractionGraph& graph, const RandomStream& stream,
                          std::size_t cap = kDefaultDimCap);

/// Tr(U^m) for m = 1..max_power, computed as sum_j exp(i m theta_j).
std::vector<Complex> trace_moments(std::span<const double> phases, std::size_t max_power);
std::vector<Complex> trace_moments(const UnitaryMatrix& u, std::size_t max_power);

struct BenchmarkTimings {
  std::size_t draws = 0;
  std::size_t dim = 0;
  std::size_t blocks = 0;  ///< Haar blocks sampled per structured matrix
  double structured_seconds = 0.0;
  double cue_seconds = 0.0;
  [[nodiscard]] double ratio() const noexcept {
    return cue_seconds > 0.0 ? structured_seconds / cue_seconds : 0.0;
  }
};

/// Wall-clock time to generate (not diagonalize) `draws` graph matrices versus
/// `draws` CUE matrices of the same order, single-threaded. Throws
/// InvalidArgument for draws == 0.
BenchmarkTimings benchmark_generation(const InteractionGraph& graph, std::size_t draws,
                                      std::uint64_t master_seed = kDefaultSeed,
                                      std::size_t cap = kDefaultDimCap);

}  // namespace unigraph
