// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "unigraph/error.hpp"
#include "unigraph/graph_json.hpp"

namespace unigraph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::size_t> source_dims(const EnsembleSource& source) {
  if (const auto* g = std::get_if<InteractionGraph>(&source)) return g->system().dims();
  const auto& ref = std::get<ReferenceSource>(source);
  if (!ref.factors.empty()) return ref.factors;
  return {ref.dim};
}

std::size_t source_dim(const EnsembleSource& source) {
  if (const auto* g = std::get_if<InteractionGraph>(&source)) return g->total_dim();
  return std::get<ReferenceSource>(source).dim;
}

std::size_t product_of(std::span<const std::size_t> dims, std::span<const std::size_t> subset) {
  std::size_t n = 1;
  for (std::size_t p : subset) n *= dims[p];
  return n;
}

std::vector<std::size_t> complement(std::size_t k, std::span<const std::size_t> subset) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < k; ++p) {
    if (std::find(subset.begin(), subset.end(), p) == subset.end()) out.push_back(p);
  }
  return out;
}

void check_bipartition(std::span<const std::size_t> keep, std::size_t k, const char* what) {
  if (k < 2) {
    throw Error(ErrorCode::IncompatibleAnalysis,
                std::string(what) + " needs a system of at least two particles");
  }
  if (keep.empty()) throw Error(ErrorCode::EmptyKeepSet, std::string(what) + ": empty keep set");
  std::vector<bool> seen(k, false);
  for (std::size_t p : keep) {
    if (p >= k) {
      throw Error(ErrorCode::IndexOutOfRange, std::string(what) + ": particle beyond k", p + 1);
    }
    if (seen[p]) {
      throw Error(ErrorCode::DuplicateParticle, std::string(what) + ": repeated particle", p + 1);
    }
    seen[p] = true;
  }
  if (keep.size() == k) {
    throw Error(ErrorCode::FullKeepSet, std::string(what) + ": keep set covers every particle");
  }
}

std::vector<std::size_t> default_state_keep(std::size_t k) {
  std::vector<std::size_t> keep(std::max<std::size_t>(k / 2, 1));
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  return keep;
}

std::vector<std::size_t> projection_keep(const Analyses& a, std::size_t k) {
  if (a.projection_keep) return *a.projection_keep;
  return {*a.projection == 0 ? std::size_t{1} : std::size_t{0}};
}

struct EntanglementSample {
  double entropy = 0.0;
  double purity = 0.0;
};

EntanglementSample bipartite(const Vector& state, std::span<const std::size_t> dims,
                             std::span<const std::size_t> keep) {
  const ReducedState sigma = partial_trace(state, dims, keep);
  return {von_neumann_entropy(sigma), purity(sigma)};
}

// Everything one draw contributes to the report.
struct DrawResult {
  std::vector<double> phases;
  std::vector<double> spacings;
  double spacing_variance = 0.0;
  double evec_entropy = 0.0;
  EntanglementSample entanglement;
  double element_entropy = 0.0;
  EntanglementSample projection;
  std::vector<Complex> traces;
  EntanglementSample state;
  double generation_seconds = 0.0;
  double analysis_seconds = 0.0;
};

DrawResult run_draw(const EnsembleSpec& spec, std::uint64_t t) {
  const Analyses& a = spec.analyses;
  const auto dims = source_dims(spec.source);
  DrawResult r;
  const auto start = Clock::now();
  const UnitaryMatrix u = draw_matrix(spec.source, RandomStream(spec.master_seed, t),
                                      spec.options.dim_cap);
  r.generation_seconds = seconds_since(start);
  const auto analysis_start = Clock::now();

  const bool need_vectors = a.evec_entropy || a.entanglement || a.projection;
  const bool need_phases =
      need_vectors || a.spacing || a.phase_density || a.trace_moments.has_value();
  SpectralData spec_data;
  if (need_vectors) {
    spec_data = eigendecompose(u);
  } else if (need_phases) {
    spec_data.phases = eigenphases(u);
  }
  if (a.spacing) {
    r.spacings = spacings(spec_data.phases, spec.options.include_wrap);
    r.spacing_variance = sample_variance(r.spacings);
  }
  if (a.phase_density) r.phases = spec_data.phases;
  if (a.evec_entropy) r.evec_entropy = eigenvector_entropy(spec_data);
  if (a.element_entropy) r.element_entropy = element_entropy(u);
  const auto columns = spec_data.vectors.cols();
  if (a.entanglement) {
    for (Eigen::Index j = 0; j < columns; ++j) {
      const auto s = bipartite(spec_data.vectors.col(j), dims, *a.entanglement);
      r.entanglement.entropy += s.entropy;
      r.entanglement.purity += s.purity;
    }
    r.entanglement.entropy /= static_cast<double>(columns);
    r.entanglement.purity /= static_cast<double>(columns);
  }
  if (a.projection) {
    const auto keep = projection_keep(a, dims.size());
    for (Eigen::Index j = 0; j < columns; ++j) {
      const auto p = projected_entanglement(spec_data.vectors.col(j), dims, *a.projection, keep,
                                            spec.options.projection_weighting);
      r.projection.entropy += p.mean_entropy;
      r.projection.purity += p.mean_purity;
    }
    r.projection.entropy /= static_cast<double>(columns);
    r.projection.purity /= static_cast<double>(columns);
  }
  if (a.trace_moments) r.traces = trace_moments(spec_data.phases, *a.trace_moments);
  if (a.state_sample) {
    const Vector state = u.matrix().col(0);
    const auto keep = a.entanglement ? *a.entanglement : default_state_keep(dims.size());
    r.state = bipartite(state, dims, keep);
  }
  r.analysis_seconds = seconds_since(analysis_start);
  return r;
}

std::vector<DrawResult> run_draws(const EnsembleSpec& spec) {
  const std::size_t draws = spec.draws;
  std::vector<DrawResult> results(draws);
  const std::size_t workers = std::min(std::max<std::size_t>(spec.options.workers, 1), draws);
  if (workers == 1) {
    for (std::size_t t = 0; t < draws; ++t) results[t] = run_draw(spec, t);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::size_t failed_draw = draws;
  std::exception_ptr error;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t t = next.fetch_add(1);
          if (t >= draws || failed.load()) return;
          try {
            results[t] = run_draw(spec, t);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            // Report the lowest failing draw so the error is schedule independent.
            if (t < failed_draw) {
              failed_draw = t;
              error = std::current_exception();
            }
            failed.store(true);
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return results;
}

ScalarReport scalar_report(std::vector<double> values, double lo, double hi, bool keep) {
  ScalarReport s;
  s.value = mean_stat(values);
  s.variance = sample_variance(values);
  s.histogram = Histogram(lo, hi, 50);
  s.histogram.add(values);
  if (keep) s.per_draw = std::move(values);
  return s;
}

EntanglementReport entanglement_report(std::span<const std::size_t> dims,
                                       std::vector<std::size_t> keep,
                                       std::span<const std::size_t> traced,
                                       const std::vector<EntanglementSample>& samples) {
  EntanglementReport e;
  e.dim_kept = product_of(dims, keep);
  e.dim_traced = product_of(dims, traced);
  e.keep = std::move(keep);
  std::vector<double> h;
  std::vector<double> r;
  for (const auto& s : samples) {
    h.push_back(s.entropy);
    r.push_back(s.purity);
  }
  e.entropy = mean_stat(h);
  e.purity = mean_stat(r);
  const std::size_t small = std::min(e.dim_kept, e.dim_traced);
  const std::size_t large = std::max(e.dim_kept, e.dim_traced);
  e.entropy_prediction = page_mean_entropy(small, large);
  e.purity_prediction = mean_purity(e.dim_kept, e.dim_traced);
  return e;
}

}  // namespace

std::string_view to_string(ReferenceKind kind) noexcept {
  switch (kind) {
    case ReferenceKind::Cue: return "cue";
    case ReferenceKind::Composed: return "composed";
    case ReferenceKind::Diagonal: return "diagonal";
  }
  return "cue";
}

MeanStat mean_stat(std::span<const double> values) {
  MeanStat m;
  m.count = values.size();
  if (values.empty()) return m;
  m.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() > 1) {
    m.std_error = std::sqrt(sample_variance(values) / static_cast<double>(values.size()));
  }
  return m;
}

double sample_variance(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / (n - 1.0);
}

void validate_spec(const EnsembleSpec& spec) {
  if (spec.draws == 0) throw Error(ErrorCode::InvalidArgument, "draws must be >= 1");
  if (const auto* ref = std::get_if<ReferenceSource>(&spec.source)) {
    if (ref->dim == 0) throw Error(ErrorCode::DimensionZero, "reference dimension must be >= 1");
    if (!ref->factors.empty()) {
      std::size_t n = 1;
      for (std::size_t f : ref->factors) {
        if (f == 0) throw Error(ErrorCode::InvalidDimension, "zero tensor factor");
        n *= f;
      }
      if (n != ref->dim) {
        throw Error(ErrorCode::InvalidDimension, "tensor factors do not multiply to the dimension");
      }
    }
  }
  const std::size_t n = source_dim(spec.source);
  if (n > spec.options.dim_cap) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "total dimension " + std::to_string(n) + " exceeds cap " +
                    std::to_string(spec.options.dim_cap),
                n);
  }
  const auto dims = source_dims(spec.source);
  const std::size_t k = dims.size();
  const Analyses& a = spec.analyses;
  if ((a.spacing || a.phase_density) && n < 2) {
    throw Error(ErrorCode::IncompatibleAnalysis, "spacing statistics need N >= 2");
  }
  if (a.phase_density && spec.options.phase_bins < 2) {
    throw Error(ErrorCode::InvalidArgument, "phase density needs >= 2 bins");
  }
  if (a.entanglement) check_bipartition(*a.entanglement, k, "entanglement");
  if (a.state_sample) {
    check_bipartition(a.entanglement ? *a.entanglement : default_state_keep(k), k, "state_sample");
  }
  if (a.projection) {
    if (k < 3) {
      throw Error(ErrorCode::IncompatibleAnalysis, "projection needs at least three particles");
    }
    if (*a.projection >= k) {
      throw Error(ErrorCode::IndexOutOfRange, "projected particle beyond k", *a.projection + 1);
    }
    const auto keep = projection_keep(a, k);
    if (std::find(keep.begin(), keep.end(), *a.projection) != keep.end()) {
      throw Error(ErrorCode::InvalidArgument, "projection keep set contains the projected particle");
    }
    std::vector<std::size_t> rest_keep;
    for (std::size_t p : keep) rest_keep.push_back(p > *a.projection ? p - 1 : p);
    check_bipartition(rest_keep, k - 1, "projection");
  }
  if (a.trace_moments && *a.trace_moments == 0) {
    throw Error(ErrorCode::InvalidArgument, "trace moments need a max power >= 1");
  }
}

UnitaryMatrix draw_matrix(const EnsembleSource& source, const RandomStream& stream,
                          std::size_t cap) {
  if (const auto* g = std::get_if<InteractionGraph>(&source)) {
    return evolution_unitary(*g, stream, cap);
  }
  const auto& ref = std::get<ReferenceSource>(source);
  if (ref.dim > cap) {
    throw Error(ErrorCode::DimensionCapExceeded, "reference dimension exceeds the cap", ref.dim);
  }
  switch (ref.kind) {
    case ReferenceKind::Cue: return haar_unitary(ref.dim, stream);
    case ReferenceKind::Composed: return sample_composed(ref.dim, stream);
    case ReferenceKind::Diagonal: return random_phases_diagonal(ref.dim, stream);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown reference kind");
}

Vector random_graph_state(const InteractionGraph& graph, const RandomStream& stream,
                          std::size_t cap) {
  const UnitaryMatrix u = evolution_unitary(graph, stream, cap);
  return u.matrix().col(0);
}

std::vector<Complex> trace_moments(std::span<const double> phases, std::size_t max_power) {
  if (max_power == 0) throw Error(ErrorCode::InvalidArgument, "max power must be >= 1");
  std::vector<Complex> traces(max_power, Complex{});
  for (double theta : phases) {
    for (std::size_t m = 1; m <= max_power; ++m) {
      traces[m - 1] += std::polar(1.0, static_cast<double>(m) * theta);
    }
  }
  return traces;
}

std::vector<Complex> trace_moments(const UnitaryMatrix& u, std::size_t max_power) {
  return trace_moments(eigenphases(u), max_power);
}

EnsembleReport run_ensemble(const EnsembleSpec& spec) {
  validate_spec(spec);
  const auto wall_start = Clock::now();
  const auto results = run_draws(spec);
  const Analyses& a = spec.analyses;
  const auto dims = source_dims(spec.source);
  const std::size_t n = source_dim(spec.source);
  const bool keep = spec.options.keep_samples;

  EnsembleReport report;
  if (const auto* g = std::get_if<InteractionGraph>(&spec.source)) {
    report.source = "graph:" + graph_spec_hash(*g);
  } else {
    const auto& ref = std::get<ReferenceSource>(spec.source);
    report.source = std::string(to_string(ref.kind)) + ":" + std::to_string(ref.dim);
  }
  report.dim = n;
  report.draws = spec.draws;
  report.master_seed = spec.master_seed;
  for (const auto& r : results) {
    report.generation_seconds += r.generation_seconds;
    report.analysis_seconds += r.analysis_seconds;
  }

  if (a.spacing) {
    SpacingReport s;
    std::vector<double> pooled;
    std::vector<double> per_draw_var;
    for (const auto& r : results) {
      pooled.insert(pooled.end(), r.spacings.begin(), r.spacings.end());
      per_draw_var.push_back(r.spacing_variance);
    }
    s.histogram.add(pooled);
    s.count = pooled.size();
    s.mean = std::accumulate(pooled.begin(), pooled.end(), 0.0) / static_cast<double>(s.count);
    double ss = 0.0;
    for (double x : pooled) ss += (x - s.mean) * (x - s.mean);
    s.variance = s.count > 1 ? ss / static_cast<double>(s.count - 1) : 0.0;
    s.draw_variance = mean_stat(per_draw_var);
    s.ks_wigner = ks_statistic(pooled, Reference::Wigner);
    s.ks_poisson = ks_statistic(pooled, Reference::Poisson);
    if (keep) s.samples = std::move(pooled);
    report.spacing = std::move(s);
  }
  if (a.phase_density) {
    PhaseDensityReport p;
    p.histogram = Histogram(0.0, kTwoPi, spec.options.phase_bins);
    std::vector<double> pooled;
    for (const auto& r : results) pooled.insert(pooled.end(), r.phases.begin(), r.phases.end());
    p.histogram.add(pooled);
    p.chi_square = phase_uniformity(pooled, spec.options.phase_bins);
    if (keep) p.samples = std::move(pooled);
    report.phase_density = std::move(p);
  }
  const double max_entropy = n > 1 ? std::log(static_cast<double>(n)) : 1.0;
  if (a.evec_entropy) {
    std::vector<double> v;
    for (const auto& r : results) v.push_back(r.evec_entropy);
    report.evec_entropy = scalar_report(std::move(v), 0.0, max_entropy, keep);
    report.evec_entropy_prediction = mean_random_vector_entropy(n);
  }
  if (a.element_entropy) {
    std::vector<double> v;
    for (const auto& r : results) v.push_back(r.element_entropy);
    report.element_entropy = scalar_report(std::move(v), 0.0, max_entropy, keep);
  }
  if (a.entanglement) {
    std::vector<EntanglementSample> samples;
    for (const auto& r : results) samples.push_back(r.entanglement);
    report.entanglement = entanglement_report(dims, *a.entanglement,
                                              complement(dims.size(), *a.entanglement), samples);
  }
  if (a.projection) {
    const auto kept = projection_keep(a, dims.size());
    std::vector<std::size_t> rest = complement(dims.size(), kept);
    rest.erase(std::remove(rest.begin(), rest.end(), *a.projection), rest.end());
    std::vector<EntanglementSample> samples;
    for (const auto& r : results) samples.push_back(r.projection);
    const auto e = entanglement_report(dims, kept, rest, samples);
    ProjectionReport p;
    p.particle = *a.projection;
    p.keep = e.keep;
    p.dim_kept = e.dim_kept;
    p.dim_traced = e.dim_traced;
    p.entropy = e.entropy;
    p.purity = e.purity;
    p.entropy_prediction = e.entropy_prediction;
    p.purity_prediction = e.purity_prediction;
    report.projection = std::move(p);
  }
  if (a.trace_moments) {
    TraceMomentsReport tm;
    for (std::size_t m = 0; m < *a.trace_moments; ++m) {
      std::vector<double> re, im, ab;
      for (const auto& r : results) {
        re.push_back(r.traces[m].real());
        im.push_back(r.traces[m].imag());
        ab.push_back(std::norm(r.traces[m]));
      }
      tm.real.push_back(mean_stat(re));
      tm.imag.push_back(mean_stat(im));
      tm.abs2.push_back(mean_stat(ab));
    }
    report.trace_moments = std::move(tm);
  }
  if (a.state_sample) {
    const auto kept = a.entanglement ? *a.entanglement : default_state_keep(dims.size());
    std::vector<EntanglementSample> samples;
    for (const auto& r : results) samples.push_back(r.state);
    report.state_sample = entanglement_report(dims, kept, complement(dims.size(), kept), samples);
  }
  report.wall_seconds = seconds_since(wall_start);
  return report;
}

BenchmarkTimings benchmark_generation(const InteractionGraph& graph, std::size_t draws,
                                      std::uint64_t master_seed, std::size_t cap) {
  if (draws == 0) throw Error(ErrorCode::InvalidArgument, "benchmark needs draws >= 1");
  const std::size_t n = graph.total_dim();
  if (n > cap) {
    throw Error(ErrorCode::DimensionCapExceeded, "total dimension exceeds the cap", n);
  }
  BenchmarkTimings t;
  t.draws = draws;
  t.dim = n;
  for (const auto& layer : graph.layers()) {
    for (const auto& clique : layer.cliques()) {
      if (clique.size() > 1 || layer.singletons() == SingletonMode::Haar) ++t.blocks;
    }
  }
  // Keep results observable so the work cannot be elided.
  double sink = 0.0;
  auto start = Clock::now();
  for (std::size_t d = 0; d < draws; ++d) {
    sink += evolution_unitary(graph, RandomStream(master_seed, d), cap).matrix()(0, 0).real();
  }
  t.structured_seconds = seconds_since(start);
  start = Clock::now();
  for (std::size_t d = 0; d < draws; ++d) {
    sink += haar_unitary(n, RandomStream(master_seed, d)).matrix()(0, 0).real();
  }
  t.cue_seconds = seconds_since(start);
  static volatile double observed = 0.0;
  observed = sink;
  return t;
}

}  // namespace unigraph
