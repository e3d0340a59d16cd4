// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unigraph/ensemble.hpp"
#include "unigraph/error.hpp"
#include "unigraph/graph.hpp"
#include "unigraph/graph_json.hpp"
#include "unigraph/kernels.hpp"
#include "unigraph/report.hpp"

namespace unigraph::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

struct Config {
  // source
  std::string graph_path;
  std::optional<std::size_t> ring;
  std::optional<std::size_t> chain;
  std::optional<std::size_t> two_colour_chain;
  bool square = false;
  bool pair = false;
  bool triangle = false;
  std::optional<std::size_t> disjoint_pairs;
  std::string bonds;
  std::string vertices;
  std::size_t n = 2;
  std::string dims;
  std::optional<std::size_t> cue;
  std::optional<std::size_t> composed;
  std::optional<std::size_t> diagonal;
  std::string factors;
  // campaign
  std::string seed = "0x5EED";
  std::size_t draws = 1;
  std::string analyses = "spacing";
  std::string keep;
  std::optional<std::size_t> project_particle;
  std::string project_keep;
  std::size_t max_power = 4;
  std::size_t phase_bins = 32;
  std::string out_dir = ".";
  std::string format = "csv";
  std::size_t workers = 1;
  std::optional<std::size_t> dim_cap;
  bool bits = false;
  bool strict_spacing = false;
  bool unweighted_projection = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

long long parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used, 0);
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

std::vector<long long> parse_labels(const std::string& text) {
  std::vector<long long> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (long long v : parse_labels(text)) {
    if (v < 1) throw UsageError("dimensions must be >= 1");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<std::size_t> parse_particles(const std::string& text) {
  std::vector<std::size_t> out;
  for (long long v : parse_labels(text)) {
    if (v < 1) {
      throw Error(ErrorCode::IndexOutOfRange, "particle labels are 1-based",
                  static_cast<std::uint64_t>(v < 0 ? 0 : v));
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t resolve_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw UsageError("bad seed '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad seed '" + text + "' (integer or 'random')");
  }
}

std::size_t resolve_cap(const Config& c) {
  if (c.dim_cap) return *c.dim_cap;
  if (const char* env = std::getenv("UNIGRAPH_DIM_CAP"); env && *env) {
    const long long v = parse_int(env);
    if (v < 1) throw UsageError("UNIGRAPH_DIM_CAP must be >= 1");
    return static_cast<std::size_t>(v);
  }
  return kDefaultDimCap;
}

std::optional<InteractionGraph> build_graph(const Config& c) {
  int chosen = 0;
  std::optional<InteractionGraph> g;
  auto take = [&](auto&& make) {
    ++chosen;
    if (chosen == 1) g.emplace(make());
  };
  if (!c.graph_path.empty()) take([&] { return load_graph_spec(c.graph_path); });
  if (c.ring) take([&] { return ring_graph(*c.ring, c.n); });
  if (c.chain) take([&] { return chain_graph(*c.chain, c.n); });
  if (c.two_colour_chain) {
    take([&] {
      const auto dims = c.dims.empty() ? std::vector<std::size_t>(*c.two_colour_chain, c.n)
                                       : parse_sizes(c.dims);
      if (dims.size() != *c.two_colour_chain) throw UsageError("--dims length must equal k");
      return two_colour_chain_graph(dims);
    });
  }
  if (c.square) take([&] { return square_graph(c.n); });
  if (c.pair) take([&] { return pair_graph(c.n); });
  if (c.triangle) take([&] { return triangle_graph(c.n); });
  if (c.disjoint_pairs) take([&] { return disjoint_pairs_graph(*c.disjoint_pairs, c.n); });
  if (!c.bonds.empty() || !c.vertices.empty()) {
    take([&] {
      std::vector<std::pair<long long, long long>> bonds;
      for (const auto& b : split(c.bonds, ',')) {
        const auto ends = split(b, '-');
        if (ends.size() != 2) throw UsageError("bonds are written as a-b, got '" + b + "'");
        bonds.emplace_back(parse_int(ends[0]), parse_int(ends[1]));
      }
      std::vector<std::vector<long long>> groups;
      for (const auto& v : split(c.vertices, ';')) groups.push_back(parse_labels(v));
      return from_bond_vertex_graph(bonds, groups, c.n);
    });
  }
  if (chosen > 1) throw UsageError("give exactly one graph source");
  return g;
}

EnsembleSource build_source(const Config& c) {
  auto graph = build_graph(c);
  std::optional<ReferenceSource> ref;
  int refs = 0;
  auto set_ref = [&](ReferenceKind kind, std::size_t dim) {
    ++refs;
    ref = ReferenceSource{kind, dim, c.factors.empty() ? std::vector<std::size_t>{}
                                                       : parse_sizes(c.factors)};
  };
  if (c.cue) set_ref(ReferenceKind::Cue, *c.cue);
  if (c.composed) set_ref(ReferenceKind::Composed, *c.composed);
  if (c.diagonal) set_ref(ReferenceKind::Diagonal, *c.diagonal);
  if (refs + (graph ? 1 : 0) != 1) {
    throw UsageError("give exactly one source: a graph option or --cue/--composed/--diagonal");
  }
  if (graph) return std::move(*graph);
  return *ref;
}

InteractionGraph require_graph(const Config& c) {
  auto g = build_graph(c);
  if (!g) throw UsageError("this command needs a graph (--graph, --ring, --chain, ...)");
  return std::move(*g);
}

Analyses build_analyses(const Config& c) {
  Analyses a;
  for (const auto& name : split(c.analyses, ',')) {
    if (name == "spacing") {
      a.spacing = true;
    } else if (name == "phase_density") {
      a.phase_density = true;
    } else if (name == "evec_entropy") {
      a.evec_entropy = true;
    } else if (name == "entanglement") {
      if (c.keep.empty()) throw UsageError("entanglement needs --keep");
      a.entanglement = parse_particles(c.keep);
    } else if (name == "element_entropy") {
      a.element_entropy = true;
    } else if (name == "projection") {
      if (!c.project_particle) throw UsageError("projection needs --project-particle");
      if (*c.project_particle < 1) throw UsageError("--project-particle is 1-based");
      a.projection = *c.project_particle - 1;
      if (!c.project_keep.empty()) a.projection_keep = parse_particles(c.project_keep);
    } else if (name == "trace_moments") {
      a.trace_moments = c.max_power;
    } else if (name == "state_sample") {
      a.state_sample = true;
    } else {
      throw UsageError("unknown analysis '" + name + "'");
    }
  }
  if (a.state_sample && !a.entanglement && !c.keep.empty()) a.entanglement = parse_particles(c.keep);
  return a;
}

std::string command_line(int argc, const char* const* argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

std::string source_hash(const EnsembleSource& source) {
  if (const auto* g = std::get_if<InteractionGraph>(&source)) return graph_spec_hash(*g);
  const auto& ref = std::get<ReferenceSource>(source);
  std::string key = std::string(to_string(ref.kind)) + ":" + std::to_string(ref.dim);
  for (std::size_t f : ref.factors) key += "," + std::to_string(f);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key)));
  return buf;
}

nlohmann::json provenance(const std::string& cmdline, std::uint64_t seed,
                          const EnsembleSource& source) {
  std::ostringstream eigen;
  eigen << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.' << EIGEN_MINOR_VERSION;
  return {{"command", cmdline},
          {"seed", seed},
          {"spec_hash", source_hash(source)},
          {"unigraph_version", kVersion},
          {"eigen_version", eigen.str()}};
}

void write_comment_header(std::ostream& out, const nlohmann::json& prov) {
  for (const auto& [key, value] : prov.items()) {
    out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  return f;
}

int cmd_gen(const Config& c, const std::string& cmdline, std::ostream& out) {
  const EnsembleSource source = build_source(c);
  const std::uint64_t seed = resolve_seed(c.seed);
  out << "seed: " << seed << '\n';
  const UnitaryMatrix u = draw_matrix(source, RandomStream(seed, 0), resolve_cap(c));
  const auto prov = provenance(cmdline, seed, source);
  std::filesystem::create_directories(c.out_dir);
  const auto n = static_cast<Eigen::Index>(u.dim());
  std::filesystem::path path = std::filesystem::path(c.out_dir) /
                               (c.format == "json" ? "unitary.json" : "unitary.csv");
  auto f = open_output(path);
  if (c.format == "json") {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
      std::vector<double> r, m;
      for (Eigen::Index j = 0; j < n; ++j) {
        r.push_back(u.matrix()(i, j).real());
        m.push_back(u.matrix()(i, j).imag());
      }
      re.push_back(r);
      im.push_back(m);
    }
    f << nlohmann::json{{"provenance", prov}, {"dim", u.dim()}, {"re", re}, {"im", im}}.dump()
      << '\n';
  } else {
    write_comment_header(f, prov);
    f << "# dim: " << u.dim() << "\n# row i: re(u_i1),im(u_i1),...,re(u_iN),im(u_iN)\n";
    f << std::setprecision(17);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j) f << ',';
        f << u.matrix()(i, j).real() << ',' << u.matrix()(i, j).imag();
      }
      f << '\n';
    }
  }
  out << "wrote " << path.string() << " (" << u.dim() << "x" << u.dim() << ")\n";
  return kOk;
}

int cmd_run(const Config& c, const std::string& cmdline, std::ostream& out) {
  EnsembleSpec spec{build_source(c)};
  spec.draws = c.draws;
  spec.analyses = build_analyses(c);
  spec.options.workers = c.workers;
  spec.options.dim_cap = resolve_cap(c);
  spec.options.include_wrap = !c.strict_spacing;
  spec.options.phase_bins = c.phase_bins;
  spec.options.projection_weighting =
      c.unweighted_projection ? ProjectionWeighting::Uniform : ProjectionWeighting::ByWeight;
  spec.master_seed = resolve_seed(c.seed);
  out << "seed: " << spec.master_seed << '\n';
  validate_spec(spec);
  const auto report = run_ensemble(spec);
  const LogBase base = c.bits ? LogBase::Bits : LogBase::Nats;
  const auto prov = provenance(cmdline, spec.master_seed, spec.source);

  std::filesystem::create_directories(c.out_dir);
  const std::filesystem::path dir(c.out_dir);
  auto doc = nlohmann::json::parse(report_to_json(report, base));
  doc["provenance"] = prov;
  {
    auto f = open_output(dir / "report.json");
    f << doc.dump(2) << '\n';
  }
  out << "wrote " << (dir / "report.json").string() << '\n';
  for (const auto& [name, csv] : report_histograms(report, base)) {
    auto f = open_output(dir / (name + ".csv"));
    write_comment_header(f, prov);
    f << csv;
    out << "wrote " << (dir / (name + ".csv")).string() << '\n';
  }
  if (report.spacing) {
    out << "spacing: variance " << report.spacing->variance << ", KS(Wigner) "
        << report.spacing->ks_wigner << ", KS(Poisson) " << report.spacing->ks_poisson << '\n';
  }
  return kOk;
}

int cmd_bench(const Config& c, std::ostream& out) {
  const InteractionGraph g = require_graph(c);
  const std::uint64_t seed = resolve_seed(c.seed);
  out << "seed: " << seed << '\n';
  const auto t = benchmark_generation(g, c.draws, seed, resolve_cap(c));
  out << std::fixed;
  out << std::left << std::setw(40) << "matrix type" << std::setw(14) << "# matrices"
      << std::setw(12) << "time [s]" << "rel. time [%]\n";
  out << std::setw(40) << ("CUE, N=" + std::to_string(t.dim)) << std::setw(14) << t.draws
      << std::setw(12) << std::setprecision(4) << t.cue_seconds << std::setprecision(1) << 100.0
      << '\n';
  out << std::setw(40) << ("graph, " + std::to_string(t.blocks) + " blocks, N=" + std::to_string(t.dim))
      << std::setw(14) << t.draws << std::setw(12) << std::setprecision(4) << t.structured_seconds
      << std::setprecision(1) << 100.0 * t.ratio() << '\n';
  return kOk;
}

int cmd_validate(const Config& c, std::ostream& out) {
  const InteractionGraph g = require_graph(c);
  out << "valid: k=" << g.particle_count() << " N=" << g.total_dim()
      << " layers=" << g.layers().size() << " connected=" << (is_connected(g) ? "yes" : "no")
      << " hash=" << graph_spec_hash(g) << '\n';
  return kOk;
}

void add_source_options(CLI::App* app, Config& c, bool references) {
  app->add_option("--graph", c.graph_path, "Graph spec JSON file");
  app->add_option("--ring", c.ring, "Two-colour ring of K particles (K even)");
  app->add_option("--chain", c.chain, "K-1 step chain of K particles");
  app->add_option("--two-colour-chain", c.two_colour_chain, "Two-colour open chain of K particles");
  app->add_flag("--square", c.square, "Four particles on a square");
  app->add_flag("--pair", c.pair, "Two particles: local blocks then a joint block");
  app->add_flag("--triangle", c.triangle, "Six particles: pairs then a three-particle clique");
  app->add_option("--disjoint-pairs", c.disjoint_pairs, "B disconnected two-particle blocks");
  app->add_option("--bonds", c.bonds, "Bond pairs, e.g. 1-2,3-4");
  app->add_option("--vertices", c.vertices, "Vertex groups, e.g. 2,3;1,4");
  app->add_option("--n", c.n, "Local dimension for builtin graphs")->check(CLI::PositiveNumber);
  app->add_option("--dims", c.dims, "Per-particle dimensions for --two-colour-chain");
  if (references) {
    app->add_option("--cue", c.cue, "CUE reference of order N");
    app->add_option("--composed", c.composed, "Composed P1 X P2 X^dagger reference of order N");
    app->add_option("--diagonal", c.diagonal, "Random diagonal (Poisson) reference of order N");
    app->add_option("--factors", c.factors, "Tensor factors of a reference source, e.g. 4,4");
  }
  app->add_option("--dim-cap", c.dim_cap, "Largest allowed total dimension");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Graph-structured random unitary ensembles", "unigraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* gen = app.add_subcommand("gen", "Sample one evolution unitary");
  add_source_options(gen, c, true);
  gen->add_option("--seed", c.seed, "Master seed (integer or 'random')");
  gen->add_option("--out", c.out_dir, "Output directory");
  gen->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* runc = app.add_subcommand("run", "Run a Monte Carlo ensemble");
  add_source_options(runc, c, true);
  runc->add_option("--seed", c.seed, "Master seed (integer or 'random')");
  runc->add_option("--draws", c.draws, "Number of matrices")->check(CLI::PositiveNumber);
  runc->add_option("--analyses", c.analyses,
                   "Comma list: spacing,phase_density,evec_entropy,entanglement,"
                   "element_entropy,projection,trace_moments,state_sample");
  runc->add_option("--keep", c.keep, "Kept particles of the bipartition, e.g. 1,2");
  runc->add_option("--project-particle", c.project_particle, "Particle to project (1-based)");
  runc->add_option("--project-keep", c.project_keep, "Kept particles after projection");
  runc->add_option("--max-power", c.max_power, "Highest trace power")->check(CLI::PositiveNumber);
  runc->add_option("--phase-bins", c.phase_bins, "Bins of the phase-density test");
  runc->add_option("--out", c.out_dir, "Output directory");
  runc->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  runc->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  runc->add_flag("--bits", c.bits, "Report entropies in bits");
  runc->add_flag("--strict-spacing", c.strict_spacing, "Drop the circular wrap spacing");
  runc->add_flag("--unweighted-projection", c.unweighted_projection,
                 "Average projected slices uniformly instead of by weight");

  auto* bench = app.add_subcommand("bench", "Time graph versus CUE matrix generation");
  add_source_options(bench, c, false);
  bench->add_option("--seed", c.seed, "Master seed (integer or 'random')");
  bench->add_option("--draws", c.draws, "Number of matrices")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check a graph spec");
  add_source_options(validate, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kSpecError;
  }

  const std::string cmdline = command_line(argc, argv);
  try {
    if (gen->parsed()) return cmd_gen(c, cmdline, out);
    if (runc->parsed()) return cmd_run(c, cmdline, out);
    if (bench->parsed()) return cmd_bench(c, out);
    if (validate->parsed()) return cmd_validate(c, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code());
    if (e.index()) err << '(' << *e.index() << ')';
    err << ": " << e.what() << '\n';
    if (e.code() == ErrorCode::DimensionCapExceeded) return kCapExceeded;
    return e.is_spec_error() || e.code() == ErrorCode::EmptyKeepSet ||
                   e.code() == ErrorCode::FullKeepSet
               ? kSpecError
               : kFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kSpecError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kSpecError;
}

}  // namespace unigraph::cli
