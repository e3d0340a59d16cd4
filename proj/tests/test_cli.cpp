// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "unigraph/entropy.hpp"
#include "unigraph/unitary.hpp"

namespace fs = std::filesystem;
using namespace unigraph;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "unigraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("unigraph_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Reads the unitary written by `gen` in csv form.
Matrix read_unitary_csv(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    REQUIRE(rows[std::size_t(i)].size() == std::size_t(2 * n));
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = {rows[std::size_t(i)][std::size_t(2 * j)], rows[std::size_t(i)][std::size_t(2 * j + 1)]};
    }
  }
  return m;
}

}  // namespace

TEST_CASE("gen writes a unitary with provenance") {
  TempDir dir;
  const auto r = invoke({"gen", "--ring", "4", "--n", "2", "--seed", "7", "--out", dir.str()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("seed: 7") != std::string::npos);
  const auto text = slurp(dir.path / "unitary.csv");
  CHECK(text.find("# seed: 7") != std::string::npos);
  CHECK(text.find("# spec_hash: ") != std::string::npos);
  const Matrix u = read_unitary_csv(dir.path / "unitary.csv");
  CHECK(u.rows() == 16);
  CHECK(unitarity_defect(u) < 1e-12);

  TempDir again;
  invoke({"gen", "--ring", "4", "--n", "2", "--seed", "7", "--out", again.str()});
  CHECK(read_unitary_csv(again.path / "unitary.csv") == u);
}

TEST_CASE("gen json format") {
  TempDir dir;
  const auto r = invoke({"gen", "--cue", "3", "--format", "json", "--out", dir.str()});
  CHECK(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(slurp(dir.path / "unitary.json"));
  CHECK(doc["dim"] == 3);
  CHECK(doc["re"].size() == 3);
  CHECK(doc["provenance"]["seed"] == 0x5EED);
}

TEST_CASE("gen of a ten-qubit ring") {
  TempDir dir;
  const auto r = invoke({"gen", "--ring", "10", "--n", "2", "--out", dir.str()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("(1024x1024)") != std::string::npos);
}

TEST_CASE("invalid graphs exit with code 2") {
  TempDir dir;
  const auto bad = dir.path / "bad.json";
  std::ofstream(bad) << R"({"dims":[2,2,2],"layers":[{"cliques":[[1,2]]}]})";
  const auto r = invoke({"gen", "--graph", bad.string(), "--out", dir.str()});
  CHECK(r.code == cli::kSpecError);
  CHECK(r.err.find("MissingParticle(3)") != std::string::npos);

  CHECK(invoke({"validate", "--ring", "5"}).code == cli::kSpecError);
  CHECK(invoke({"gen", "--out", dir.str()}).code == cli::kSpecError);
  CHECK(invoke({"gen", "--ring", "4", "--cue", "4"}).code == cli::kSpecError);
  CHECK(invoke({"run", "--cue", "4", "--analyses", "bogus"}).code == cli::kSpecError);
  CHECK(invoke({"frobnicate"}).code == cli::kSpecError);
}

TEST_CASE("dimension cap exits with code 3") {
  TempDir dir;
  const auto r = invoke({"gen", "--ring", "4", "--n", "4", "--dim-cap", "100", "--out", dir.str()});
  CHECK(r.code == cli::kCapExceeded);
  CHECK(r.err.find("DimensionCapExceeded") != std::string::npos);
  CHECK(invoke({"run", "--cue", "300", "--dim-cap", "299", "--out", dir.str()}).code ==
        cli::kCapExceeded);
}

TEST_CASE("run writes report.json and histogram csv") {
  TempDir dir;
  const auto r = invoke({"run", "--cue", "64", "--draws", "200", "--analyses", "evec_entropy",
                         "--out", dir.str()});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(slurp(dir.path / "report.json"));
  const double mean = doc["analyses"]["evec_entropy"]["value"]["mean"].get<double>();
  CHECK(std::abs(mean - mean_random_vector_entropy(64)) / mean_random_vector_entropy(64) < 0.01);
  CHECK(doc["provenance"]["seed"] == 0x5EED);
  const auto csv = slurp(dir.path / "evec_entropy.csv");
  CHECK(csv.rfind("# command: ", 0) == 0);
  CHECK(csv.find("bin_left,bin_right,count,density") != std::string::npos);
}

TEST_CASE("run with graph analyses and 1-based labels") {
  TempDir dir;
  const auto r = invoke({"run", "--two-colour-chain", "3", "--dims", "2,3,2", "--draws", "5",
                         "--analyses", "spacing,entanglement,projection,trace_moments,state_sample",
                         "--keep", "1", "--project-particle", "2", "--workers", "2", "--bits",
                         "--out", dir.str()});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(slurp(dir.path / "report.json"));
  CHECK(doc["analyses"]["entanglement"]["keep"] == nlohmann::json::array({1}));
  CHECK(doc["analyses"]["projection"]["particle"] == 2);
  CHECK(doc["log_base"] == "2");
  CHECK(fs::exists(dir.path / "spacing.csv"));
  CHECK(r.out.find("KS(Wigner)") != std::string::npos);

  const auto e = invoke({"run", "--ring", "4", "--analyses", "entanglement", "--keep", "1,2,3,4",
                         "--out", dir.str()});
  CHECK(e.code == cli::kSpecError);
}

TEST_CASE("random seeds are printed") {
  TempDir dir;
  const auto r = invoke({"gen", "--cue", "2", "--seed", "random", "--out", dir.str()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("seed: ", 0) == 0);
  CHECK(invoke({"gen", "--cue", "2", "--seed", "0x10", "--out", dir.str()}).out.rfind("seed: 16", 0) == 0);
}

TEST_CASE("bench and validate") {
  const auto b = invoke({"bench", "--ring", "4", "--n", "2", "--draws", "1"});
  CHECK(b.code == cli::kOk);
  CHECK(b.out.find("CUE, N=16") != std::string::npos);
  CHECK(b.out.find("graph, 4 blocks, N=16") != std::string::npos);

  const auto v = invoke({"validate", "--bonds", "1-2,3-4", "--vertices", "2,3;1,4", "--n", "2"});
  CHECK(v.code == cli::kOk);
  CHECK(v.out.find("k=4 N=16") != std::string::npos);
  CHECK(v.out.find("connected=yes") != std::string::npos);
}
