// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unigraph {

/// Local Hilbert-space dimensions of k particles. Particle 0 is the most
/// significant tensor factor. Construction rejects k == 0, zero dimensions
/// and totals that overflow std::size_t.
class ParticleSystem {
 public:
  explicit ParticleSystem(std::vector<std::size_t> dims);
  static ParticleSystem uniform(std::size_t k, std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return dims_.size(); }
  [[nodiscard]] std::size_t dim(std::size_t particle) const {
    return dims_.at(particle);
  }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept {
    return dims_;
  }
  [[nodiscard]] std::size_t total_dim() const noexcept { return total_; }

  friend bool operator==(const ParticleSystem&, const ParticleSystem&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

/// Strictly increasing set of 0-based particle indices.
class Clique {
 public:
  /// Takes 0-based indices in any order; rejects empty input and repeats.
  explicit Clique(std::vector<std::size_t> particles);
  /// Takes the 1-based labels used in files and on the command line.
  static Clique from_labels(const std::vector<long long>& labels);

  [[nodiscard]] const std::vector<std::size_t>& particles() const noexcept {
    return particles_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return particles_.size(); }
  [[nodiscard]] std::size_t front() const noexcept { return particles_.front(); }
  [[nodiscard]] bool contains(std::size_t particle) const noexcept;

  friend bool operator==(const Clique&, const Clique&) = default;
  friend auto operator<=>(const Clique&, const Clique&) = default;

 private:
  std::vector<std::size_t> particles_;
};

/// What a one-particle clique stands for when a layer is assembled.
enum class SingletonMode { Haar, Identity };

std::string_view to_string(SingletonMode mode) noexcept;

/// One time step: a partition of all particles into cliques. The cliques are
/// kept sorted by their smallest member, which fixes the random sub-stream
/// each clique draws from.
class Layer {
 public:
  Layer(std::string color, std::vector<Clique> cliques,
        SingletonMode singletons = SingletonMode::Haar);

  [[nodiscard]] const std::string& color() const noexcept { return color_; }
  [[nodiscard]] const std::vector<Clique>& cliques() const noexcept {
    return cliques_;
  }
  [[nodiscard]] SingletonMode singletons() const noexcept { return singletons_; }

  friend bool operator==(const Layer&, const Layer&) = default;

 private:
  std::string color_;
  std::vector<Clique> cliques_;
  SingletonMode singletons_;
};

/// Throws Error{IndexOutOfRange | DuplicateParticle | MissingParticle} with the
/// 1-based label of the first violating particle unless the layer's cliques
/// partition {0..k-1}.
void validate_layer(const Layer& layer, std::size_t k);

/// Particles plus an ordered list of layers; layers()[0] acts first.
/// Immutable and fully validated once constructed.
class InteractionGraph {
 public:
  InteractionGraph(ParticleSystem system, std::vector<Layer> layers);

  [[nodiscard]] const ParticleSystem& system() const noexcept { return system_; }
  [[nodiscard]] const std::vector<Layer>& layers() const noexcept {
    return layers_;
  }
  [[nodiscard]] std::size_t particle_count() const noexcept {
    return system_.size();
  }
  [[nodiscard]] std::size_t total_dim() const noexcept {
    return system_.total_dim();
  }

  friend bool operator==(const InteractionGraph&,
                         const InteractionGraph&) = default;

 private:
  ParticleSystem system_;
  std::vector<Layer> layers_;
};

/// Connected components of the union graph (all layers merged). Each component
/// is sorted; components are ordered by their smallest particle.
std::vector<std::vector<std::size_t>> connected_components(
    const InteractionGraph& graph);

bool is_connected(const InteractionGraph& graph);

/// Bond/vertex construction: vertex groups act first, then bonds. Pairs and
/// groups use 1-based labels; repeated entries are dropped.
InteractionGraph from_bond_vertex_graph(
    const std::vector<std::pair<long long, long long>>& bond_pairs,
    const std::vector<std::vector<long long>>& vertex_groups, std::size_t n);

/// Two-colour ring: {1,2},{3,4},... then {2,3},{4,5},...,{k,1}.
InteractionGraph ring_graph(std::size_t k, std::size_t n);

/// k-1 layers; layer i couples particles i and i+1 only.
InteractionGraph chain_graph(std::size_t k, std::size_t n);

/// Two-colour open chain: {1},{2,3},{4,5},... then {1,2},{3,4},...
/// (the three-particle case is {1},{2,3} then {1,2},{3}).
InteractionGraph two_colour_chain_graph(const std::vector<std::size_t>& dims);

/// Four particles on a square: {1,3},{2,4} then {1,2},{3,4}.
InteractionGraph square_graph(std::size_t n);

/// Two particles: single-particle blocks, then one joint block.
InteractionGraph pair_graph(std::size_t n);

/// Six particles: {1,4},{2,5},{3,6} then {1,2,3},{4},{5},{6}.
InteractionGraph triangle_graph(std::size_t n);

/// `blocks` disjoint copies of pair_graph on consecutive particles.
InteractionGraph disjoint_pairs_graph(std::size_t blocks, std::size_t n);

}  // namespace unigraph
