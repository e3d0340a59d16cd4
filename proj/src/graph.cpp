// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "unigraph/error.hpp"

namespace unigraph {

namespace {

std::string label(std::size_t particle) {
  return std::to_string(particle + 1);
}

}  // namespace

ParticleSystem::ParticleSystem(std::vector<std::size_t> dims)
    : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw Error(ErrorCode::InvalidDimension, "particle system needs k >= 1");
  }
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (dims_[j] == 0) {
      throw Error(ErrorCode::InvalidDimension,
                  "particle " + label(j) + " has dimension 0", j + 1);
    }
    if (total_ > std::numeric_limits<std::size_t>::max() / dims_[j]) {
      throw Error(ErrorCode::DimensionOverflow,
                  "total dimension overflows at particle " + label(j), j + 1);
    }
    total_ *= dims_[j];
  }
}

ParticleSystem ParticleSystem::uniform(std::size_t k, std::size_t n) {
  return ParticleSystem(std::vector<std::size_t>(k, n));
}

Clique::Clique(std::vector<std::size_t> particles)
    : particles_(std::move(particles)) {
  if (particles_.empty()) {
    throw Error(ErrorCode::InvalidPartition, "empty clique");
  }
  std::sort(particles_.begin(), particles_.end());
  auto dup = std::adjacent_find(particles_.begin(), particles_.end());
  if (dup != particles_.end()) {
    throw Error(ErrorCode::DuplicateParticle,
                "particle " + label(*dup) + " repeated within a clique",
                *dup + 1);
  }
}

Clique Clique::from_labels(const std::vector<long long>& labels) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(labels.size());
  for (long long l : labels) {
    if (l < 1) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "particle label " + std::to_string(l) + " is not >= 1",
                  l < 0 ? 0 : static_cast<std::uint64_t>(l));
    }
    zero_based.push_back(static_cast<std::size_t>(l - 1));
  }
  return Clique(std::move(zero_based));
}

bool Clique::contains(std::size_t particle) const noexcept {
  return std::binary_search(particles_.begin(), particles_.end(), particle);
}

std::string_view to_string(SingletonMode mode) noexcept {
  return mode == SingletonMode::Haar ? "haar" : "identity";
}

Layer::Layer(std::string color, std::vector<Clique> cliques,
             SingletonMode singletons)
    : color_(std::move(color)),
      cliques_(std::move(cliques)),
      singletons_(singletons) {
  std::sort(cliques_.begin(), cliques_.end());
}

void validate_layer(const Layer& layer, std::size_t k) {
  std::vector<int> seen(k, 0);
  for (const auto& clique : layer.cliques()) {
    for (std::size_t p : clique.particles()) {
      if (p >= k) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "particle " + label(p) + " exceeds k = " +
                        std::to_string(k) + " in layer '" + layer.color() + "'",
                    p + 1);
      }
    }
  }
  for (const auto& clique : layer.cliques()) {
    for (std::size_t p : clique.particles()) {
      if (++seen[p] > 1) {
        throw Error(ErrorCode::DuplicateParticle,
                    "particle " + label(p) + " appears in two cliques of layer '" +
                        layer.color() + "'",
                    p + 1);
      }
    }
  }
  for (std::size_t p = 0; p < k; ++p) {
    if (seen[p] == 0) {
      throw Error(ErrorCode::MissingParticle,
                  "particle " + label(p) + " is not covered by layer '" +
                      layer.color() + "'",
                  p + 1);
    }
  }
}

InteractionGraph::InteractionGraph(ParticleSystem system,
                                   std::vector<Layer> layers)
    : system_(std::move(system)), layers_(std::move(layers)) {
  if (layers_.empty()) {
    throw Error(ErrorCode::InvalidPartition, "graph needs at least one layer");
  }
  for (const auto& layer : layers_) validate_layer(layer, system_.size());
}

std::vector<std::vector<std::size_t>> connected_components(
    const InteractionGraph& graph) {
  const std::size_t k = graph.particle_count();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& layer : graph.layers()) {
    for (const auto& clique : layer.cliques()) {
      const std::size_t root = find(clique.front());
      for (std::size_t p : clique.particles()) {
        const std::size_t r = find(p);
        if (r != root) parent[std::max(r, root)] = std::min(r, root);
      }
    }
  }
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> slot(k, k);
  for (std::size_t p = 0; p < k; ++p) {
    const std::size_t r = find(p);
    if (slot[r] == k) {
      slot[r] = components.size();
      components.emplace_back();
    }
    components[slot[r]].push_back(p);
  }
  return components;
}

bool is_connected(const InteractionGraph& graph) {
  return connected_components(graph).size() == 1;
}

InteractionGraph from_bond_vertex_graph(
    const std::vector<std::pair<long long, long long>>& bond_pairs,
    const std::vector<std::vector<long long>>& vertex_groups, std::size_t n) {
  std::set<Clique> bonds;
  std::set<Clique> vertices;
  long long k = 0;
  for (const auto& [a, b] : bond_pairs) {
    bonds.insert(Clique::from_labels({a, b}));
    k = std::max({k, a, b});
  }
  for (const auto& group : vertex_groups) {
    vertices.insert(Clique::from_labels(group));
    for (long long p : group) k = std::max(k, p);
  }
  if (k % 2 != 0) {
    throw Error(ErrorCode::OddParticleCount,
                "bond construction needs an even particle count, got " +
                    std::to_string(k),
                static_cast<std::uint64_t>(k));
  }
  if (bonds.empty()) {
    throw Error(ErrorCode::InvalidPartition, "no bonds given");
  }
  Layer vertex_layer("vertex", {vertices.begin(), vertices.end()});
  Layer bond_layer("bond", {bonds.begin(), bonds.end()});
  return InteractionGraph(
      ParticleSystem::uniform(static_cast<std::size_t>(k), n),
      {std::move(vertex_layer), std::move(bond_layer)});
}

InteractionGraph ring_graph(std::size_t k, std::size_t n) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::OddParticleCount,
                "ring needs an even k >= 2, got " + std::to_string(k), k);
  }
  std::vector<Clique> even;
  std::vector<Clique> odd;
  for (std::size_t i = 0; i < k; i += 2) {
    even.emplace_back(std::vector<std::size_t>{i, i + 1});
    odd.emplace_back(std::vector<std::size_t>{i + 1, (i + 2) % k});
  }
  if (k == 2) odd = {Clique({0, 1})};
  return InteractionGraph(ParticleSystem::uniform(k, n),
                          {Layer("red", std::move(even)),
                           Layer("black", std::move(odd))});
}

InteractionGraph chain_graph(std::size_t k, std::size_t n) {
  if (k < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "chain needs k >= 2, got " + std::to_string(k), k);
  }
  std::vector<Layer> layers;
  for (std::size_t step = 0; step + 1 < k; ++step) {
    std::vector<Clique> cliques;
    for (std::size_t p = 0; p < k; ++p) {
      if (p == step + 1) continue;
      if (p == step) {
        cliques.emplace_back(std::vector<std::size_t>{p, p + 1});
      } else {
        cliques.emplace_back(std::vector<std::size_t>{p});
      }
    }
    layers.emplace_back("step" + std::to_string(step + 1), std::move(cliques));
  }
  return InteractionGraph(ParticleSystem::uniform(k, n), std::move(layers));
}

InteractionGraph two_colour_chain_graph(const std::vector<std::size_t>& dims) {
  const std::size_t k = dims.size();
  if (k < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "chain needs k >= 2, got " + std::to_string(k), k);
  }
  // `offset` is the first particle of the first pair in the layer.
  auto matching = [k](std::size_t offset) {
    std::vector<Clique> cliques;
    if (offset == 1) cliques.emplace_back(std::vector<std::size_t>{0});
    std::size_t p = offset;
    for (; p + 1 < k; p += 2) {
      cliques.emplace_back(std::vector<std::size_t>{p, p + 1});
    }
    if (p < k) cliques.emplace_back(std::vector<std::size_t>{p});
    return cliques;
  };
  return InteractionGraph(ParticleSystem(dims),
                          {Layer("red", matching(1)),
                           Layer("black", matching(0))});
}

InteractionGraph square_graph(std::size_t n) {
  return InteractionGraph(ParticleSystem::uniform(4, n),
                          {Layer("red", {Clique({0, 2}), Clique({1, 3})}),
                           Layer("black", {Clique({0, 1}), Clique({2, 3})})});
}

InteractionGraph pair_graph(std::size_t n) {
  return InteractionGraph(ParticleSystem::uniform(2, n),
                          {Layer("red", {Clique({0}), Clique({1})}),
                           Layer("black", {Clique({0, 1})})});
}

InteractionGraph triangle_graph(std::size_t n) {
  return InteractionGraph(
      ParticleSystem::uniform(6, n),
      {Layer("red", {Clique({0, 3}), Clique({1, 4}), Clique({2, 5})}),
       Layer("black",
             {Clique({0, 1, 2}), Clique({3}), Clique({4}), Clique({5})})});
}

InteractionGraph disjoint_pairs_graph(std::size_t blocks, std::size_t n) {
  if (blocks == 0) {
    throw Error(ErrorCode::InvalidArgument, "need at least one block");
  }
  std::vector<Clique> singles;
  std::vector<Clique> pairs;
  for (std::size_t b = 0; b < blocks; ++b) {
    singles.emplace_back(std::vector<std::size_t>{2 * b});
    singles.emplace_back(std::vector<std::size_t>{2 * b + 1});
    pairs.emplace_back(std::vector<std::size_t>{2 * b, 2 * b + 1});
  }
  return InteractionGraph(ParticleSystem::uniform(2 * blocks, n),
                          {Layer("red", std::move(singles)),
                           Layer("black", std::move(pairs))});
}

}  // namespace unigraph
