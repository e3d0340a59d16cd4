// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "unigraph/graph.hpp"

using namespace unigraph;
using unigraph::test::expect_error;

namespace {

Clique C(std::vector<long long> labels) { return Clique::from_labels(labels); }

std::vector<std::vector<std::size_t>> members(const Layer& layer) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : layer.cliques()) out.push_back(c.particles());
  return out;
}

}  // namespace

TEST_CASE("particle system") {
  ParticleSystem s({2, 3, 4});
  CHECK(s.size() == 3);
  CHECK(s.total_dim() == 24);
  CHECK(ParticleSystem::uniform(10, 2).total_dim() == 1024);
  expect_error([] { ParticleSystem({2, 0}); }, ErrorCode::InvalidDimension, 2);
  expect_error([] { ParticleSystem(std::vector<std::size_t>{}); }, ErrorCode::InvalidDimension);
  expect_error([] { ParticleSystem::uniform(70, 2); }, ErrorCode::DimensionOverflow);
}

TEST_CASE("clique normalizes and rejects bad labels") {
  CHECK(C({3, 1}).particles() == std::vector<std::size_t>{0, 2});
  expect_error([] { C({}); }, ErrorCode::InvalidPartition);
  expect_error([] { C({2, 2}); }, ErrorCode::DuplicateParticle, 2);
  expect_error([] { C({0}); }, ErrorCode::IndexOutOfRange, 0);
}

TEST_CASE("validate_layer") {
  validate_layer(Layer("w", {C({1, 2}), C({3, 4})}), 4);
  expect_error([] { validate_layer(Layer("w", {C({1})}), 2); }, ErrorCode::MissingParticle, 2);
  expect_error([] { validate_layer(Layer("w", {C({1, 2}), C({2, 3})}), 3); },
               ErrorCode::DuplicateParticle, 2);
  expect_error([] { validate_layer(Layer("w", {C({1, 5}), C({2, 3})}), 4); },
               ErrorCode::IndexOutOfRange, 5);
}

TEST_CASE("validate_layer accepts exactly the partitions") {
  // Property: accepted iff the sorted concatenation of the cliques is 1..k.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + rng() % 6;
    std::vector<Clique> cliques;
    std::vector<std::size_t> all;
    const std::size_t groups = 1 + rng() % 4;
    for (std::size_t g = 0; g < groups; ++g) {
      std::vector<std::size_t> c;
      const std::size_t size = 1 + rng() % 3;
      for (std::size_t i = 0; i < size; ++i) c.push_back(rng() % (k + 1));
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      all.insert(all.end(), c.begin(), c.end());
      cliques.emplace_back(c);
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expected(k);
    for (std::size_t i = 0; i < k; ++i) expected[i] = i;
    bool accepted = true;
    try {
      validate_layer(Layer("x", cliques), k);
    } catch (const Error&) {
      accepted = false;
    }
    CHECK(accepted == (all == expected));
  }
}

TEST_CASE("graph needs at least one layer") {
  expect_error([] { InteractionGraph(ParticleSystem::uniform(2, 2), {}); },
               ErrorCode::InvalidPartition);
}

TEST_CASE("is_connected") {
  const auto ring6 = InteractionGraph(
      ParticleSystem::uniform(6, 2),
      {Layer("a", {C({1, 2}), C({3, 4}), C({5, 6})}), Layer("b", {C({2, 3}), C({4, 5}), C({6, 1})})});
  CHECK(is_connected(ring6));
  CHECK(is_connected(InteractionGraph(ParticleSystem::uniform(1, 3), {Layer("a", {C({1})})})));
  const auto split = InteractionGraph(ParticleSystem::uniform(4, 2),
                                      {Layer("a", {C({1, 2}), C({3, 4})}),
                                       Layer("b", {C({3, 4}), C({1, 2})})});
  CHECK_FALSE(is_connected(split));
  const auto comps = connected_components(split);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::size_t>{0, 1});
  CHECK(comps[1] == std::vector<std::size_t>{2, 3});
}

TEST_CASE("is_connected ignores layer order and clique order") {
  const auto a = InteractionGraph(ParticleSystem::uniform(5, 2),
                                  {Layer("a", {C({1, 2}), C({3}), C({4, 5})}),
                                   Layer("b", {C({2, 3}), C({1}), C({4}), C({5})})});
  const auto b = InteractionGraph(ParticleSystem::uniform(5, 2),
                                  {Layer("b", {C({5}), C({4}), C({1}), C({3, 2})}),
                                   Layer("a", {C({5, 4}), C({3}), C({2, 1})})});
  CHECK(is_connected(a) == is_connected(b));
  CHECK_FALSE(is_connected(a));
}

TEST_CASE("from_bond_vertex_graph") {
  const auto g = from_bond_vertex_graph({{1, 2}, {3, 4}}, {{2, 3}, {1, 4}}, 2);
  REQUIRE(g.layers().size() == 2);
  CHECK(members(g.layers()[0]) == std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}});
  CHECK(members(g.layers()[1]) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  CHECK(g.total_dim() == 16);

  const auto b = from_bond_vertex_graph({{1, 2}}, {{1}, {2}}, 3);
  CHECK(members(b.layers()[0]) == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(members(b.layers()[1]) == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(b.total_dim() == 9);

  // Repeated bonds collapse.
  const auto d = from_bond_vertex_graph({{1, 2}, {2, 1}}, {{1}, {2}}, 2);
  CHECK(d == from_bond_vertex_graph({{1, 2}}, {{1}, {2}}, 2));

  expect_error([] { from_bond_vertex_graph({{1, 2}}, {{1}, {2}, {3}}, 2); },
               ErrorCode::OddParticleCount);
  expect_error([] { from_bond_vertex_graph({{1, 2}, {3, 4}}, {{1, 2}, {3}}, 2); },
               ErrorCode::MissingParticle, 4);
}

TEST_CASE("ring_graph") {
  const auto r6 = ring_graph(6, 2);
  CHECK(members(r6.layers()[0]) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(members(r6.layers()[1]) == std::vector<std::vector<std::size_t>>{{0, 5}, {1, 2}, {3, 4}});

  const auto r2 = ring_graph(2, 2);
  CHECK(members(r2.layers()[0]) == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(members(r2.layers()[1]) == std::vector<std::vector<std::size_t>>{{0, 1}});

  const auto r4 = ring_graph(4, 3);
  CHECK(members(r4.layers()[0]) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  CHECK(members(r4.layers()[1]) == std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}});
  CHECK(r4.total_dim() == 81);

  expect_error([] { ring_graph(5, 2); }, ErrorCode::OddParticleCount);
  for (std::size_t k = 2; k <= 12; k += 2) CHECK(is_connected(ring_graph(k, 2)));
}

TEST_CASE("chain_graph") {
  const auto c6 = chain_graph(6, 2);
  REQUIRE(c6.layers().size() == 5);
  CHECK(members(c6.layers()[0]) ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {2}, {3}, {4}, {5}});
  CHECK(members(c6.layers()[4]) ==
        std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {3}, {4, 5}});

  const auto c2 = chain_graph(2, 2);
  REQUIRE(c2.layers().size() == 1);
  CHECK(members(c2.layers()[0]) == std::vector<std::vector<std::size_t>>{{0, 1}});

  const auto c4 = chain_graph(4, 4);
  REQUIRE(c4.layers().size() == 3);
  CHECK(members(c4.layers()[1]) == std::vector<std::vector<std::size_t>>{{0}, {1, 2}, {3}});
  CHECK(c4.total_dim() == 256);

  expect_error([] { chain_graph(1, 2); }, ErrorCode::InvalidArgument);
  for (std::size_t k = 2; k <= 9; ++k) CHECK(is_connected(chain_graph(k, 2)));
}

TEST_CASE("figure builders") {
  const auto sq = square_graph(4);
  CHECK(members(sq.layers()[0]) == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
  CHECK(members(sq.layers()[1]) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  CHECK(sq.total_dim() == 256);

  const auto p = pair_graph(10);
  CHECK(p.total_dim() == 100);
  CHECK(members(p.layers()[1]) == std::vector<std::vector<std::size_t>>{{0, 1}});

  const auto t = triangle_graph(2);
  CHECK(t.total_dim() == 64);
  CHECK(is_connected(t));

  const auto tc = two_colour_chain_graph({3, 4, 3});
  CHECK(tc.total_dim() == 36);
  CHECK(is_connected(tc));
  CHECK(members(tc.layers()[0]) == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  CHECK(members(tc.layers()[1]) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});

  const auto dp = disjoint_pairs_graph(2, 4);
  CHECK(dp.total_dim() == 256);
  CHECK_FALSE(is_connected(dp));
  CHECK(connected_components(dp).size() == 2);
}
