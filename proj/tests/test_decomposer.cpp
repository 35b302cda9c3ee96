// Copyright 2026 The graphshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graphshare/checks.hpp"
#include "graphshare/constants.hpp"
#include "graphshare/decompose.hpp"
#include "graphshare/dfs_cycle.hpp"
#include "graphshare/generators.hpp"
#include "graphshare/hamiltonian.hpp"
#include "graphshare/oriented_paths.hpp"
#include "oracles.hpp"

namespace graphshare {
namespace {

struct Hamiltonian {
  WeightedGraph g;
  CycleCertificate h;
};

// Random permutation cycle plus random chords.
Hamiltonian random_hamiltonian(std::uint64_t seed, int size, double chord_probability) {
  std::mt19937_64 rng(seed);
  RandomSpec spec;
  spec.size = size;
  spec.seed = seed;
  spec.max_denominator = 2;
  WeightedGraph g(size);
  for (Vertex v = 0; v < size; ++v) g.set_weight(v, detail::draw_weight(rng, spec));
  std::vector<Vertex> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  if (size >= 2)
    for (int i = 0; i < size; ++i) g.add_edge(order[i], order[(i + 1) % size]);
  std::bernoulli_distribution chord(chord_probability);
  for (Vertex u = 0; u < size; ++u)
    for (Vertex v = u + 1; v < size; ++v)
      if (!g.adjacent(u, v) && chord(rng)) g.add_edge(u, v);
  return {g, CycleCertificate{order}};
}

WeightedGraph random_graph(std::uint64_t seed, int size, double extra = 0.2) {
  RandomSpec spec;
  spec.size = size;
  spec.seed = seed;
  spec.extra_edge_probability = extra;
  spec.max_denominator = 3;
  return random_connected(spec);
}

WeightedGraph uniform(WeightedGraph g) {
  for (Vertex v : g.vertices()) g.set_weight(v, Weight(1));
  return g;
}

WeightedGraph cycle_graph(int n) {
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

TEST(Constants, HamiltonianAndFull) {
  EXPECT_EQ(constants::kHamilSeparator, Weight(1, 5));
  EXPECT_EQ(constants::kHamilGrow, Weight(1, 5));
  EXPECT_EQ(constants::kHamilCombined, Weight(1, 25));
  EXPECT_EQ(constants::kFull, Weight(1, 52));
}

TEST(Constants, Recurrence) {
  EXPECT_EQ(constants::c_nm(3, 0), Weight(1, 2));
  // beta = (1/2) / (2 * 3/2) = 1/6, c = (1/6) / (7/6) = 1/7.
  EXPECT_EQ(constants::beta_nm(3, 1), Weight(1, 6));
  EXPECT_EQ(constants::c_nm(3, 1), Weight(1, 7));
  for (int n = 2; n <= 6; ++n) {
    for (std::int64_t m = 1; m <= constants::choose2(n); ++m) {
      EXPECT_LT(constants::c_nm(n, m), constants::c_nm(n, m - 1));
      EXPECT_GT(constants::c_nm(n, m), 0);
      EXPECT_LE(constants::c_nm(n, m), 1);
    }
    EXPECT_GT(constants::c_subdiv(n), 0);
    EXPECT_EQ(constants::c_subdiv(n), Weight(1, 52) * constants::c_nm(n, constants::choose2(n)));
  }
  EXPECT_THROW(constants::c_nm(3, 4), std::invalid_argument);
}

TEST(Constants, FinalAndGame) {
  EXPECT_EQ(constants::c_final(0), Weight(1, 15));
  EXPECT_EQ(constants::c_final(1), Weight(1, 80));
  EXPECT_EQ(constants::c_sparse(3), constants::c_subdiv(3) / 6);
  EXPECT_EQ(constants::c_game(1, 3), constants::c_final(1) * constants::c_sparse(3));
}

TEST(OrientedTwoPaths, SingleEdge) {
  OrientedPathGraph d(2);
  auto tp = oriented_two_paths(d);
  EXPECT_EQ(tp.q0, (std::vector<int>{0, 1}));
  EXPECT_EQ(tp.q1, (std::vector<int>{0, 1}));
}

TEST(OrientedTwoPaths, FourVertexExample) {
  // s a b t with s->b and a->t.
  OrientedPathGraph d(4);
  d.add_arc(0, 2);
  d.add_arc(1, 3);
  auto tp = oriented_two_paths(d);
  EXPECT_EQ(tp.q0, (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(tp.q1, (std::vector<int>{0, 1, 3}));
  EXPECT_FALSE(check_two_paths(d, tp));
}

TEST(OrientedTwoPaths, RejectsUncovered) {
  OrientedPathGraph d(4);
  d.add_arc(0, 2);
  EXPECT_THROW(oriented_two_paths(d), std::invalid_argument);
  EXPECT_THROW(d.add_arc(2, 1), std::invalid_argument);
}

TEST(OrientedTwoPaths, RandomCoveredInstances) {
  int done = 0;
  for (std::uint64_t seed = 0; done < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const int size = 2 + static_cast<int>(seed % 9);
    OrientedPathGraph d(size);
    std::bernoulli_distribution arc(0.35);
    for (int a = 0; a < size; ++a)
      for (int b = a + 2; b < size; ++b)
        if (arc(rng)) d.add_arc(a, b);
    bool covered = true;
    for (int x = 1; x + 1 < size; ++x) covered = covered && d.covered(x);
    if (!covered) continue;
    ++done;
    auto tp = oriented_two_paths(d);
    EXPECT_FALSE(check_two_paths(d, tp)) << "seed " << seed;
  }
}

TEST(HamilSeparator, Triangle) {
  WeightedGraph g({Weight(1), Weight(2), Weight(3)}, {{0, 1}, {1, 2}, {0, 2}});
  auto o = hamil_separator(g, CycleCertificate{{0, 1, 2}});
  EXPECT_EQ(o.tag, OutcomeTag::kCycleSet);
  EXPECT_EQ(o.set, g.vertices());
  EXPECT_EQ(o.achieved, Weight(6));
}

TEST(HamilSeparator, ChordlessNineCycle) {
  auto g = uniform(cycle_graph(9));
  CycleCertificate h;
  for (int i = 0; i < 9; ++i) h.order.push_back(i);
  auto o = hamil_separator(g, h);
  // Removing two adjacent vertices leaves a path, so no edge separates and
  // every vertex is uncovered.
  EXPECT_EQ(o.tag, OutcomeTag::kCycleSet);
  EXPECT_EQ(o.set, g.vertices());
  EXPECT_FALSE(check_hamil_separator(g, h, o));
}

TEST(HamilSeparator, RandomHamiltonianGraphs) {
  int tags[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    auto [g, h] = random_hamiltonian(seed, 1 + static_cast<int>(seed % 12), seed % 3 == 0 ? 0.5 : 0.15);
    auto o = hamil_separator(g, h);
    ++tags[static_cast<int>(o.tag)];
    auto defect = check_hamil_separator(g, h, o);
    EXPECT_FALSE(defect) << "seed " << seed << ": " << *defect;
  }
  EXPECT_GT(tags[static_cast<int>(OutcomeTag::kConnectedSeparator)], 0);
  EXPECT_GT(tags[static_cast<int>(OutcomeTag::kCycleSet)], 0);
}

// Hand-built block structure: a_0..a_16 along H, A = {a_7, a_16}. Vertex a_i has id
// (i + 1) mod 17 so that the path starts right after a_16.
TEST(HamilGrow, HandBuiltBlocks) {
  const std::vector<std::pair<int, int>> edges = {
      {0, 1},  {0, 2},   {0, 16},  {1, 2},   {1, 5},   {2, 3},   {3, 4},   {3, 7},   {4, 5},
      {5, 6},  {5, 8},   {5, 11},  {6, 7},   {6, 11},  {7, 8},   {7, 16},  {8, 9},   {8, 10},
      {9, 10}, {9, 13},  {10, 11}, {11, 12}, {12, 13}, {12, 14}, {13, 14}, {14, 15}, {15, 16}};
  auto id = [](int i) { return (i + 1) % 17; };
  WeightedGraph g(17);
  for (auto [a, b] : edges) g.add_edge(id(a), id(b));
  CycleCertificate h;
  for (int i = 0; i < 17; ++i) h.order.push_back(i);
  ASSERT_TRUE(is_cycle_in(g, h));
  const VertexSet a{id(7), id(16)};
  auto gb = grow_blocks(g, h, a);
  std::vector<std::vector<int>> want_blocks = {{0, 1, 2}, {3, 4}, {5}, {6}, {8, 9, 10}, {11, 12}, {13}, {14}, {15}};
  ASSERT_EQ(gb.blocks.size(), want_blocks.size());
  for (std::size_t i = 0; i < want_blocks.size(); ++i) {
    VertexSet want;
    for (int x : want_blocks[i]) want.insert(id(x));
    EXPECT_EQ(gb.blocks[i], want) << "block " << i + 1;
  }
  EXPECT_EQ(gb.family, (std::vector<int>{0, 1, 0, 0, 1, 0, 1, 0, 0}));
}

TEST(HamilGrow, ConnectedRemainderIsTrivial) {
  auto g = uniform(cycle_graph(6));
  CycleCertificate h{{0, 1, 2, 3, 4, 5}};
  auto o = hamil_grow(g, h, VertexSet{2, 3});
  EXPECT_EQ(o.tag, OutcomeTag::kConnectedSeparator);
  EXPECT_EQ(o.set, (VertexSet{2, 3}));
  EXPECT_EQ(o.achieved, Weight(0));
}

TEST(HamilGrow, RandomInstances) {
  int tags[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 800; ++seed) {
    auto [g, h] = random_hamiltonian(seed, 3 + static_cast<int>(seed % 12), seed % 2 == 0 ? 0.3 : 0.1);
    std::mt19937_64 rng(seed + 17);
    // Grow a random connected set.
    VertexSet a = VertexSet::single(static_cast<Vertex>(rng() % g.size()));
    const int target = 1 + static_cast<int>(rng() % (g.size() - 1));
    while (a.size() < target) {
      auto options = g.neighborhood(a).to_vector();
      a.insert(options[rng() % options.size()]);
    }
    auto o = hamil_grow(g, h, a);
    ++tags[static_cast<int>(o.tag)];
    auto defect = check_hamil_grow(g, h, a, o);
    EXPECT_FALSE(defect) << "seed " << seed << ": " << *defect;
  }
  EXPECT_GT(tags[static_cast<int>(OutcomeTag::kConnectedSeparator)], 0);
  EXPECT_GT(tags[static_cast<int>(OutcomeTag::kNeighborhoodSet)], 0);
}

TEST(DfsCycle, StarCenter) {
  WeightedGraph g(6);
  for (int i = 1; i < 6; ++i) {
    g.add_edge(0, i);
    g.set_weight(i, Weight(1));
  }
  // Root the search at a leaf so the centroid walk has to move.
  WeightedGraph relabeled(6);
  for (auto [u, v] : g.edges()) relabeled.add_edge((u + 1) % 6, (v + 1) % 6);
  for (Vertex v : g.vertices()) relabeled.set_weight((v + 1) % 6, g.weight(v));
  auto h = dfs_cycle(relabeled);
  EXPECT_EQ(h.order, (std::vector<Vertex>{1}));
  for (VertexSet comp : components(relabeled, relabeled.vertices() - VertexSet{1}))
    EXPECT_EQ(relabeled.weight(comp), relabeled.total_weight() / 5);
}

TEST(DfsCycle, Cycle) {
  for (int n = 3; n <= 12; ++n) {
    auto g = uniform(cycle_graph(n));
    auto h = dfs_cycle(g);
    EXPECT_FALSE(check_dfs_cycle(g, h));
  }
}

TEST(DfsCycle, SingleVertex) {
  WeightedGraph g({Weight(2)});
  EXPECT_EQ(dfs_cycle(g).order, (std::vector<Vertex>{0}));
}

TEST(DfsCycle, RandomGraphs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto g = random_graph(seed, 1 + static_cast<int>(seed % 14), seed % 2 == 0 ? 0.1 : 0.3);
    auto h = dfs_cycle(g);
    auto defect = check_dfs_cycle(g, h);
    EXPECT_FALSE(defect) << "seed " << seed << ": " << *defect;
  }
}

TEST(FullDecomposition, SingleVertex) {
  WeightedGraph g({Weight(3)});
  auto o = full_decomposition(g);
  EXPECT_EQ(o.tag, OutcomeTag::kCycleSet);
  EXPECT_EQ(o.set, g.vertices());
  EXPECT_EQ(o.achieved, Weight(3));
}

TEST(FullDecomposition, TreeWithHeavyLeaf) {
  WeightedGraph g(7);
  for (int i = 1; i < 7; ++i) g.add_edge((i - 1) / 2, i);
  g.set_weight(6, Weight(10));
  g.set_weight(3, Weight(1));
  auto o = full_decomposition(g);
  EXPECT_FALSE(check_full(g, o));
}

TEST(FullDecomposition, RandomGraphs) {
  int tags[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto g = random_graph(seed, 1 + static_cast<int>(seed % 14), seed % 2 == 0 ? 0.1 : 0.35);
    auto o = full_decomposition(g);
    ++tags[static_cast<int>(o.tag)];
    auto defect = check_full(g, o);
    EXPECT_FALSE(defect) << "seed " << seed << ": " << *defect;
  }
  for (int t = 0; t < 3; ++t) EXPECT_GT(tags[t], 0) << to_string(static_cast<OutcomeTag>(t));
}

TEST(IndSubdiv, SingleBranchVertex) {
  WeightedGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto r = indsubdiv(g, VertexSet{0}, 1, 0);
  EXPECT_EQ(r.kind, IndSubdivKind::kWitness);
  EXPECT_EQ(r.witness.branch, (std::vector<Vertex>{1}));
  EXPECT_FALSE(check_indsubdiv(g, VertexSet{0}, 1, 0, r));
}

TEST(IndSubdiv, IsolatedLeavesOfAStar) {
  WeightedGraph g(6);
  for (int i = 1; i < 6; ++i) g.add_edge(0, i);
  auto r = indsubdiv(g, VertexSet{0}, 3, 0);
  EXPECT_EQ(r.kind, IndSubdivKind::kWitness);
  EXPECT_EQ(r.witness.branch, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(r.witness.paths.empty());
}

TEST(IndSubdiv, HeavyLeaf) {
  WeightedGraph g({Weight(0), Weight(2), Weight(1)}, {{0, 1}, {0, 2}});
  auto r = indsubdiv(g, VertexSet{0}, 3, 0);
  EXPECT_EQ(r.kind, IndSubdivKind::kHeavyVertex);
  EXPECT_EQ(r.vertex, 1);
  EXPECT_EQ(r.constant, Weight(1, 2));
  EXPECT_FALSE(check_indsubdiv(g, VertexSet{0}, 3, 0, r));
}

TEST(IndSubdiv, RejectsBadArguments) {
  WeightedGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_THROW(indsubdiv(g, VertexSet{0}, 3, 4), std::invalid_argument);
  EXPECT_THROW(indsubdiv(g, VertexSet{0, 2}, 3, 1), std::invalid_argument);
  EXPECT_THROW(indsubdiv(g, g.vertices(), 3, 1), std::invalid_argument);
}

TEST(IndSubdiv, RandomInstances) {
  int kinds[3] = {0, 0, 0};
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    auto g = random_graph(seed, 3 + static_cast<int>(seed % 12), seed % 3 == 0 ? 0.5 : 0.2);
    std::mt19937_64 rng(seed + 5);
    VertexSet a = VertexSet::single(static_cast<Vertex>(rng() % g.size()));
    const int target = 1 + static_cast<int>(rng() % std::max(1, g.size() / 3));
    while (a.size() < target) {
      auto options = g.neighborhood(a).to_vector();
      a.insert(options[rng() % options.size()]);
    }
    const int n = 2 + static_cast<int>(seed % 4);
    const std::int64_t m = static_cast<std::int64_t>(rng() % (constants::choose2(n) + 1));
    auto r = indsubdiv(g, a, n, m);
    ++kinds[static_cast<int>(r.kind)];
    auto defect = check_indsubdiv(g, a, n, m, r);
    EXPECT_FALSE(defect) << "seed " << seed << ": " << *defect;
  }
  for (int k = 0; k < 3; ++k) EXPECT_GT(kinds[k], 0) << k;
}

TEST(SubdivDecomposition, TreesNeverGiveWitness) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = random_graph(seed, 2 + static_cast<int>(seed % 13), 0.0);
    auto o = subdiv_decomposition(g, 3);
    EXPECT_NE(o.tag, OutcomeTag::kSubdivisionWitness);
    auto defect = check_subdiv(g, 3, o);
    EXPECT_FALSE(defect) << "seed " << seed << ": " << *defect;
  }
}

TEST(SubdivDecomposition, CompleteGraphWitnessValidates) {
  WeightedGraph g(5);
  for (int u = 0; u < 5; ++u) {
    g.set_weight(u, Weight(1));
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  }
  auto o = subdiv_decomposition(g, 4);
  EXPECT_FALSE(check_subdiv(g, 4, o));
}

TEST(SubdivDecomposition, SingleVertex) {
  WeightedGraph g({Weight(4)});
  auto o = subdiv_decomposition(g, 3);
  EXPECT_EQ(o.tag, OutcomeTag::kCycleSet);
  EXPECT_EQ(o.set, g.vertices());
  EXPECT_EQ(o.achieved, Weight(4));
}

TEST(SubdivDecomposition, RandomGraphs) {
  int witnesses = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto g = random_graph(seed, 1 + static_cast<int>(seed % 14), seed % 2 == 0 ? 0.1 : 0.4);
    for (int n : {2, 3, 4}) {
      auto o = subdiv_decomposition(g, n);
      witnesses += o.tag == OutcomeTag::kSubdivisionWitness;
      auto defect = check_subdiv(g, n, o);
      EXPECT_FALSE(defect) << "seed " << seed << " n " << n << ": " << *defect;
    }
  }
  EXPECT_GT(witnesses, 0);
}

}  // namespace
}  // namespace graphshare
