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

#include <random>

#include "graphshare/generators.hpp"
#include "graphshare/shallow_minor.hpp"
#include "graphshare/solver.hpp"
#include "graphshare/strategies.hpp"
#include "graphshare/subdivision.hpp"
#include "oracles.hpp"

namespace graphshare {
namespace {

WeightedGraph p3(int a, int b, int c) { return WeightedGraph({Weight(a), Weight(b), Weight(c)}, {{0, 1}, {1, 2}}); }

WeightedGraph odd_graph(std::uint64_t seed, int size, double extra = 0.2) {
  RandomSpec spec;
  spec.size = size;
  spec.seed = seed;
  spec.parity = Parity::kOdd;
  spec.extra_edge_probability = extra;
  spec.max_denominator = 2;
  return random_connected(spec);
}

WeightedGraph sparse_graph(std::uint64_t seed, int size, double extra = 0.15) {
  RandomSpec spec;
  spec.size = size;
  spec.seed = seed;
  spec.parity = Parity::kOdd;
  spec.extra_edge_probability = extra;
  spec.zero_probability = 0.2;
  return random_sparsely_weighted(spec);
}

VertexSet random_connected_subset(const WeightedGraph& g, std::mt19937_64& rng) {
  VertexSet s = VertexSet::single(static_cast<Vertex>(rng() % g.size()));
  const int target = 1 + static_cast<int>(rng() % g.size());
  while (s.size() < target && !g.neighborhood(s).empty()) {
    auto options = g.neighborhood(s).to_vector();
    s.insert(options[rng() % options.size()]);
  }
  return s;
}

// Gain against the oracle Bob and, when cheap, against every Bob.
void expect_certified(const WeightedGraph& g, const CertifiedStrategy& cs, const std::string& context,
                      bool exhaustive = true) {
  const GameRecord r = play_against_oracle(g, cs);
  EXPECT_GE(r.alice_gain, cs.bound) << context << " oracle Bob";
  if (exhaustive && g.size() <= 9) {
    const WorstCase wc = worst_case_gain(g, *cs.strategy);
    EXPECT_GE(wc.alice_gain, cs.bound) << context << " worst Bob";
  }
}

TEST(StratComp, ConnectedRemainderGivesZero) {
  auto g = p3(1, 0, 1);
  auto cs = strat_comp(g);
  EXPECT_EQ(cs.bound, Weight(0));
  EXPECT_EQ(cs.lemma, "strat-comp");
  expect_certified(g, cs, "p3");
}

TEST(StratComp, RejectsBadPositions) {
  auto g = p3(1, 0, 1);
  EXPECT_THROW(strat_comp(g, VertexSet{1}), std::invalid_argument);
  EXPECT_THROW(strat_comp(g, VertexSet{0, 2}), std::invalid_argument);
  WeightedGraph even({Weight(1), Weight(1)}, {{0, 1}});
  EXPECT_THROW(strat_comp(even), std::invalid_argument);
}

TEST(StratComp, SingleRemainingVertex) {
  auto g = p3(1, 0, 1);
  auto cs = strat_comp(g, VertexSet{0, 1});
  EXPECT_EQ(cs.bound, Weight(0));
  GameSolver solver(g);
  EXPECT_EQ(solver.value_from(VertexSet{0, 1}), Weight(1));
}

// Two triangles sharing vertex 0, outer vertices weighted 1.
TEST(StratComp, BowtieAllEvenPositions) {
  WeightedGraph g({Weight(0), Weight(1), Weight(1), Weight(1), Weight(1)},
                  {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  GameSolver solver(g);
  for (std::uint64_t bits = 0; bits < 32; ++bits) {
    VertexSet t = VertexSet::of(oracle::members(VertexSet{}));
    for (Vertex v = 0; v < 5; ++v)
      if ((bits >> v) & 1) t.insert(v);
    if (t.size() % 2 != 0 || !is_connected(g, t) || t == g.vertices()) continue;
    EXPECT_GE(solver.value_from(t), w_star(g, g.vertices() - t) / 2) << to_string(t);
  }
}

TEST(StratComp, RandomEvenPositions) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = odd_graph(seed, 3 + 2 * static_cast<int>(seed % 3));
    GameSolver solver(g);
    for (std::uint64_t bits = 0; bits < (1ULL << g.size()); ++bits) {
      VertexSet t;
      for (Vertex v = 0; v < g.size(); ++v)
        if ((bits >> v) & 1) t.insert(v);
      if (t.size() % 2 != 0 || !is_connected(g, t)) continue;
      EXPECT_GE(solver.value_from(t), w_star(g, g.vertices() - t) / 2) << "seed " << seed;
    }
  }
}

TEST(StratCompR, WholeMinorGivesZero) {
  auto g = hedgehog(3, Spine::kPath);
  g = detail::fix_parity(g, Parity::kOdd);
  const ShallowQuotient sq = shallow_quotient(g);
  auto cs = strat_comp_R(g, sq.graph().vertices());
  EXPECT_EQ(cs.bound, Weight(0));
  expect_certified(g, cs, "hedgehog");
}

TEST(StratCompR, NoPositiveVertices) {
  WeightedGraph g(5);
  for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
  auto cs = strat_comp_R(g, VertexSet{2});
  EXPECT_EQ(cs.bound, Weight(0));
  expect_certified(g, cs, "zero path");
}

TEST(StratCompR, RejectsDenseWeights) {
  auto g = p3(1, 0, 1);
  EXPECT_THROW(strat_comp_R(g, VertexSet{0}), std::invalid_argument);
}

TEST(StratCompR, RandomSparselyWeighted) {
  int positive_bounds = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = sparse_graph(seed, 5 + static_cast<int>(seed % 7));
    const ShallowQuotient sq = shallow_quotient(g);
    std::mt19937_64 rng(seed);
    const VertexSet s_r = random_connected_subset(sq.graph(), rng);
    auto cs = strat_comp_R(g, s_r);
    EXPECT_EQ(cs.bound, oracle::w_star(sq.graph(), sq.graph().vertices() - s_r) / 2);
    positive_bounds += cs.bound > 0;
    expect_certified(g, cs, "seed " + std::to_string(seed));
  }
  EXPECT_GT(positive_bounds, 0);
}

TEST(StratCycleR, SingleBlockTakesItsWeight) {
  auto g = ring_of_stars({Weight(3)}, 1);  // center 0, leaf 1, pendant 2
  const ShallowQuotient sq = shallow_quotient(g);
  auto cs = strat_cycle_R(g, VertexSet::single(sq.block_of(1)));
  EXPECT_EQ(cs.bound, Weight(3));
  GameState s(g);
  EXPECT_EQ(cs.strategy->choose_move(s), 1);
  expect_certified(g, cs, "single");
}

TEST(StratCycleR, SmallRingOpensWithHeaviest) {
  auto g = ring_of_stars({Weight(1), Weight(4), Weight(2), Weight(1)}, 1);
  const ShallowQuotient sq = shallow_quotient(g);
  VertexSet s_r;
  for (Vertex leaf = 4; leaf < 8; ++leaf) s_r.insert(sq.block_of(leaf));
  auto cs = strat_cycle_R(g, s_r);
  EXPECT_EQ(cs.reference, Weight(8));
  EXPECT_EQ(cs.bound, Weight(4));
  GameState s(g);
  EXPECT_EQ(cs.strategy->choose_move(s), 5);
  expect_certified(g, cs, "ring of 4");
}

TEST(StratCycleR, RejectsNonCycle) {
  // Three stars hanging off one hub: the reduction is a triangle only if the
  // hub is a block, so S_R of the three leaves plus a path block is rejected.
  WeightedGraph g(7);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 4 + i);
    g.set_weight(4 + i, Weight(1));
  }
  const ShallowQuotient sq = shallow_quotient(g);
  VertexSet s_r;
  for (Vertex v : g.vertices()) s_r.insert(sq.block_of(v));
  EXPECT_THROW(strat_cycle_R(g, s_r), std::invalid_argument);
}

WeightedGraph random_ring(std::mt19937_64& rng, int stars, int pendants) {
  std::vector<Weight> leaves;
  for (int i = 0; i < stars; ++i) leaves.push_back(Weight(1 + static_cast<int>(rng() % 9)));
  return ring_of_stars(leaves, pendants);
}

VertexSet leaf_blocks(const WeightedGraph& g, const ShallowQuotient& sq) {
  VertexSet out;
  for (Vertex v : g.positive_vertices()) out.insert(sq.block_of(v));
  return out;
}

TEST(StratCycleR, RingsUpToThirteenVertices) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const int stars = 1 + static_cast<int>(seed % 6);
    auto g = random_ring(rng, stars, 1 + 2 * static_cast<int>(rng() % ((13 - 2 * stars + 1) / 2)));
    ASSERT_EQ(g.size() % 2, 1);
    ASSERT_LE(g.size(), 13);
    const ShallowQuotient sq = shallow_quotient(g);
    auto cs = strat_cycle_R(g, leaf_blocks(g, sq));
    EXPECT_GE(cs.bound * 6, cs.reference);
    expect_certified(g, cs, "seed " + std::to_string(seed), false);
  }
}

// Seven to ten stars exercise the two claims of the long-cycle plan.
TEST(StratCycleR, LongRings) {
  int claims[3] = {0, 0, 0};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    const int stars = 7 + static_cast<int>(seed % 4);
    auto g = random_ring(rng, stars, 1 + 2 * static_cast<int>(rng() % 2));
    const ShallowQuotient sq = shallow_quotient(g);
    auto cs = strat_cycle_R(g, leaf_blocks(g, sq));
    auto strategy = std::dynamic_pointer_cast<const CycleRStrategy>(cs.strategy);
    ASSERT_TRUE(strategy);
    const CyclePlan& plan = strategy->plan();
    ++claims[plan.claim];
    EXPECT_FALSE(plan.small);
    EXPECT_GE(cs.bound * 6, cs.reference) << "seed " << seed;
    const GameRecord r = play_against_oracle(g, cs);
    EXPECT_GE(r.alice_gain, cs.bound) << "seed " << seed;
    if (stars == 7 && g.size() == 15) {
      auto on_game = [&](const GameState& st) {
        bool clean = true;
        if (plan.claim == 1)
          for (const MoveRecord& m : st.history())
            clean = clean && !(m.player == Player::kBob && plan.protected_set.contains(m.vertex));
        EXPECT_TRUE(clean) << "seed " << seed;
        return clean;
      };
      const WorstCase wc = worst_case_gain(g, *cs.strategy, kDefaultSearchBudget, on_game);
      EXPECT_GE(wc.alice_gain, cs.bound) << "seed " << seed;
    }
    for (std::uint64_t bob_seed = 0; bob_seed < 5; ++bob_seed) {
      const GameRecord rr = play(g, *cs.strategy, HashedRandomStrategy(bob_seed));
      EXPECT_GE(rr.alice_gain, cs.bound) << "seed " << seed << " bob " << bob_seed;
      if (plan.claim == 1) {
        for (const MoveRecord& m : rr.moves)
          EXPECT_FALSE(m.player == Player::kBob && plan.protected_set.contains(m.vertex)) << "seed " << seed;
      }
    }
  }
  EXPECT_GT(claims[1], 0);
}

// A pendant on every center makes every |A_i| odd, so S_0 is empty and the
// plan has to use the second claim.
TEST(StratCycleR, PendantRingsUseSecondClaim) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    std::mt19937_64 rng(seed);
    auto g = random_ring(rng, 7, 7);
    const ShallowQuotient sq = shallow_quotient(g);
    auto cs = strat_cycle_R(g, leaf_blocks(g, sq));
    auto strategy = std::dynamic_pointer_cast<const CycleRStrategy>(cs.strategy);
    ASSERT_TRUE(strategy);
    EXPECT_EQ(strategy->plan().claim, 2);
    EXPECT_GE(cs.bound * 6, cs.reference);
    EXPECT_GE(play_against_oracle(g, cs).alice_gain, cs.bound) << "seed " << seed;
    for (std::uint64_t bob_seed = 0; bob_seed < 20; ++bob_seed)
      EXPECT_GE(play(g, *cs.strategy, HashedRandomStrategy(bob_seed)).alice_gain, cs.bound) << "seed " << seed;
  }
}

TEST(StratSparse, AllZero) {
  WeightedGraph g(5);
  for (int i = 0; i + 1 < 5; ++i) g.add_edge(i, i + 1);
  auto cs = strat_sparse(g, 3);
  EXPECT_EQ(cs.bound, Weight(0));
  expect_certified(g, cs, "zero");
}

TEST(StratSparse, RejectsDenseWeights) { EXPECT_THROW(strat_sparse(p3(1, 0, 1), 3), std::invalid_argument); }

TEST(StratSparse, Hedgehogs) {
  for (int n = 2; n <= 5; ++n)
    for (Spine spine : {Spine::kPath, Spine::kStar}) {
      auto g = detail::fix_parity(hedgehog(n, spine), Parity::kOdd);
      auto cs = strat_sparse(g, 3);
      EXPECT_GT(cs.bound, 0);
      EXPECT_GT(cs.n_used, 0);
      expect_certified(g, cs, "hedgehog " + std::to_string(n));
    }
}

TEST(StratSparse, RandomSparselyWeighted) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = sparse_graph(seed, 3 + static_cast<int>(seed % 9), seed % 2 == 0 ? 0.0 : 0.25);
    auto cs = strat_sparse(g, 3);
    if (cs.n_used > 0) {
      EXPECT_GE(cs.bound, cs.worst_case_constant * g.total_weight()) << "seed " << seed;
    }
    expect_certified(g, cs, "seed " + std::to_string(seed));
  }
}

TEST(StratLegal, StarUniformLeaves) {
  WeightedGraph g(6);
  for (int i = 1; i < 6; ++i) {
    g.add_edge(0, i);
    g.set_weight(i, Weight(1));
  }
  auto ctx = make_context(g, VertexSet{1, 2, 3, 4, 5}, {0});
  auto cs = strat_legal(g, ctx);
  EXPECT_EQ(cs.bound, Weight(2));
  expect_certified(g, cs, "star");
}

TEST(StratLegal, EmptyIndependentSet) {
  auto g = p3(1, 2, 1);
  auto cs = strat_legal(g, make_context(g, VertexSet{}, {0, 1, 2}));
  EXPECT_EQ(cs.bound, Weight(0));
  expect_certified(g, cs, "p3");
}

TEST(StratLegal, TwoVertices) {
  WeightedGraph g({Weight(0), Weight(5)}, {{0, 1}});
  auto cs = strat_legal(g, make_context(g, VertexSet{1}, {0}));
  EXPECT_EQ(cs.bound, Weight(0));
  const GameRecord r = play(g, *cs.strategy, FirstLegalStrategy());
  EXPECT_EQ(r.alice_gain, Weight(0));
}

TEST(StratLegal, RejectsIllegalOrdering) {
  WeightedGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  LegalOrderingContext ctx;
  ctx.sigma = {0, 2, 1, 3};
  EXPECT_THROW(strat_legal(g, ctx), std::invalid_argument);
}

TEST(StratLegal, ChargingHoldsForEveryBob) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto g = odd_graph(seed, 3 + 2 * static_cast<int>(seed % 4), 0.25);
    const VertexSet in = heaviest_class(g, distinguishing_coloring(g, arrangeable_ordering(g)));
    auto ctx = improve_ordering(g, build_legal_ordering(g, in));
    auto cs = strat_legal(g, ctx);
    auto on_game = [&](const GameState& s) {
      auto defect = check_charging(g, ctx, s.history());
      EXPECT_FALSE(defect) << "seed " << seed << ": " << *defect;
      return !defect;
    };
    const WorstCase wc = worst_case_gain(g, *cs.strategy, kDefaultSearchBudget, on_game);
    EXPECT_GE(wc.alice_gain, cs.bound) << "seed " << seed;
  }
}

TEST(MasterStrategy, SingleVertex) {
  WeightedGraph g({Weight(7)});
  auto cs = master_strategy(g, 3);
  EXPECT_EQ(cs.bound, Weight(7));
  expect_certified(g, cs, "single");
}

TEST(MasterStrategy, RejectsEven) {
  WeightedGraph g({Weight(1), Weight(1)}, {{0, 1}});
  EXPECT_THROW(master_strategy(g, 3), std::invalid_argument);
}

TEST(MasterStrategy, OddTrees) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = odd_graph(seed, 1 + 2 * static_cast<int>(seed % 6), 0.0);
    auto cs = master_strategy(g, 3);
    if (g.total_weight() > 0) {
      EXPECT_GT(cs.bound, 0) << "seed " << seed;
    }
    EXPECT_GE(cs.bound, cs.worst_case_constant * g.total_weight());
    expect_certified(g, cs, "seed " + std::to_string(seed));
  }
}

TEST(MasterStrategy, OddConstructionBoundBelowValue) {
  auto g = odd_construction(3);
  auto cs = master_strategy(g, 3);
  EXPECT_LE(cs.bound, Weight(1));
  const GameRecord r = play_against_oracle(g, cs);
  EXPECT_GE(r.alice_gain, cs.bound);
}

TEST(MasterStrategy, RandomGraphsWithoutK4) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 100; ++seed) {
    auto g = odd_graph(seed, 3 + 2 * static_cast<int>(seed % 5), 0.15);
    if (find_subdivision(g, 4)) continue;
    ++checked;
    auto cs = master_strategy(g, 4);
    ASSERT_TRUE(cs.dichotomy);
    EXPECT_FALSE(cs.witness);
    EXPECT_GE(cs.bound, cs.worst_case_constant * g.total_weight()) << "seed " << seed;
    expect_certified(g, cs, "seed " + std::to_string(seed), false);
  }
}

}  // namespace
}  // namespace graphshare
