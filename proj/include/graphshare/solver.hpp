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

// Exact minimax for game T. A position is determined by its taken set (the
// mover follows from parity), so the memo is keyed on the set alone. Weights
// are rescaled to integers by the common denominator before searching.

#ifndef GRAPHSHARE_SOLVER_HPP_
#define GRAPHSHARE_SOLVER_HPP_

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphshare/budget.hpp"
#include "graphshare/game.hpp"
#include "graphshare/graph.hpp"

namespace graphshare {

class GameSolver {
 public:
  explicit GameSolver(WeightedGraph g, std::size_t memo_budget = kDefaultMemoBudget)
      : graph_(std::move(g)), budget_(memo_budget) {
    if (graph_.size() == 0) throw std::invalid_argument("solver on the empty graph");
    if (!is_connected(graph_)) throw std::invalid_argument("game T needs a connected graph");
    std::int64_t den = 1;
    for (const Weight& w : graph_.weights()) den = std::lcm(den, w.denominator());
    scale_ = den;
    for (const Weight& w : graph_.weights()) scaled_.push_back(w.numerator() * (den / w.denominator()));
  }

  const WeightedGraph& graph() const { return graph_; }
  std::size_t memo_size() const { return memo_.size(); }
  std::size_t memo_budget() const { return budget_; }

  // Alice's optimal total from the fresh position.
  Weight game_value() { return value_from(VertexSet{}); }

  // Alice's optimal gain from the position with `taken` onward (gains already
  // collected are not included). `taken` must be empty or connected.
  Weight value_from(VertexSet taken) {
    check_position(taken);
    return Weight(search(taken), scale_);
  }
  Weight value_from(const GameState& s) { return value_from(s.taken()); }

  // Optimal move for whoever is to move; lowest id among the optimal moves.
  Vertex best_move(VertexSet taken) {
    check_position(taken);
    const VertexSet legal = legal_from(taken);
    if (legal.empty()) throw std::invalid_argument("no move in a finished game");
    const bool alice = taken.size() % 2 == 0;
    Vertex best = -1;
    std::int64_t best_value = 0;
    for (Vertex v : legal) {
      std::int64_t value = search(taken | VertexSet::single(v)) + (alice ? scaled_[v] : 0);
      if (best < 0 || (alice ? value > best_value : value < best_value)) {
        best = v;
        best_value = value;
      }
    }
    return best;
  }

 private:
  VertexSet legal_from(VertexSet taken) const {
    if (taken == graph_.vertices()) return {};
    return taken.empty() ? graph_.vertices() : graph_.neighborhood(taken);
  }

  void check_position(VertexSet taken) const {
    if (!taken.is_subset_of(graph_.vertices())) throw std::invalid_argument("taken set has foreign vertices");
    if (!is_connected(graph_, taken)) throw std::invalid_argument("taken set is not connected");
  }

  std::int64_t search(VertexSet taken) {
    if (taken == graph_.vertices()) return 0;
    auto it = memo_.find(taken.bits());
    if (it != memo_.end()) return it->second;
    const bool alice = taken.size() % 2 == 0;
    std::int64_t best = 0;
    bool first = true;
    for (Vertex v : legal_from(taken)) {
      std::int64_t value = search(taken | VertexSet::single(v)) + (alice ? scaled_[v] : 0);
      if (first || (alice ? value > best : value < best)) best = value;
      first = false;
    }
    if (memo_.size() >= budget_)
      throw BudgetExceeded("minimax memo exceeded " + std::to_string(budget_) + " entries");
    memo_.emplace(taken.bits(), best);
    return best;
  }

  WeightedGraph graph_;
  std::size_t budget_;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> scaled_;
  std::unordered_map<std::uint64_t, std::int64_t> memo_;
};

// Plays an argmax child of the memoized value for whichever side it is
// assigned to.
class OptimalStrategy : public Strategy {
 public:
  explicit OptimalStrategy(std::shared_ptr<GameSolver> solver) : solver_(std::move(solver)) {}
  explicit OptimalStrategy(const WeightedGraph& g, std::size_t memo_budget = kDefaultMemoBudget)
      : solver_(std::make_shared<GameSolver>(g, memo_budget)) {}

  Vertex choose_move(const GameState& s) const override { return solver_->best_move(s.taken()); }
  std::string name() const override { return "optimal"; }
  Weight certified_bound() const { return solver_->game_value(); }
  GameSolver& solver() const { return *solver_; }

 private:
  std::shared_ptr<GameSolver> solver_;
};

}  // namespace graphshare

#endif  // GRAPHSHARE_SOLVER_HPP_
