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

// Game T: players alternately take vertices, Alice first, and the taken set
// must stay connected.

#ifndef GRAPHSHARE_GAME_HPP_
#define GRAPHSHARE_GAME_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphshare/budget.hpp"
#include "graphshare/graph.hpp"

namespace graphshare {

enum class Player { kAlice, kBob };

inline const char* to_string(Player p) { return p == Player::kAlice ? "alice" : "bob"; }

struct MoveRecord {
  Player player;
  Vertex vertex;
  Weight weight;
};

class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GameState {
 public:
  explicit GameState(const WeightedGraph& g) : graph_(&g) {}

  const WeightedGraph& graph() const { return *graph_; }
  VertexSet taken() const { return taken_; }
  VertexSet remaining() const { return graph_->vertices() - taken_; }
  const Weight& alice_gain() const { return alice_gain_; }
  const Weight& bob_gain() const { return bob_gain_; }
  const Weight& gain(Player p) const { return p == Player::kAlice ? alice_gain_ : bob_gain_; }
  Player to_move() const { return taken_.size() % 2 == 0 ? Player::kAlice : Player::kBob; }
  bool finished() const { return taken_ == graph_->vertices(); }
  const std::vector<MoveRecord>& history() const { return history_; }
  int move_count() const { return static_cast<int>(history_.size()); }

  VertexSet legal_moves() const {
    if (finished()) return {};
    return taken_.empty() ? graph_->vertices() : graph_->neighborhood(taken_);
  }
  bool is_legal(Vertex v) const {
    return v >= 0 && v < graph_->size() && legal_moves().contains(v);
  }

  void push(Vertex v) {
    if (!is_legal(v))
      throw IllegalMove("vertex " + std::to_string(v) + " is not a legal move; taken={" + to_string(taken_) +
                        "} legal={" + to_string(legal_moves()) + "}");
    const Player p = to_move();
    const Weight& w = graph_->weight(v);
    (p == Player::kAlice ? alice_gain_ : bob_gain_) += w;
    taken_.insert(v);
    history_.push_back({p, v, w});
  }

  void pop() {
    if (history_.empty()) throw std::logic_error("pop on a fresh game");
    const MoveRecord& m = history_.back();
    (m.player == Player::kAlice ? alice_gain_ : bob_gain_) -= m.weight;
    taken_.erase(m.vertex);
    history_.pop_back();
  }

  GameState apply(Vertex v) const {
    GameState next = *this;
    next.push(v);
    return next;
  }

  // The last move made by `p`, or -1.
  Vertex last_move_of(Player p) const {
    for (auto it = history_.rbegin(); it != history_.rend(); ++it)
      if (it->player == p) return it->vertex;
    return -1;
  }

 private:
  const WeightedGraph* graph_;
  VertexSet taken_;
  Weight alice_gain_{0};
  Weight bob_gain_{0};
  std::vector<MoveRecord> history_;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  // Returns a legal vertex for the player to move in `s`.
  virtual Vertex choose_move(const GameState& s) const = 0;
  virtual std::string name() const = 0;
};

// Max-weight available vertex, lowest id on ties.
class GreedyStrategy : public Strategy {
 public:
  Vertex choose_move(const GameState& s) const override {
    Vertex best = -1;
    for (Vertex v : s.legal_moves())
      if (best < 0 || s.graph().weight(v) > s.graph().weight(best)) best = v;
    return best;
  }
  std::string name() const override { return "greedy"; }
};

// Lowest-id legal vertex.
class FirstLegalStrategy : public Strategy {
 public:
  Vertex choose_move(const GameState& s) const override { return s.legal_moves().front(); }
  std::string name() const override { return "first"; }
};

// Pseudo-random legal vertex, a pure function of (seed, taken set).
class HashedRandomStrategy : public Strategy {
 public:
  explicit HashedRandomStrategy(std::uint64_t seed) : seed_(seed) {}
  Vertex choose_move(const GameState& s) const override {
    const auto legal = s.legal_moves().to_vector();
    std::uint64_t x = seed_ ^ (s.taken().bits() * 0x9E3779B97F4A7C15ULL);
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDULL;
    x ^= x >> 33;
    return legal[x % legal.size()];
  }
  std::string name() const override { return "random"; }

 private:
  std::uint64_t seed_;
};

struct GameRecord {
  Weight alice_gain{0};
  Weight bob_gain{0};
  std::vector<MoveRecord> moves;
};

inline void write_move_log(std::ostream& out, const std::vector<MoveRecord>& moves) {
  for (std::size_t k = 0; k < moves.size(); ++k)
    out << "move index=" << (k + 1) << " player=" << to_string(moves[k].player) << " vertex=" << moves[k].vertex
        << " weight=" << to_string(moves[k].weight) << '\n';
}

// Plays a complete game. A strategy returning an illegal vertex aborts with
// IllegalMove whose message carries the offending state and the move log.
inline GameRecord play(const WeightedGraph& g, const Strategy& alice, const Strategy& bob) {
  if (g.size() == 0) throw std::invalid_argument("game on the empty graph");
  if (!is_connected(g)) throw std::invalid_argument("game T needs a connected graph");
  GameState s(g);
  while (!s.finished()) {
    const Strategy& mover = s.to_move() == Player::kAlice ? alice : bob;
    Vertex v = mover.choose_move(s);
    if (!s.is_legal(v)) {
      std::ostringstream log;
      log << mover.name() << " (" << to_string(s.to_move()) << ") chose illegal vertex " << v << " at taken={"
          << to_string(s.taken()) << "}\n";
      write_move_log(log, s.history());
      throw IllegalMove(log.str());
    }
    s.push(v);
  }
  return {s.alice_gain(), s.bob_gain(), s.history()};
}

struct WorstCase {
  Weight alice_gain{0};
  std::vector<MoveRecord> line;  // a Bob line realizing the minimum
  std::uint64_t games = 0;       // complete games enumerated
};

// Minimum final gain of the fixed Alice strategy over every possible Bob.
// `on_game` (optional) sees every finished game; returning false aborts.
inline WorstCase worst_case_gain(const WeightedGraph& g, const Strategy& alice,
                                 std::uint64_t node_budget = kDefaultSearchBudget,
                                 const std::function<bool(const GameState&)>& on_game = {}) {
  if (!is_connected(g)) throw std::invalid_argument("game T needs a connected graph");
  GameState s(g);
  WorstCase out;
  bool have = false;
  std::uint64_t nodes = 0;
  std::function<void()> walk = [&]() {
    if (++nodes > node_budget)
      throw BudgetExceeded("Bob enumeration exceeded " + std::to_string(node_budget) + " nodes");
    if (s.finished()) {
      ++out.games;
      if (!have || s.alice_gain() < out.alice_gain) {
        out.alice_gain = s.alice_gain();
        out.line = s.history();
        have = true;
      }
      if (on_game && !on_game(s)) throw std::runtime_error("game rejected by checker");
      return;
    }
    if (s.to_move() == Player::kAlice) {
      Vertex v = alice.choose_move(s);
      if (!s.is_legal(v))
        throw IllegalMove(alice.name() + " chose illegal vertex " + std::to_string(v) + " at taken={" +
                          to_string(s.taken()) + "}");
      s.push(v);
      walk();
      s.pop();
      return;
    }
    for (Vertex v : s.legal_moves()) {
      s.push(v);
      walk();
      s.pop();
    }
  };
  walk();
  return out;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_GAME_HPP_
