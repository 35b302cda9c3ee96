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

// Alice's strategies with certified lower bounds. Each strategy plans on its
// own copy of the graph (possibly with some weights reset to zero) and is a
// pure function of the game state, so it can be replayed down every branch
// of an exhaustive Bob search.

#ifndef GRAPHSHARE_STRATEGIES_HPP_
#define GRAPHSHARE_STRATEGIES_HPP_

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/budget.hpp"
#include "graphshare/constants.hpp"
#include "graphshare/decompose.hpp"
#include "graphshare/game.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/legal_ordering.hpp"
#include "graphshare/shallow_minor.hpp"
#include "graphshare/solver.hpp"
#include "graphshare/sparse_or_legal.hpp"

namespace graphshare {

struct CertifiedStrategy {
  std::shared_ptr<const Strategy> strategy;
  std::string lemma;
  Weight bound{0};
  Weight reference{0};       // the quantity the lemma's inequality is stated for
  Weight worst_case_constant{0};  // the lemma's worst-case constant, for comparison
  VertexSet set;             // S, S_R (block ids) or I, depending on the lemma
  int n_used = 0;            // N for which G^R decomposed without a witness; 0 if none
  std::optional<SubdivisionWitness> witness;  // escalation ran out
  std::optional<Dichotomy> dichotomy;         // master strategy only
};

inline std::string format_certified(const CertifiedStrategy& cs, const Weight& realized) {
  std::ostringstream out;
  out << "certified lemma=" << cs.lemma << " bound=" << to_string(cs.bound) << " realized=" << to_string(realized)
      << " paperConstant=" << to_string(cs.worst_case_constant);
  return out.str();
}

namespace detail {

inline Vertex heaviest(const WeightedGraph& g, VertexSet s) {
  Vertex best = -1;
  for (Vertex v : s)
    if (best < 0 || outranks(g, v, best)) best = v;
  return best;
}

inline void require_odd_connected(const WeightedGraph& g, const char* who) {
  if (g.size() == 0 || !is_connected(g)) throw std::invalid_argument(std::string(who) + " needs a connected graph");
  if (g.size() % 2 == 0) throw std::invalid_argument(std::string(who) + " needs an odd number of vertices");
}

inline void require_sparsely_weighted(const WeightedGraph& g, const char* who) {
  if (!is_sparse(g, g.positive_vertices()))
    throw std::invalid_argument(std::string(who) + " needs the positive-weight vertices pairwise at distance >= 3");
}

inline void require_same_shape(const WeightedGraph& plan, const GameState& s) {
  if (s.graph().size() != plan.size()) throw std::invalid_argument("strategy planned for a different graph");
}

}  // namespace detail

// Greedy on the planning weights, lowest id on ties.
class PlannedGreedy : public Strategy {
 public:
  explicit PlannedGreedy(WeightedGraph plan) : plan_(std::move(plan)) {}
  Vertex choose_move(const GameState& s) const override {
    detail::require_same_shape(plan_, s);
    return detail::heaviest(plan_, s.legal_moves());
  }
  std::string name() const override { return "greedy"; }

 private:
  WeightedGraph plan_;
};

// Requires |V| odd, |taken| even and taken connected or empty. Realized by
// the oracle continuation; the bound is half of w* of the remainder.
inline CertifiedStrategy strat_comp(const WeightedGraph& g, VertexSet taken = {},
                                    std::size_t memo_budget = kDefaultMemoBudget) {
  detail::require_odd_connected(g, "strat_comp");
  if (taken.size() % 2 != 0) throw std::invalid_argument("strat_comp needs Alice to move");
  if (!taken.is_subset_of(g.vertices()) || !is_connected(g, taken))
    throw std::invalid_argument("strat_comp needs a connected taken set");
  CertifiedStrategy cs;
  cs.strategy = std::make_shared<OptimalStrategy>(g, memo_budget);
  cs.lemma = "strat-comp";
  cs.reference = w_star(g, g.vertices() - taken);
  cs.bound = cs.reference / 2;
  cs.worst_case_constant = Weight(1, 2);
  cs.set = taken;
  return cs;
}

// Consumes S = union of S_R, answering every Bob entry into N(v) for
// positive v outside S with v itself, then hands off to the oracle.
class CompRStrategy : public Strategy {
 public:
  CompRStrategy(WeightedGraph plan, VertexSet s, std::size_t memo_budget)
      : plan_(std::move(plan)),
        s_(s),
        guarded_(plan_.positive_vertices() - s),
        oracle_(std::make_shared<GameSolver>(plan_, memo_budget)) {}

  Vertex choose_move(const GameState& st) const override {
    detail::require_same_shape(plan_, st);
    const VertexSet taken = st.taken();
    if (s_.is_subset_of(taken)) return oracle_->best_move(taken);
    if (taken.empty()) return s_.front();
    const Vertex last = st.last_move_of(Player::kBob);
    if (last >= 0)
      for (Vertex v : guarded_ - taken)
        if (plan_.adjacent(last, v)) return v;
    return (st.legal_moves() & s_).front();
  }
  std::string name() const override { return "strat-comp-R"; }

  VertexSet consumed() const { return s_; }
  VertexSet guarded() const { return guarded_; }

 private:
  WeightedGraph plan_;
  VertexSet s_;
  VertexSet guarded_;
  std::shared_ptr<GameSolver> oracle_;
};

// Requires |V| odd, V+ sparse and S_R a non-empty block set connected in
// G^R. Bound: half of w*(G^R - S_R).
inline CertifiedStrategy strat_comp_R(const WeightedGraph& g, VertexSet s_r,
                                      std::size_t memo_budget = kDefaultMemoBudget) {
  detail::require_odd_connected(g, "strat_comp_R");
  detail::require_sparsely_weighted(g, "strat_comp_R");
  const ShallowQuotient sq = shallow_quotient(g);
  const WeightedGraph& gr = sq.graph();
  if (s_r.empty() || !s_r.is_subset_of(gr.vertices()) || !is_connected(gr, s_r))
    throw std::invalid_argument("strat_comp_R needs a non-empty block set connected in G^R");
  CertifiedStrategy cs;
  cs.strategy = std::make_shared<CompRStrategy>(g, sq.blocks_to_vertices(s_r), memo_budget);
  cs.lemma = "strat-comp-R";
  cs.reference = w_star(gr, gr.vertices() - s_r);
  cs.bound = cs.reference / 2;
  cs.worst_case_constant = Weight(1, 2);
  cs.set = s_r;
  return cs;
}

// The plan behind strat_cycle_R. With n = |S| <= 6 Alice just opens with
// the heaviest vertex of S. Otherwise she opens with `start` and keeps to
// the two rules: take from S when possible (protected vertices first), and
// avoid N(v) for untaken protected v in S while anything else is available.
struct CyclePlan {
  std::vector<Vertex> order;  // v_0 .. v_{n-1}, the positive centers in cycle order
  bool small = true;
  int claim = 0;              // 1 or 2 when n > 6
  Vertex start = -1;
  VertexSet c;                // the heavier of C_0, C_1
  VertexSet s0, s1;           // |A_i| even / odd
  VertexSet protected_set;    // S_0 & C or S_1 & C
  Weight claim1_bound{0};     // w(S_0 & C)
  Weight claim2_bound{0};     // the weaker of the two sides around v_j
  Weight bound{0};
};

namespace detail {

inline CyclePlan plan_cycle(const WeightedGraph& g, const std::vector<Vertex>& order) {
  CyclePlan plan;
  plan.order = order;
  const int n = static_cast<int>(order.size());
  const VertexSet s = VertexSet::of(order);
  if (n <= 6) {
    plan.start = heaviest(g, s);
    plan.bound = g.weight(plan.start);
    return plan;
  }
  plan.small = false;

  // |A_i| and |A_{i,i+1}| from the components of G - N[S].
  std::vector<int> a(n), a_next(n, 0);
  std::vector<VertexSet> hood(n);
  for (int i = 0; i < n; ++i) {
    hood[i] = g.neighbors(order[i]);
    a[i] = hood[i].size() + 1;
  }
  for (VertexSet comp : components(g, g.vertices() - g.closed_neighborhood(s))) {
    std::vector<int> touching;
    const VertexSet around = g.neighborhood(comp);
    for (int i = 0; i < n; ++i)
      if (around.intersects(hood[i])) touching.push_back(i);
    if (touching.size() == 1) {
      a[touching[0]] += comp.size();
    } else if (touching.size() == 2 && touching[1] == touching[0] + 1) {
      a_next[touching[0]] += comp.size();
    } else if (touching.size() == 2 && touching[0] == 0 && touching[1] == n - 1) {
      a_next[n - 1] += comp.size();
    } else {
      throw std::invalid_argument("a component of G - N[S] does not sit between consecutive blocks");
    }
  }

  VertexSet c0, c1;
  int prefix = 0;
  for (int i = 0; i < n; ++i) {
    (prefix % 2 == 0 ? c0 : c1).insert(order[i]);
    (a[i] % 2 == 0 ? plan.s0 : plan.s1).insert(order[i]);
    prefix += a[i] + a_next[i];
  }
  plan.c = g.weight(c0) >= g.weight(c1) ? c0 : c1;

  plan.claim1_bound = g.weight(plan.s0 & plan.c);
  const VertexSet x = plan.s1 & plan.c;
  const Weight wx = g.weight(x);
  int j = 0;
  Weight head(0);
  for (; j < n; ++j) {
    if (x.contains(order[j])) head += g.weight(order[j]);
    if (head * 2 >= wx) break;
  }
  if (j == n) j = n - 1;
  Weight tail(0);
  for (int i = j; i < n; ++i)
    if (x.contains(order[i])) tail += g.weight(order[i]);
  plan.claim2_bound = std::min(head, tail);

  if (plan.claim1_bound >= plan.claim2_bound) {
    plan.claim = 1;
    plan.start = order[0];
    plan.protected_set = plan.s0 & plan.c;
    plan.bound = plan.claim1_bound;
  } else {
    plan.claim = 2;
    plan.start = order[j];
    plan.protected_set = x;
    plan.bound = plan.claim2_bound;
  }
  return plan;
}

}  // namespace detail

class CycleRStrategy : public Strategy {
 public:
  CycleRStrategy(WeightedGraph plan_graph, CyclePlan plan) : plan_graph_(std::move(plan_graph)), plan_(std::move(plan)) {
    s_ = VertexSet::of(plan_.order);
  }

  Vertex choose_move(const GameState& st) const override {
    detail::require_same_shape(plan_graph_, st);
    const VertexSet taken = st.taken();
    if (taken.empty() && plan_.start >= 0) return plan_.start;
    const VertexSet avail = st.legal_moves();
    const VertexSet open_s = s_ - taken;
    if (plan_.small || open_s.empty()) return detail::heaviest(plan_graph_, avail);
    // Bob can expose a protected vertex while Alice's last forced move
    // exposed an unprotected one; the protected one goes first.
    if (avail.intersects(plan_.protected_set)) return detail::heaviest(plan_graph_, avail & plan_.protected_set);
    if (avail.intersects(s_)) return detail::heaviest(plan_graph_, avail & s_);
    const VertexSet safe = avail - plan_graph_.neighborhood(open_s);
    if (!safe.empty()) return detail::heaviest(plan_graph_, safe);
    const VertexSet unprotected = avail & plan_graph_.neighborhood(open_s - plan_.protected_set);
    if (!unprotected.empty()) return detail::heaviest(plan_graph_, unprotected);
    return avail.front();
  }
  std::string name() const override { return "strat-cycle-R"; }

  const CyclePlan& plan() const { return plan_; }

 private:
  WeightedGraph plan_graph_;
  CyclePlan plan_;
  VertexSet s_;
};

// Requires |V| odd, V+ sparse and the reduction of G^R to S_R a cycle.
// Zero blocks are dropped first; the bound is the realized plan bound,
// which is at least w(S_R)/6.
inline CertifiedStrategy strat_cycle_R(const WeightedGraph& g, VertexSet s_r) {
  detail::require_odd_connected(g, "strat_cycle_R");
  detail::require_sparsely_weighted(g, "strat_cycle_R");
  const ShallowQuotient sq = shallow_quotient(g);
  const WeightedGraph& gr = sq.graph();
  if (!s_r.is_subset_of(gr.vertices())) throw std::invalid_argument("S_R names unknown blocks");
  if (s_r.empty() || !cycle_reduction_check(gr, s_r)) throw std::invalid_argument("reduction of G^R to S_R is not a cycle");
  const VertexSet positive = s_r & gr.positive_vertices();

  std::vector<Vertex> order;
  if (!positive.empty()) {
    auto cycle = cycle_reduction_check(gr, positive);
    if (!cycle) throw std::logic_error("dropping zero blocks broke the cycle");
    for (int b : cycle->order) order.push_back(sq.center[b]);
  }
  CyclePlan plan = detail::plan_cycle(g, order);
  CertifiedStrategy cs;
  cs.lemma = "strat-cycle-R";
  cs.reference = gr.weight(s_r);
  cs.bound = plan.bound;
  cs.worst_case_constant = Weight(1, 6);
  cs.set = s_r;
  cs.strategy = std::make_shared<CycleRStrategy>(g, std::move(plan));
  return cs;
}

inline constexpr int kDefaultEscalationCap = 3;

// Requires |V| odd, V+ sparse, G connected and n >= 2. Decomposes G^R for
// N = n, n+1, ... up to n + cap until no K_N witness surfaces, and also
// weighs the heaviest single block as a length-1 cycle; keeps the larger
// certified bound.
inline CertifiedStrategy strat_sparse(const WeightedGraph& g, int n, int escalation_cap = kDefaultEscalationCap,
                                      std::size_t memo_budget = kDefaultMemoBudget) {
  detail::require_odd_connected(g, "strat_sparse");
  detail::require_sparsely_weighted(g, "strat_sparse");
  if (n < 2) throw std::invalid_argument("strat_sparse needs n >= 2");
  if (escalation_cap < 0) throw std::invalid_argument("escalation cap must be non-negative");

  const VertexSet positive = g.positive_vertices();
  if (positive.empty()) {
    CertifiedStrategy cs;
    cs.strategy = std::make_shared<PlannedGreedy>(g);
    cs.lemma = "strat-sparse";
    cs.n_used = n;
    cs.worst_case_constant = constants::c_sparse(n);
    return cs;
  }

  const ShallowQuotient sq = shallow_quotient(g);
  const WeightedGraph& gr = sq.graph();
  std::optional<CertifiedStrategy> structural;
  std::optional<SubdivisionWitness> witness;
  int n_used = 0;
  for (int big_n = n; big_n <= n + escalation_cap; ++big_n) {
    const StructuralOutcome o = subdiv_decomposition(gr, big_n);
    if (o.tag == OutcomeTag::kSubdivisionWitness) {
      witness = o.witness;
      continue;
    }
    n_used = big_n;
    structural = o.tag == OutcomeTag::kCycleSet ? strat_cycle_R(g, o.set) : strat_comp_R(g, o.set, memo_budget);
    break;
  }

  const Vertex center = detail::heaviest(g, positive);
  CertifiedStrategy best = strat_cycle_R(g, VertexSet::single(sq.block_of(center)));
  if (structural && structural->bound >= best.bound) best = std::move(*structural);
  if (n_used > 0) {
    best.n_used = n_used;
    best.worst_case_constant = constants::c_sparse(n_used);
  } else {
    best.witness = witness;
    best.worst_case_constant = Weight(0);
  }
  return best;
}

// Opens with sigma's first vertex; then the heaviest available vertex of I,
// else the first untaken vertex of sigma.
class LegalStrategy : public Strategy {
 public:
  LegalStrategy(WeightedGraph plan, LegalOrderingContext ctx) : plan_(std::move(plan)), ctx_(std::move(ctx)) {}

  Vertex choose_move(const GameState& st) const override {
    detail::require_same_shape(plan_, st);
    const VertexSet taken = st.taken();
    if (taken.empty()) return ctx_.sigma.front();
    const VertexSet avail = st.legal_moves();
    if (avail.intersects(ctx_.independent)) return detail::heaviest(plan_, avail & ctx_.independent);
    for (Vertex v : ctx_.sigma)
      if (!taken.contains(v)) {
        if (!avail.contains(v)) throw std::logic_error("next vertex of a legal ordering is not available");
        return v;
      }
    throw std::logic_error("no move left for the legal-ordering strategy");
  }
  std::string name() const override { return "strat-legal"; }

  const LegalOrderingContext& context() const { return ctx_; }

 private:
  WeightedGraph plan_;
  LegalOrderingContext ctx_;
};

// Requires |V| >= 2 and sigma legal for I. Bound: half of w(I - U_sigma).
inline CertifiedStrategy strat_legal(const WeightedGraph& g, const LegalOrderingContext& ctx) {
  if (g.size() < 2 || !is_connected(g)) throw std::invalid_argument("strat_legal needs a connected graph with >= 2 vertices");
  if (!is_legal_ordering(g, ctx.independent, ctx.sigma)) throw std::invalid_argument("ordering is not legal for I");
  LegalOrderingContext fresh = make_context(g, ctx.independent, ctx.sigma);
  CertifiedStrategy cs;
  cs.lemma = "strat-legal";
  cs.reference = g.weight(fresh.independent - fresh.u_set);
  cs.bound = cs.reference / 2;
  cs.worst_case_constant = Weight(1, 2);
  cs.set = fresh.independent;
  cs.strategy = std::make_shared<LegalStrategy>(g, std::move(fresh));
  return cs;
}

// The charging behind strat_legal: every I vertex u Bob takes weighs at most
// w(v) or w(u_sigma(v)), v being Alice's move just before.
inline std::optional<std::string> check_charging(const WeightedGraph& g, const LegalOrderingContext& ctx,
                                                 const std::vector<MoveRecord>& moves) {
  for (std::size_t k = 1; k < moves.size(); k += 2) {
    const Vertex u = moves[k].vertex, v = moves[k - 1].vertex;
    if (!ctx.independent.contains(u)) continue;
    if (g.weight(u) <= g.weight(v)) continue;
    const Vertex rep = ctx.representative[v];
    if (rep >= 0 && g.weight(u) <= g.weight(rep)) continue;
    return "bob move " + std::to_string(k + 1) + " takes " + std::to_string(u) + " heavier than its charge after " +
           std::to_string(v);
  }
  return std::nullopt;
}

// Requires |V| odd and G connected. Sparse branch: weights off S reset to
// zero and strat_sparse planned on that graph. Legal branch: strat_legal.
// The bound is the realized branch bound; worst_case_constant is
// c_final(p) * min(c_sparse(N), 1/2) at the measured p and the N used.
inline CertifiedStrategy master_strategy(const WeightedGraph& g, int n, int escalation_cap = kDefaultEscalationCap,
                                         std::size_t memo_budget = kDefaultMemoBudget) {
  detail::require_odd_connected(g, "master_strategy");
  if (n < 2) throw std::invalid_argument("master_strategy needs n >= 2");
  Dichotomy d = sparse_or_legal(g);
  CertifiedStrategy cs;
  int big_n = n;
  if (d.branch == Branch::kLegal) {
    cs = strat_legal(g, *d.legal);
  } else {
    WeightedGraph reset = g;
    for (Vertex v : g.vertices() - d.sparse_set) reset.set_weight(v, Weight(0));
    cs = strat_sparse(reset, n, escalation_cap, memo_budget);
    if (cs.n_used > 0) big_n = cs.n_used;
  }
  cs.worst_case_constant = cs.witness ? Weight(0) : constants::c_game(d.measured_p, big_n);
  cs.dichotomy = std::move(d);
  return cs;
}

// Alice's final gain with `cs` against the oracle-optimal Bob on g.
inline GameRecord play_against_oracle(const WeightedGraph& g, const CertifiedStrategy& cs,
                                      std::size_t memo_budget = kDefaultMemoBudget) {
  OptimalStrategy bob(g, memo_budget);
  return play(g, *cs.strategy, bob);
}

}  // namespace graphshare

#endif  // GRAPHSHARE_STRATEGIES_HPP_
