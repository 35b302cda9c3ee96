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

// Seeded property suites, one per lemma. Instance k of a run uses seed
// base + k and a size that cycles through the allowed range, so a run is
// reproducible from (lemma, base seed, seeds, size).

#ifndef GRAPHSHARE_VERIFY_HPP_
#define GRAPHSHARE_VERIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "graphshare/arrangeable.hpp"
#include "graphshare/checks.hpp"
#include "graphshare/decompose.hpp"
#include "graphshare/dfs_cycle.hpp"
#include "graphshare/generators.hpp"
#include "graphshare/hamiltonian.hpp"
#include "graphshare/legal_ordering.hpp"
#include "graphshare/oriented_paths.hpp"
#include "graphshare/shallow_minor.hpp"
#include "graphshare/solver.hpp"
#include "graphshare/sparse_or_legal.hpp"
#include "graphshare/strategies.hpp"
#include "graphshare/subdivision.hpp"

namespace graphshare {

struct VerifyOptions {
  int seeds = 100;
  std::uint64_t base_seed = 0;
  int size = 12;  // largest instance, in vertices
  int n = 4;      // K_n for the subdivision suites
  int escalation_cap = kDefaultEscalationCap;
  std::size_t memo_budget = kDefaultMemoBudget;
  std::uint64_t search_budget = kDefaultSearchBudget;
  int exhaustive_limit = 9;  // enumerate every Bob up to this many vertices
};

struct SuiteFailure {
  std::uint64_t seed;
  std::string reason;
};

struct SuiteResult {
  std::string lemma;
  int seeds = 0;
  int passed = 0;
  int failed = 0;
  std::vector<SuiteFailure> failures;
};

inline std::string format_suite(const SuiteResult& r) {
  std::ostringstream out;
  out << "verify lemma=" << r.lemma << " seeds=" << r.seeds << " passed=" << r.passed << " failed=" << r.failed;
  return out.str();
}

inline std::string format_failure(const std::string& lemma, const SuiteFailure& f) {
  std::string reason = f.reason;
  std::replace(reason.begin(), reason.end(), '\n', ' ');
  std::replace(reason.begin(), reason.end(), '"', '\'');
  return "fail lemma=" + lemma + " seed=" + std::to_string(f.seed) + " reason=\"" + reason + "\"";
}

// One instance: seed, its index in the run, and the options.
using SuiteCheck = std::function<Defect(std::uint64_t seed, int k, const VerifyOptions&)>;

namespace detail {

inline int cycled_size(int k, int lo, int hi) { return lo + k % std::max(1, hi - lo + 1); }
inline int cycled_odd_size(int k, int lo, int hi) {
  lo |= 1;
  return lo + 2 * (k % std::max(1, (hi - lo) / 2 + 1));
}

inline RandomSpec verify_spec(std::uint64_t seed, int size, double extra) {
  RandomSpec spec;
  spec.seed = seed;
  spec.size = size;
  spec.extra_edge_probability = extra;
  spec.max_denominator = 3;
  return spec;
}

inline double edge_density(int k) { return k % 3 == 0 ? 0.45 : 0.15; }

inline VertexSet random_connected_subset(const WeightedGraph& g, std::mt19937_64& rng, bool proper) {
  VertexSet s = VertexSet::single(static_cast<Vertex>(rng() % g.size()));
  const int target = 1 + static_cast<int>(rng() % (proper ? g.size() - 1 : g.size()));
  while (s.size() < target && !g.neighborhood(s).empty()) {
    auto options = g.neighborhood(s).to_vector();
    s.insert(options[rng() % options.size()]);
  }
  return s;
}

// Gain of `cs` against the oracle Bob and, on small graphs, against every Bob.
inline Defect check_certified(const WeightedGraph& g, const CertifiedStrategy& cs, const VerifyOptions& opts,
                              const std::function<Defect(const std::vector<MoveRecord>&)>& per_game = {}) {
  const GameRecord r = play_against_oracle(g, cs, opts.memo_budget);
  if (r.alice_gain < cs.bound)
    return "oracle Bob held Alice to " + to_string(r.alice_gain) + " < bound " + to_string(cs.bound);
  if (per_game)
    if (auto d = per_game(r.moves)) return d;
  if (g.size() <= opts.exhaustive_limit) {
    Defect game_defect;
    auto on_game = [&](const GameState& s) {
      if (per_game) game_defect = per_game(s.history());
      return !game_defect;
    };
    try {
      const WorstCase wc = worst_case_gain(g, *cs.strategy, opts.search_budget, on_game);
      if (wc.alice_gain < cs.bound)
        return "some Bob held Alice to " + to_string(wc.alice_gain) + " < bound " + to_string(cs.bound);
    } catch (const std::runtime_error&) {
      if (game_defect) return game_defect;
      throw;
    }
  }
  return std::nullopt;
}

inline Defect suite_two_paths(std::uint64_t seed, int k, const VerifyOptions& o) {
  std::mt19937_64 rng(seed);
  const int size = cycled_size(k, 2, std::max(2, o.size));
  OrientedPathGraph d(size);
  std::bernoulli_distribution arc(0.3);
  for (int a = 0; a < size; ++a)
    for (int b = a + 2; b < size; ++b)
      if (arc(rng)) d.add_arc(a, b);
  for (int x = 1; x + 1 < size; ++x)
    if (!d.covered(x)) d.add_arc(x - 1, x + 1);
  return check_two_paths(d, oriented_two_paths(d));
}

inline Defect suite_hamil_separator(std::uint64_t seed, int k, const VerifyOptions& o) {
  auto [g, h] = random_hamiltonian(verify_spec(seed, cycled_size(k, 1, o.size), edge_density(k)));
  return check_hamil_separator(g, h, hamil_separator(g, h));
}

inline Defect suite_hamil_grow(std::uint64_t seed, int k, const VerifyOptions& o) {
  auto [g, h] = random_hamiltonian(verify_spec(seed, cycled_size(k, 2, std::max(2, o.size)), edge_density(k)));
  std::mt19937_64 rng(seed ^ 0x5bd1e995);
  const VertexSet a = random_connected_subset(g, rng, true);
  return check_hamil_grow(g, h, a, hamil_grow(g, h, a));
}

inline Defect suite_dfs_cycle(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = random_connected(verify_spec(seed, cycled_size(k, 1, o.size), edge_density(k)));
  return check_dfs_cycle(g, dfs_cycle(g));
}

inline Defect suite_full(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = random_connected(verify_spec(seed, cycled_size(k, 1, o.size), edge_density(k)));
  return check_full(g, full_decomposition(g));
}

inline Defect suite_indsubdiv(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = random_connected(verify_spec(seed, cycled_size(k, 2, std::max(2, o.size)), edge_density(k)));
  std::mt19937_64 rng(seed ^ 0x2545f491);
  const VertexSet a = random_connected_subset(g, rng, true);
  const std::int64_t m = static_cast<std::int64_t>(rng() % (constants::choose2(o.n) + 1));
  return check_indsubdiv(g, a, o.n, m, indsubdiv(g, a, o.n, m));
}

inline Defect suite_subdiv(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = random_connected(verify_spec(seed, cycled_size(k, 1, o.size), edge_density(k)));
  return check_subdiv(g, o.n, subdiv_decomposition(g, o.n));
}

inline Defect suite_observation(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = random_connected(verify_spec(seed, cycled_size(k, 1, o.size), edge_density(k)));
  const OrderedGraph og = arrangeable_ordering(g);
  const int p = og.measured_p;
  for (Vertex v : g.vertices()) {
    const int back = (g.neighbors(v) & og.before(v)).size();
    if (back > observation_bound_1(p))
      return "vertex " + std::to_string(v) + " has " + std::to_string(back) + " back neighbors at p=" +
             std::to_string(p);
    const int closed = closed_back_measure(g, og, v);
    if (closed > observation_bound_2(p))
      return "vertex " + std::to_string(v) + " closed back measure " + std::to_string(closed) + " at p=" +
             std::to_string(p);
  }
  return std::nullopt;
}

inline Defect suite_sparse_or_legal(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = random_connected(verify_spec(seed, cycled_size(k, 1, o.size), edge_density(k)));
  const Dichotomy d = sparse_or_legal(g);
  if (d.c_n != constants::c_final(d.measured_p)) return "c_n does not match the measured p";
  if (d.weight < d.c_n * g.total_weight()) return "branch weight below c_n * w(G): " + format_dichotomy(d);
  if (d.branch == Branch::kSparse) {
    if (!is_sparse(g, d.sparse_set)) return "sparse set is not sparse";
    if (d.weight != g.weight(d.sparse_set)) return "sparse weight mismatch";
  } else {
    if (!d.legal || !is_legal_ordering(g, d.independent, d.legal->sigma)) return "ordering is not legal";
    if (d.weight != g.weight(d.independent - d.legal->u_set)) return "legal weight mismatch";
  }
  return std::nullopt;
}

// Distance-3 positives, one zero-zero edge subdivided twice, equal values.
inline Defect suite_subdivision_even(std::uint64_t seed, int k, const VerifyOptions& o) {
  RandomSpec spec = verify_spec(seed, cycled_size(k, 2, std::max(2, o.size)), edge_density(k));
  spec.zero_probability = 0.2;
  WeightedGraph g = random_sparsely_weighted(spec);
  std::vector<Edge> zero_edges;
  for (auto [u, v] : g.edges())
    if (g.weight(u) == 0 && g.weight(v) == 0) zero_edges.emplace_back(u, v);
  if (zero_edges.empty()) {
    // Hang two zero vertices off a zero vertex (or a fresh one) to get such an edge.
    std::vector<Weight> weights = g.weights();
    std::vector<Edge> edges = g.edges();
    Vertex anchor = g.size() - 1;
    const Vertex x = static_cast<Vertex>(weights.size());
    weights.push_back(Weight(0));
    weights.push_back(Weight(0));
    if (g.weight(anchor) != 0) {
      weights.push_back(Weight(0));
      edges.emplace_back(anchor, x + 2);
      anchor = x + 2;
    }
    edges.emplace_back(anchor, x);
    edges.emplace_back(x, x + 1);
    g = WeightedGraph(std::move(weights), edges);
    zero_edges = {{x, x + 1}};
  }
  std::mt19937_64 rng(seed ^ 0x61c88647);
  const Edge e = zero_edges[rng() % zero_edges.size()];
  const WeightedGraph h = subdivide_even(g, {{e, 2}});
  const Weight before = GameSolver(g, o.memo_budget).game_value();
  const Weight after = GameSolver(h, o.memo_budget).game_value();
  if (before != after) return "value " + to_string(before) + " became " + to_string(after);
  return std::nullopt;
}

inline Defect suite_strat_comp(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g =
      random_connected(verify_spec(seed, cycled_odd_size(k, 1, std::min(o.size, 16)), edge_density(k)));
  GameSolver solver(g, o.memo_budget);
  const std::uint64_t limit = std::uint64_t{1} << g.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet t = VertexSet(bits);
    if (t.size() % 2 != 0 || !is_connected(g, t)) continue;
    const Weight value = solver.value_from(t);
    const Weight bound = w_star(g, g.vertices() - t) / 2;
    if (value < bound)
      return "from {" + to_string(t) + "} value " + to_string(value) + " < " + to_string(bound);
  }
  return std::nullopt;
}

inline WeightedGraph sparse_instance(std::uint64_t seed, int k, int max_size) {
  RandomSpec spec = verify_spec(seed, cycled_odd_size(k, 3, std::max(3, max_size)), k % 2 == 0 ? 0.0 : 0.25);
  spec.max_denominator = 1;
  spec.zero_probability = 0.2;
  return random_sparsely_weighted(spec);
}

inline Defect suite_strat_comp_r(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = sparse_instance(seed, k, o.size);
  const ShallowQuotient sq = shallow_quotient(g);
  std::mt19937_64 rng(seed ^ 0x7f4a7c15);
  const VertexSet s_r = random_connected_subset(sq.graph(), rng, false);
  const CertifiedStrategy cs = strat_comp_R(g, s_r, o.memo_budget);
  const Weight expected = w_star(sq.graph(), sq.graph().vertices() - s_r) / 2;
  if (cs.bound != expected) return "bound " + to_string(cs.bound) + " is not " + to_string(expected);
  return check_certified(g, cs, o);
}

// A ring of 1..6 stars with an odd number of pendants, |V| <= size.
inline WeightedGraph ring_instance(std::uint64_t seed, int k, int max_size) {
  std::mt19937_64 rng(seed);
  max_size = std::max(3, max_size);
  const int stars = 1 + k % std::max(1, std::min(6, (max_size - 1) / 2));
  const int room = max_size - 2 * stars;
  const int pendants = 1 + 2 * static_cast<int>(rng() % ((room + 1) / 2));
  std::vector<Weight> leaves;
  for (int i = 0; i < stars; ++i) leaves.push_back(Weight(1 + static_cast<int>(rng() % 9)));
  return ring_of_stars(leaves, pendants);
}

inline VertexSet positive_blocks(const WeightedGraph& g, const ShallowQuotient& sq) {
  VertexSet out;
  for (Vertex v : g.positive_vertices()) out.insert(sq.block_of(v));
  return out;
}

inline Defect suite_strat_cycle_r(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = ring_instance(seed, k, o.size);
  const ShallowQuotient sq = shallow_quotient(g);
  const VertexSet s_r = positive_blocks(g, sq);
  const CertifiedStrategy cs = strat_cycle_R(g, s_r);
  const Weight w_sr = g.weight(sq.blocks_to_vertices(s_r));
  if (cs.bound * 6 < w_sr) return "bound " + to_string(cs.bound) + " below w(S_R)/6";
  return check_certified(g, cs, o);
}

inline Defect suite_strat_sparse(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g = sparse_instance(seed, k, o.size);
  const CertifiedStrategy cs = strat_sparse(g, o.n, o.escalation_cap, o.memo_budget);
  if (cs.n_used > 0 && cs.bound < cs.worst_case_constant * g.total_weight())
    return "bound " + to_string(cs.bound) + " below c_sparse * w(G)";
  return check_certified(g, cs, o);
}

inline LegalOrderingContext constructed_context(const WeightedGraph& g) {
  const VertexSet in = heaviest_class(g, distinguishing_coloring(g, arrangeable_ordering(g)));
  return improve_ordering(g, build_legal_ordering(g, in));
}

inline Defect suite_strat_legal(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g =
      random_connected(verify_spec(seed, cycled_odd_size(k, 3, std::max(3, o.size)), edge_density(k)));
  const LegalOrderingContext ctx = constructed_context(g);
  const CertifiedStrategy cs = strat_legal(g, ctx);
  if (cs.bound != g.weight(ctx.independent - ctx.u_set) / 2) return "bound is not w(I - U)/2";
  return check_certified(g, cs, o, [&](const std::vector<MoveRecord>& moves) { return check_charging(g, ctx, moves); });
}

inline Defect suite_master(std::uint64_t seed, int k, const VerifyOptions& o) {
  const WeightedGraph g =
      random_connected(verify_spec(seed, cycled_odd_size(k, 1, o.size), k % 2 == 0 ? 0.1 : 0.2));
  const CertifiedStrategy cs = master_strategy(g, o.n, o.escalation_cap, o.memo_budget);
  if (!cs.witness && cs.bound < cs.worst_case_constant * g.total_weight())
    return "bound " + to_string(cs.bound) + " below c_n * w(G) = " + to_string(cs.worst_case_constant * g.total_weight());
  return check_certified(g, cs, o);
}

}  // namespace detail

inline const std::map<std::string, SuiteCheck>& verify_suites() {
  static const std::map<std::string, SuiteCheck> suites = {
      {"two-paths", detail::suite_two_paths},
      {"hamil-separator", detail::suite_hamil_separator},
      {"hamil-grow", detail::suite_hamil_grow},
      {"struct-cycle", detail::suite_dfs_cycle},
      {"struct-full", detail::suite_full},
      {"indsubdiv", detail::suite_indsubdiv},
      {"struct-subdiv", detail::suite_subdiv},
      {"observation", detail::suite_observation},
      {"sparse-or-legal", detail::suite_sparse_or_legal},
      {"subdivision-even", detail::suite_subdivision_even},
      {"strat-comp", detail::suite_strat_comp},
      {"strat-comp-R", detail::suite_strat_comp_r},
      {"strat-cycle-R", detail::suite_strat_cycle_r},
      {"strat-sparse", detail::suite_strat_sparse},
      {"strat-legal", detail::suite_strat_legal},
      {"master", detail::suite_master},
  };
  return suites;
}

// Runs one suite, spreading instances over `jobs` threads; results are
// merged in seed order. BudgetExceeded propagates; any other exception
// counts as a failed instance.
inline SuiteResult run_suite(const std::string& lemma, const VerifyOptions& opts, int jobs = 1) {
  const auto& suites = verify_suites();
  auto it = suites.find(lemma);
  if (it == suites.end()) throw std::invalid_argument("unknown lemma '" + lemma + "'");
  if (opts.seeds < 0) throw std::invalid_argument("seeds must be non-negative");
  if (opts.size < 1 || opts.size > kMaxVertices) throw std::invalid_argument("size out of range");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  const SuiteCheck& check = it->second;

  std::vector<Defect> defects(opts.seeds);
  std::vector<std::exception_ptr> budget_errors(jobs);
  auto worker = [&](int j) {
    for (int k = j; k < opts.seeds; k += jobs) {
      const std::uint64_t seed = opts.base_seed + static_cast<std::uint64_t>(k);
      try {
        defects[k] = check(seed, k, opts);
      } catch (const BudgetExceeded&) {
        budget_errors[j] = std::current_exception();
        return;
      } catch (const std::exception& e) {
        defects[k] = std::string(e.what());
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : budget_errors)
    if (e) std::rethrow_exception(e);

  SuiteResult r;
  r.lemma = lemma;
  r.seeds = opts.seeds;
  for (int k = 0; k < opts.seeds; ++k) {
    if (defects[k]) {
      ++r.failed;
      r.failures.push_back({opts.base_seed + static_cast<std::uint64_t>(k), *defects[k]});
    } else {
      ++r.passed;
    }
  }
  return r;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_VERIFY_HPP_
