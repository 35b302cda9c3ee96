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


// Command-line front end. run() is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error,
// 3 budget exhausted, 4 a strategy made an illegal move.

#ifndef GRAPHSHARE_TOOLS_CLI_HPP_
#define GRAPHSHARE_TOOLS_CLI_HPP_

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "graphshare/graphshare.hpp"

namespace graphshare::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kBudget = 3, kIllegalMove = 4 };

struct Options {
  std::string input;
  std::string out;
  int n = 4;
  std::uint64_t seed = 0;
  int seeds = 100;
  int size = 12;
  std::size_t budget = kDefaultMemoBudget;
  std::uint64_t search_budget = kDefaultSearchBudget;
  int escalation_cap = kDefaultEscalationCap;
  int jobs = 1;
  std::string alice = "optimal";
  std::string bob = "optimal";
  std::string family = "random";
  std::string parity = "any";
  std::string lemma;
};

namespace detail {

inline std::string quoted(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '"', '\'');
  return "\"" + s + "\"";
}

inline WeightedGraph load(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("--input is required");
  return read_graph_file(o.input);
}

inline std::shared_ptr<const Strategy> make_strategy(const std::string& name, Player side, const WeightedGraph& g,
                                                     const Options& o) {
  if (name == "optimal") return std::make_shared<OptimalStrategy>(g, o.budget);
  if (name == "greedy") return std::make_shared<GreedyStrategy>();
  if (name == "first") return std::make_shared<FirstLegalStrategy>();
  if (name == "random") return std::make_shared<HashedRandomStrategy>(o.seed + (side == Player::kBob ? 1 : 0));
  if (name == "master") {
    if (side != Player::kAlice) throw std::invalid_argument("master plays Alice only");
    return master_strategy(g, o.n, o.escalation_cap, o.budget).strategy;
  }
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

inline Parity parse_parity(const std::string& p) {
  if (p == "any") return Parity::kAny;
  if (p == "odd") return Parity::kOdd;
  if (p == "even") return Parity::kEven;
  throw std::invalid_argument("parity must be any, odd or even");
}

inline WeightedGraph generate(const Options& o) {
  const std::string& f = o.family;
  if (f == "hedgehog-path") return hedgehog(o.size, Spine::kPath);
  if (f == "hedgehog-star") return hedgehog(o.size, Spine::kStar);
  if (f == "odd") return odd_construction(o.size);
  if (f == "odd-subdivided") {
    const WeightedGraph h = odd_construction(o.size);
    std::vector<std::pair<Edge, int>> counts;
    for (auto [u, v] : h.edges())
      if (u >= o.size) counts.push_back({{u, v}, 2});
    return subdivide_even(h, counts);
  }
  RandomSpec spec;
  spec.size = o.size;
  spec.seed = o.seed;
  spec.parity = parse_parity(o.parity);
  if (f == "random") return random_connected(spec);
  if (f == "sparse") return graphshare::detail::fix_parity(random_sparsely_weighted(spec), spec.parity);
  if (f == "ring") {
    std::mt19937_64 rng(o.seed);
    std::vector<Weight> leaves;
    for (int i = 0; i < o.size; ++i) leaves.push_back(Weight(1 + static_cast<int>(rng() % 9)));
    return ring_of_stars(leaves, 1);
  }
  throw std::invalid_argument("unknown family '" + f + "'");
}

inline void print_outcome(std::ostream& out, const std::string& lemma, const StructuralOutcome& o, const Defect& d) {
  out << format_outcome(o) << '\n';
  if (o.cycle) {
    std::vector<Vertex> order = o.cycle->order;
    std::string ids;
    for (Vertex v : order) ids += (ids.empty() ? "" : ",") + std::to_string(v);
    out << "cycle order=" << ids << '\n';
  }
  if (o.witness)
    for (const auto& p : o.witness->paths) {
      std::string ids;
      for (Vertex v : p.vertices) ids += (ids.empty() ? "" : ",") + std::to_string(v);
      out << "path from=" << o.witness->branch[p.from] << " to=" << o.witness->branch[p.to] << " vertices=" << ids
          << '\n';
    }
  out << "check lemma=" << lemma << " status=" << (d ? "fail" : "pass");
  if (d) out << " reason=" << quoted(*d);
  out << '\n';
}

inline int cmd_value(const Options& o, std::ostream& out) {
  GameSolver solver(load(o), o.budget);
  const Weight v = solver.game_value();
  out << "value " << to_string(v) << '\n';
  return kOk;
}

inline int cmd_play(const Options& o, std::ostream& out) {
  const WeightedGraph g = load(o);
  auto alice = make_strategy(o.alice, Player::kAlice, g, o);
  auto bob = make_strategy(o.bob, Player::kBob, g, o);
  const GameRecord r = play(g, *alice, *bob);
  write_move_log(out, r.moves);
  out << "result alice=" << o.alice << " bob=" << o.bob << " aliceGain=" << to_string(r.alice_gain)
      << " bobGain=" << to_string(r.bob_gain) << '\n';
  return kOk;
}

inline int cmd_decompose(const Options& o, std::ostream& out) {
  const WeightedGraph g = load(o);
  if (!is_connected(g)) throw std::invalid_argument("decompose needs a connected graph");
  bool ok = true;
  const CycleCertificate h = dfs_cycle(g);
  {
    Defect d = check_dfs_cycle(g, h);
    std::string ids;
    for (Vertex v : h.order) ids += (ids.empty() ? "" : ",") + std::to_string(v);
    out << "cycle order=" << ids << '\n';
    out << "check lemma=struct-cycle status=" << (d ? "fail" : "pass") << '\n';
    ok = ok && !d;
  }
  const StructuralOutcome full = full_decomposition(g);
  Defect d_full = check_full(g, full);
  print_outcome(out, "struct-full", full, d_full);
  const StructuralOutcome sub = subdiv_decomposition(g, o.n);
  Defect d_sub = check_subdiv(g, o.n, sub);
  print_outcome(out, "struct-subdiv", sub, d_sub);
  ok = ok && !d_full && !d_sub;
  return ok ? kOk : kCheckFailed;
}

inline int cmd_certify(const Options& o, std::ostream& out) {
  const WeightedGraph g = load(o);
  const CertifiedStrategy cs = master_strategy(g, o.n, o.escalation_cap, o.budget);
  const GameRecord r = play_against_oracle(g, cs, o.budget);
  out << format_dichotomy(*cs.dichotomy) << '\n';
  if (cs.witness) out << "witness n=" << cs.witness->pattern_vertex_count() << " branch=" << to_string(cs.witness->branch_set()) << '\n';
  out << format_certified(cs, r.alice_gain) << '\n';
  const bool pass = cs.bound <= r.alice_gain;
  out << "check status=" << (pass ? "pass" : "fail") << '\n';
  return pass ? kOk : kCheckFailed;
}

inline int cmd_generate(const Options& o, std::ostream& out) {
  const WeightedGraph g = generate(o);
  if (o.out.empty()) {
    write_graph(out, g);
    return kOk;
  }
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
  write_graph(file, g);
  if (!file.flush()) throw std::runtime_error("cannot write '" + o.out + "'");
  out << "generated family=" << o.family << " vertices=" << g.size() << " edges=" << g.edge_count()
      << " out=" << o.out << '\n';
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.seeds = o.seeds;
  v.base_seed = o.seed;
  v.size = o.size;
  v.n = o.n;
  v.escalation_cap = o.escalation_cap;
  v.memo_budget = o.budget;
  v.search_budget = o.search_budget;
  std::vector<std::string> lemmas;
  if (o.lemma == "all")
    for (const auto& [name, check] : verify_suites()) lemmas.push_back(name);
  else
    lemmas.push_back(o.lemma);
  bool ok = true;
  for (const auto& lemma : lemmas) {
    const SuiteResult r = run_suite(lemma, v, o.jobs);
    for (const auto& f : r.failures) out << format_failure(lemma, f) << '\n';
    out << format_suite(r) << '\n';
    ok = ok && r.failed == 0;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph sharing game T: exact values, decompositions and certified strategies", "graphshare"};
  app.require_subcommand(1, 1);
  Options o;

  auto input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "graph file")->envname("GRAPHSHARE_INPUT");
  };
  auto memo = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "minimax memo entries")->envname("GRAPHSHARE_BUDGET")->capture_default_str();
  };
  auto strategy_knobs = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "K_n excluded by the subdivision decomposition")
        ->envname("GRAPHSHARE_N")
        ->check(CLI::Range(2, 8))
        ->capture_default_str();
    sub->add_option("--escalation-cap", o.escalation_cap, "extra N values tried on a witness")
        ->envname("GRAPHSHARE_ESCALATION_CAP")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  auto seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed")->envname("GRAPHSHARE_SEED")->capture_default_str();
  };

  CLI::App* value = app.add_subcommand("value", "exact game value");
  input(value);
  memo(value);

  CLI::App* play_cmd = app.add_subcommand("play", "play two strategies and print the move log");
  input(play_cmd);
  memo(play_cmd);
  strategy_knobs(play_cmd);
  seed(play_cmd);
  const std::vector<std::string> names = {"optimal", "greedy", "first", "random", "master"};
  play_cmd->add_option("--alice", o.alice, "optimal|greedy|first|random|master")
      ->envname("GRAPHSHARE_ALICE")
      ->check(CLI::IsMember(names))
      ->capture_default_str();
  play_cmd->add_option("--bob", o.bob, "optimal|greedy|first|random")
      ->envname("GRAPHSHARE_BOB")
      ->check(CLI::IsMember(names))
      ->capture_default_str();

  CLI::App* decompose = app.add_subcommand("decompose", "structural decompositions, re-checked");
  input(decompose);
  decompose->add_option("--n", o.n, "K_n for the subdivision decomposition")
      ->envname("GRAPHSHARE_N")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();

  CLI::App* certify = app.add_subcommand("certify", "master strategy against the optimal Bob");
  input(certify);
  memo(certify);
  strategy_knobs(certify);

  CLI::App* gen = app.add_subcommand("generate", "write a generated graph");
  seed(gen);
  gen->add_option("--family", o.family, "hedgehog-path|hedgehog-star|odd|odd-subdivided|random|sparse|ring")
      ->envname("GRAPHSHARE_FAMILY")
      ->capture_default_str();
  gen->add_option("--size", o.size, "n for the named families, vertices for random ones")
      ->envname("GRAPHSHARE_SIZE")
      ->check(CLI::Range(1, kMaxVertices))
      ->capture_default_str();
  gen->add_option("--parity", o.parity, "any|odd|even")->envname("GRAPHSHARE_PARITY")->capture_default_str();
  gen->add_option("--out,-o", o.out, "output file (stdout if omitted)")->envname("GRAPHSHARE_OUT");

  CLI::App* verify = app.add_subcommand("verify", "seeded property suite for one lemma");
  std::string lemma_help = "all";
  for (const auto& [name, check] : verify_suites()) lemma_help += "|" + name;
  verify->add_option("lemma", o.lemma, lemma_help)->required();
  seed(verify);
  memo(verify);
  strategy_knobs(verify);
  verify->add_option("--seeds", o.seeds, "instances")
      ->envname("GRAPHSHARE_SEEDS")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--size", o.size, "largest instance")
      ->envname("GRAPHSHARE_SIZE")
      ->check(CLI::Range(1, kMaxVertices))
      ->capture_default_str();
  verify->add_option("--search-budget", o.search_budget, "node budget for Bob enumeration and K_n search")
      ->envname("GRAPHSHARE_SEARCH_BUDGET")
      ->capture_default_str();
  verify->add_option("--jobs,-j", o.jobs, "worker threads")
      ->envname("GRAPHSHARE_JOBS")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }

  try {
    if (*value) return detail::cmd_value(o, out);
    if (*play_cmd) return detail::cmd_play(o, out);
    if (*decompose) return detail::cmd_decompose(o, out);
    if (*certify) return detail::cmd_certify(o, out);
    if (*gen) return detail::cmd_generate(o, out);
    if (*verify) {
      if (o.lemma != "all" && !verify_suites().count(o.lemma))
        throw std::invalid_argument("unknown lemma '" + o.lemma + "'");
      return detail::cmd_verify(o, out);
    }
  } catch (const BudgetExceeded& e) {
    err << "error kind=budget message=" << detail::quoted(e.what()) << '\n';
    return kBudget;
  } catch (const IllegalMove& e) {
    err << "error kind=illegal-move message=" << detail::quoted(e.what()) << '\n';
    return kIllegalMove;
  } catch (const ParseError& e) {
    err << "error kind=parse message=" << detail::quoted(e.what()) << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error kind=input message=" << detail::quoted(e.what()) << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace graphshare::cli

#endif  // GRAPHSHARE_TOOLS_CLI_HPP_
