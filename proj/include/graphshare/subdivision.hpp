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

// Topological-minor witnesses: a set of branch vertices plus internally
// disjoint paths realizing the edges of a pattern graph H. The exhaustive
// K_n search here is a desk-scale oracle; nothing on the strategy path calls it.

#ifndef GRAPHSHARE_SUBDIVISION_HPP_
#define GRAPHSHARE_SUBDIVISION_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/budget.hpp"
#include "graphshare/graph.hpp"

namespace graphshare {

// Path realizing the pattern edge between branch[from] and branch[to]; the
// vertex sequence starts at branch[from] and ends at branch[to].
struct SubdivisionPath {
  int from = 0;
  int to = 0;
  std::vector<Vertex> vertices;
};

struct SubdivisionWitness {
  std::vector<Vertex> branch;
  std::vector<SubdivisionPath> paths;

  int pattern_vertex_count() const { return static_cast<int>(branch.size()); }
  int pattern_edge_count() const { return static_cast<int>(paths.size()); }
  VertexSet branch_set() const { return VertexSet::of(branch); }
  VertexSet vertex_set() const {
    VertexSet out = branch_set();
    for (const auto& p : paths) out |= VertexSet::of(p.vertices);
    return out;
  }
  bool has_pattern_edge(int a, int b) const {
    for (const auto& p : paths)
      if ((p.from == a && p.to == b) || (p.from == b && p.to == a)) return true;
    return false;
  }
};

// Structural check of a witness inside g, with every used vertex required to
// lie in `allowed`. Returns a description of the first defect, or nullopt.
inline std::optional<std::string> witness_defect(const WeightedGraph& g, const SubdivisionWitness& w,
                                                 VertexSet allowed) {
  VertexSet branch;
  for (Vertex b : w.branch) {
    if (b < 0 || b >= g.size()) return "branch vertex out of range";
    if (branch.contains(b)) return "repeated branch vertex " + std::to_string(b);
    if (!allowed.contains(b)) return "branch vertex " + std::to_string(b) + " outside the allowed set";
    branch.insert(b);
  }
  VertexSet interiors;
  std::set<std::pair<int, int>> pattern_edges;
  for (const auto& p : w.paths) {
    const int k = w.pattern_vertex_count();
    if (p.from < 0 || p.from >= k || p.to < 0 || p.to >= k || p.from == p.to)
      return "path endpoints are not two distinct branch indices";
    if (!pattern_edges.insert(std::minmax(p.from, p.to)).second) return "pattern edge realized twice";
    if (p.vertices.size() < 2) return "path with fewer than two vertices";
    if (p.vertices.front() != w.branch[p.from] || p.vertices.back() != w.branch[p.to])
      return "path does not join its branch vertices";
    VertexSet on_path;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      Vertex v = p.vertices[i];
      if (v < 0 || v >= g.size()) return "path vertex out of range";
      if (!allowed.contains(v)) return "path vertex " + std::to_string(v) + " outside the allowed set";
      if (on_path.contains(v)) return "path revisits vertex " + std::to_string(v);
      on_path.insert(v);
      if (i + 1 < p.vertices.size() && !g.adjacent(v, p.vertices[i + 1]))
        return "missing edge " + std::to_string(v) + "-" + std::to_string(p.vertices[i + 1]);
      const bool interior = i > 0 && i + 1 < p.vertices.size();
      if (interior) {
        if (branch.contains(v)) return "path passes through branch vertex " + std::to_string(v);
        if (interiors.contains(v)) return "paths share interior vertex " + std::to_string(v);
        interiors.insert(v);
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> witness_defect(const WeightedGraph& g, const SubdivisionWitness& w) {
  return witness_defect(g, w, g.vertices());
}

// True when w is a valid witness of a subdivision of K_n.
inline bool is_complete_witness(const WeightedGraph& g, const SubdivisionWitness& w, int n) {
  if (w.pattern_vertex_count() != n || w.pattern_edge_count() != n * (n - 1) / 2) return false;
  return !witness_defect(g, w).has_value();
}

namespace detail {

class KnSearch {
 public:
  KnSearch(const WeightedGraph& g, int n, std::uint64_t budget) : g_(g), n_(n), budget_(budget) {}

  std::optional<SubdivisionWitness> run() {
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g_.size(); ++v)
      if (g_.degree(v) >= n_ - 1) candidates.push_back(v);
    if (static_cast<int>(candidates.size()) < n_) return std::nullopt;
    std::vector<int> pick(n_);
    for (int i = 0; i < n_; ++i) pick[i] = i;
    while (true) {
      std::vector<Vertex> branch;
      for (int i : pick) branch.push_back(candidates[i]);
      if (auto w = try_branch(branch)) return w;
      int i = n_ - 1;
      while (i >= 0 && pick[i] == static_cast<int>(candidates.size()) - n_ + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < n_; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
  }

 private:
  void tick() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("subdivision search exceeded " + std::to_string(budget_) + " nodes");
  }

  std::optional<SubdivisionWitness> try_branch(const std::vector<Vertex>& branch) {
    witness_ = SubdivisionWitness{branch, {}};
    branch_set_ = VertexSet::of(branch);
    pending_.clear();
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        if (g_.adjacent(branch[a], branch[b]))
          witness_.paths.push_back({a, b, {branch[a], branch[b]}});
        else
          pending_.emplace_back(a, b);
      }
    used_ = branch_set_;
    if (assign(0)) {
      std::sort(witness_.paths.begin(), witness_.paths.end(), [](const auto& x, const auto& y) {
        return std::make_pair(x.from, x.to) < std::make_pair(y.from, y.to);
      });
      return witness_;
    }
    return std::nullopt;
  }

  // Every branch vertex needs a distinct free neighbor for each of its
  // still-unrouted pattern edges.
  bool degrees_feasible(std::size_t next) const {
    std::vector<int> need(n_, 0);
    for (std::size_t k = next; k < pending_.size(); ++k) {
      ++need[pending_[k].first];
      ++need[pending_[k].second];
    }
    for (int a = 0; a < n_; ++a)
      if (need[a] > (g_.neighbors(witness_.branch[a]) - used_).size()) return false;
    return true;
  }

  bool assign(std::size_t k) {
    tick();
    if (k == pending_.size()) return true;
    if (!degrees_feasible(k)) return false;
    auto [a, b] = pending_[k];
    std::vector<Vertex> path{witness_.branch[a]};
    return extend(path, witness_.branch[b], k);
  }

  bool extend(std::vector<Vertex>& path, Vertex target, std::size_t k) {
    tick();
    Vertex tip = path.back();
    if (path.size() > 1 && g_.adjacent(tip, target)) {
      path.push_back(target);
      witness_.paths.push_back({pending_[k].first, pending_[k].second, path});
      if (assign(k + 1)) return true;
      witness_.paths.pop_back();
      path.pop_back();
    }
    for (Vertex next : g_.neighbors(tip) - used_) {
      used_.insert(next);
      path.push_back(next);
      if (extend(path, target, k)) return true;
      path.pop_back();
      used_.erase(next);
    }
    return false;
  }

  const WeightedGraph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  SubdivisionWitness witness_;
  VertexSet branch_set_;
  VertexSet used_;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace detail

// Exhaustive search for a subdivision of K_n. Returns nullopt only when the
// search proves there is none; throws BudgetExceeded past the budget.
inline std::optional<SubdivisionWitness> find_subdivision(const WeightedGraph& g, int n,
                                                          std::uint64_t node_budget = kDefaultSearchBudget) {
  if (n < 1) throw std::invalid_argument("find_subdivision needs n >= 1");
  if (g.size() < n) return std::nullopt;
  if (n == 1) return SubdivisionWitness{{0}, {}};
  return detail::KnSearch(g, n, node_budget).run();
}

}  // namespace graphshare

#endif  // GRAPHSHARE_SUBDIVISION_HPP_
