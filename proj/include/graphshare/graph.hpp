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

// Weighted simple graphs with exact rational vertex weights, and the set
// operations everything else is built on: components, residual weight w*,
// reduction to a vertex subset, quotients, sparse/independent tests and the
// degenerate-cycle check on reductions.

#ifndef GRAPHSHARE_GRAPH_HPP_
#define GRAPHSHARE_GRAPH_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/vertex_set.hpp"
#include "graphshare/weight.hpp"

namespace graphshare {

using Edge = std::pair<Vertex, Vertex>;

class WeightedGraph {
 public:
  WeightedGraph() = default;

  explicit WeightedGraph(int vertex_count)
      : adjacency_(check_count(vertex_count)), weights_(vertex_count, Weight(0)) {}

  explicit WeightedGraph(std::vector<Weight> weights) : WeightedGraph(static_cast<int>(weights.size())) {
    for (Vertex v = 0; v < size(); ++v) set_weight(v, weights[v]);
  }

  WeightedGraph(std::vector<Weight> weights, const std::vector<Edge>& edges)
      : WeightedGraph(std::move(weights)) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int size() const { return static_cast<int>(weights_.size()); }
  VertexSet vertices() const { return VertexSet::full(size()); }

  // Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (adjacency_[u].contains(v)) return false;
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    return true;
  }

  void set_weight(Vertex v, const Weight& w) {
    check_vertex(v);
    if (w < 0) throw std::invalid_argument("negative weight at vertex " + std::to_string(v));
    weights_[v] = w;
  }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adjacency_[v] | VertexSet::single(v); }
  int degree(Vertex v) const { return adjacency_[v].size(); }

  // N(S): vertices outside S adjacent to S.
  VertexSet neighborhood(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s) out |= adjacency_[v];
    return out - s;
  }
  VertexSet closed_neighborhood(VertexSet s) const { return neighborhood(s) | s; }

  const Weight& weight(Vertex v) const { return weights_[v]; }
  Weight weight(VertexSet s) const {
    Weight total(0);
    for (Vertex v : s) total += weights_[v];
    return total;
  }
  Weight total_weight() const { return weight(vertices()); }
  const std::vector<Weight>& weights() const { return weights_; }

  VertexSet positive_vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < size(); ++v)
      if (weights_[v] > 0) out.insert(v);
    return out;
  }

  int edge_count() const {
    int twice = 0;
    for (const auto& n : adjacency_) twice += n.size();
    return twice / 2;
  }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  static int check_count(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
    return n;
  }
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  }

  std::vector<VertexSet> adjacency_;
  std::vector<Weight> weights_;
};

// Vertices reachable from `from` by paths that stay inside `within`.
// Sources outside `within` still act as starting points.
inline VertexSet reachable(const WeightedGraph& g, VertexSet from, VertexSet within) {
  VertexSet seen = from;
  VertexSet frontier = from;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Components of G[S], ordered by their lowest vertex.
inline std::vector<VertexSet> components(const WeightedGraph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = reachable(g, VertexSet::single(rest.front()), s);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

inline bool is_connected(const WeightedGraph& g, VertexSet s) {
  return s.empty() || reachable(g, VertexSet::single(s.front()), s) == s;
}
inline bool is_connected(const WeightedGraph& g) { return is_connected(g, g.vertices()); }

// Heaviest component of G[S]; ties go to the component with the lowest vertex.
inline VertexSet heaviest_component(const WeightedGraph& g, VertexSet s) {
  VertexSet best;
  Weight best_weight(-1);
  for (VertexSet c : components(g, s)) {
    Weight w = g.weight(c);
    if (w > best_weight) {
      best_weight = w;
      best = c;
    }
  }
  return best;
}

// w*(G[S]) = w(S) minus the heaviest component weight; zero for empty or connected S.
inline Weight w_star(const WeightedGraph& g, VertexSet s) {
  Weight total(0), heaviest(0);
  for (VertexSet c : components(g, s)) {
    Weight w = g.weight(c);
    total += w;
    heaviest = std::max(heaviest, w);
  }
  return total - heaviest;
}

// A graph on a subset of another graph's vertices, renumbered 0..k-1 in
// increasing order of the original ids.
struct SubsetGraph {
  WeightedGraph graph;
  std::vector<Vertex> original;  // local id -> original id

  Vertex local_id(Vertex original_id) const {
    auto it = std::lower_bound(original.begin(), original.end(), original_id);
    if (it == original.end() || *it != original_id)
      throw std::out_of_range("vertex " + std::to_string(original_id) + " is not in the subset");
    return static_cast<Vertex>(it - original.begin());
  }
  VertexSet to_original(VertexSet local) const {
    VertexSet out;
    for (Vertex v : local) out.insert(original[v]);
    return out;
  }
  VertexSet to_local(VertexSet orig) const {
    VertexSet out;
    for (Vertex v : orig) out.insert(local_id(v));
    return out;
  }
};

inline SubsetGraph induced_subgraph(const WeightedGraph& g, VertexSet s) {
  SubsetGraph out{WeightedGraph(s.size()), s.to_vector()};
  for (Vertex i = 0; i < out.graph.size(); ++i) {
    out.graph.set_weight(i, g.weight(out.original[i]));
    for (Vertex j = i + 1; j < out.graph.size(); ++j)
      if (g.adjacent(out.original[i], out.original[j])) out.graph.add_edge(i, j);
  }
  return out;
}

// The reduction of G to S: vertex set S, uv an edge iff some path of G joins
// u and v with all interior vertices outside S. Weights are restricted to S.
inline SubsetGraph reduction(const WeightedGraph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("reduction to the empty set");
  SubsetGraph out{WeightedGraph(s.size()), s.to_vector()};
  for (Vertex i = 0; i < out.graph.size(); ++i) out.graph.set_weight(i, g.weight(out.original[i]));
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) out.graph.add_edge(out.local_id(u), out.local_id(v));
  for (VertexSet comp : components(g, g.vertices() - s)) {
    std::vector<Vertex> attach = (g.neighborhood(comp) & s).to_vector();
    for (std::size_t a = 0; a < attach.size(); ++a)
      for (std::size_t b = a + 1; b < attach.size(); ++b)
        out.graph.add_edge(out.local_id(attach[a]), out.local_id(attach[b]));
  }
  return out;
}

// The quotient G / partition. Block i of the partition becomes vertex i.
struct QuotientGraph {
  WeightedGraph graph;
  std::vector<VertexSet> blocks;
  std::vector<int> block_of;  // original vertex -> block index
};

using BlockWeightRule = std::function<Weight(VertexSet block)>;

inline QuotientGraph quotient(const WeightedGraph& g, std::vector<VertexSet> partition,
                              const BlockWeightRule& rule) {
  QuotientGraph out{WeightedGraph(static_cast<int>(partition.size())), std::move(partition),
                    std::vector<int>(g.size(), -1)};
  for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b) {
    VertexSet block = out.blocks[b];
    if (block.empty()) throw std::invalid_argument("quotient block " + std::to_string(b) + " is empty");
    if (!block.is_subset_of(g.vertices()))
      throw std::invalid_argument("quotient block " + std::to_string(b) + " has foreign vertices");
    if (!is_connected(g, block))
      throw std::invalid_argument("quotient block " + std::to_string(b) + " is not connected");
    for (Vertex v : block) {
      if (out.block_of[v] != -1)
        throw std::invalid_argument("quotient blocks overlap at vertex " + std::to_string(v));
      out.block_of[v] = b;
    }
    out.graph.set_weight(b, rule(block));
  }
  for (Vertex v = 0; v < g.size(); ++v)
    if (out.block_of[v] == -1)
      throw std::invalid_argument("quotient blocks miss vertex " + std::to_string(v));
  for (auto [u, v] : g.edges())
    if (out.block_of[u] != out.block_of[v]) out.graph.add_edge(out.block_of[u], out.block_of[v]);
  return out;
}

inline bool is_independent(const WeightedGraph& g, VertexSet s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

// Pairwise distance at least 3, i.e. pairwise disjoint closed neighborhoods.
inline bool is_sparse(const WeightedGraph& g, VertexSet s) {
  VertexSet covered;
  for (Vertex v : s) {
    VertexSet ball = g.closed_neighbors(v);
    if (ball.intersects(covered)) return false;
    covered |= ball;
  }
  return true;
}

// A cyclic sequence of distinct vertices. Lengths 1 and 2 are the degenerate
// cycles (a single vertex; two vertices joined by an edge).
struct CycleCertificate {
  std::vector<Vertex> order;

  int length() const { return static_cast<int>(order.size()); }
  VertexSet vertex_set() const { return VertexSet::of(order); }
  Vertex next(int i) const { return order[(i + 1) % order.size()]; }
  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

// Whether `cycle` is a cycle subgraph of g (the consecutive pairs are edges).
inline bool is_cycle_in(const WeightedGraph& g, const CycleCertificate& cycle) {
  if (cycle.order.empty()) return false;
  VertexSet seen;
  for (Vertex v : cycle.order) {
    if (v < 0 || v >= g.size() || seen.contains(v)) return false;
    seen.insert(v);
  }
  if (cycle.length() == 1) return true;
  if (cycle.length() == 2) return g.adjacent(cycle.order[0], cycle.order[1]);
  for (int i = 0; i < cycle.length(); ++i)
    if (!g.adjacent(cycle.order[i], cycle.next(i))) return false;
  return true;
}

// Whether the whole graph is a cycle under the degenerate convention; if so
// returns its order starting at vertex 0 and continuing to the smaller neighbor.
inline std::optional<CycleCertificate> as_cycle(const WeightedGraph& g) {
  const int n = g.size();
  if (n == 0) return std::nullopt;
  if (n == 1) return CycleCertificate{{0}};
  if (n == 2) {
    if (!g.adjacent(0, 1)) return std::nullopt;
    return CycleCertificate{{0, 1}};
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  CycleCertificate out;
  Vertex prev = -1, cur = 0;
  do {
    out.order.push_back(cur);
    VertexSet next = g.neighbors(cur);
    if (prev >= 0) next.erase(prev);
    prev = cur;
    cur = next.front();
  } while (cur != 0 && out.length() <= n);
  if (out.length() != n) return std::nullopt;
  return out;
}

// Returns a cyclic order of S iff the reduction of G to S is a cycle.
inline std::optional<CycleCertificate> cycle_reduction_check(const WeightedGraph& g, VertexSet s) {
  SubsetGraph red = reduction(g, s);
  auto local = as_cycle(red.graph);
  if (!local) return std::nullopt;
  for (Vertex& v : local->order) v = red.original[v];
  return local;
}

// The cycle itself as a graph on g's vertex ids (vertices off the cycle are
// left out of every component computation by the caller).
inline WeightedGraph cycle_subgraph(const WeightedGraph& g, const CycleCertificate& cycle) {
  WeightedGraph h(g.weights());
  if (cycle.length() >= 2) {
    for (int i = 0; i < cycle.length(); ++i) {
      Vertex a = cycle.order[i], b = cycle.next(i);
      if (a != b) h.add_edge(a, b);
    }
  }
  return h;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_GRAPH_HPP_
