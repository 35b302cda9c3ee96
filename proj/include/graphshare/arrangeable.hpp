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

// Orderings of V with a measured arrangeability, and the greedy coloring
// along such an ordering that separates every v from the earlier vertices
// of N_pi^-(N[v]).

#ifndef GRAPHSHARE_ARRANGEABLE_HPP_
#define GRAPHSHARE_ARRANGEABLE_HPP_

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "graphshare/graph.hpp"

namespace graphshare {

struct OrderedGraph {
  std::vector<Vertex> pi;
  std::vector<int> position;  // vertex -> index in pi
  int measured_p = 0;

  VertexSet before(Vertex v) const {
    VertexSet out;
    for (int i = 0; i < position[v]; ++i) out.insert(pi[i]);
    return out;
  }
  VertexSet after(Vertex v) const {
    VertexSet out;
    for (int i = position[v] + 1; i < static_cast<int>(pi.size()); ++i) out.insert(pi[i]);
    return out;
  }
};

// N_pi^-(S): every neighbor of some x in S that precedes x.
inline VertexSet back_neighbors(const WeightedGraph& g, const OrderedGraph& og, VertexSet s) {
  VertexSet out;
  for (Vertex x : s) out |= g.neighbors(x) & og.before(x);
  return out;
}

// |N_pi^-(N_pi^+(v)) & pi^-(v)|.
inline int back_measure(const WeightedGraph& g, const OrderedGraph& og, Vertex v) {
  const VertexSet forward = g.neighbors(v) & og.after(v);
  return (back_neighbors(g, og, forward) & og.before(v)).size();
}

inline OrderedGraph make_ordered(const WeightedGraph& g, std::vector<Vertex> pi) {
  OrderedGraph og;
  og.position.assign(g.size(), -1);
  for (int i = 0; i < static_cast<int>(pi.size()); ++i) {
    if (pi[i] < 0 || pi[i] >= g.size() || og.position[pi[i]] >= 0)
      throw std::invalid_argument("ordering is not a permutation of the vertices");
    og.position[pi[i]] = i;
  }
  if (static_cast<int>(pi.size()) != g.size()) throw std::invalid_argument("ordering misses vertices");
  og.pi = std::move(pi);
  for (Vertex v : g.vertices()) og.measured_p = std::max(og.measured_p, back_measure(g, og, v));
  return og;
}

// Builds pi from the back. With R the vertices not yet placed, putting v
// last among R fixes its measure at |N(N(v) - R) & (R - v)|. The vertex
// minimizing it is placed; ties go to fewer neighbors in R, then lower
// degree, then lowest id. This peels trees leaf by leaf down to measure 0.
inline OrderedGraph arrangeable_ordering(const WeightedGraph& g) {
  VertexSet rest = g.vertices();
  std::vector<Vertex> reversed;
  while (!rest.empty()) {
    Vertex best = -1;
    std::tuple<int, int, int> best_key;
    for (Vertex v : rest) {
      const VertexSet others = rest - VertexSet::single(v);
      const std::tuple<int, int, int> key{(g.neighborhood(g.neighbors(v) - rest) & others).size(),
                                          (g.neighbors(v) & rest).size(), g.degree(v)};
      if (best < 0 || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    reversed.push_back(best);
    rest.erase(best);
  }
  return make_ordered(g, std::vector<Vertex>(reversed.rbegin(), reversed.rend()));
}

inline int observation_bound_1(int p) { return p + 1; }
inline int observation_bound_2(int p) { return p * p + 4 * p + 2; }

// |N_pi^-(N[v]) & pi^-(v)|.
inline int closed_back_measure(const WeightedGraph& g, const OrderedGraph& og, Vertex v) {
  return (back_neighbors(g, og, g.closed_neighbors(v)) & og.before(v)).size();
}

inline bool observation_check(const WeightedGraph& g, const OrderedGraph& og) {
  for (Vertex v : g.vertices()) {
    if ((g.neighbors(v) & og.before(v)).size() > observation_bound_1(og.measured_p)) return false;
    if (closed_back_measure(g, og, v) > observation_bound_2(og.measured_p)) return false;
  }
  return true;
}

struct Coloring {
  std::vector<int> color;  // vertex -> color, 0-based
  int count = 0;

  VertexSet color_class(int c) const {
    VertexSet out;
    for (Vertex v = 0; v < static_cast<int>(color.size()); ++v)
      if (color[v] == c) out.insert(v);
    return out;
  }
};

// Greedy along pi: v takes the least color unused on N_pi^-(N[v]) & pi^-(v).
inline Coloring distinguishing_coloring(const WeightedGraph& g, const OrderedGraph& og) {
  Coloring out;
  out.color.assign(g.size(), -1);
  for (Vertex v : og.pi) {
    std::vector<bool> used(out.count + 1, false);
    for (Vertex u : back_neighbors(g, og, g.closed_neighbors(v)) & og.before(v)) used[out.color[u]] = true;
    int c = 0;
    while (used[c]) ++c;
    out.color[v] = c;
    out.count = std::max(out.count, c + 1);
  }
  return out;
}

// The color class of maximum weight, lowest color on ties.
inline VertexSet heaviest_class(const WeightedGraph& g, const Coloring& coloring) {
  VertexSet best;
  Weight best_weight(-1);
  for (int c = 0; c < coloring.count; ++c) {
    VertexSet cls = coloring.color_class(c);
    if (g.weight(cls) > best_weight) {
      best = cls;
      best_weight = g.weight(cls);
    }
  }
  return best;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_ARRANGEABLE_HPP_
