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

// Legal orderings of V - I for an independent set I, their blocks
// B_sigma(v) = (N(v) & I) - N(sigma^-(v)), the representatives u_sigma(v)
// and the local search over the moves sigma^v.

#ifndef GRAPHSHARE_LEGAL_ORDERING_HPP_
#define GRAPHSHARE_LEGAL_ORDERING_HPP_

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphshare/graph.hpp"

namespace graphshare {

struct LegalOrderingContext {
  VertexSet independent;                // I
  std::vector<Vertex> sigma;            // an ordering of V - I
  std::vector<VertexSet> blocks;        // vertex -> B_sigma(v), empty on I
  std::vector<Vertex> representative;   // vertex -> u_sigma(v), or -1
  VertexSet u_set;                      // U_sigma

  int index_of(Vertex v) const {
    auto it = std::find(sigma.begin(), sigma.end(), v);
    return it == sigma.end() ? -1 : static_cast<int>(it - sigma.begin());
  }
};

// Fixed priority shared by every ordering: heavier first, then lower id.
inline bool outranks(const WeightedGraph& g, Vertex a, Vertex b) {
  return g.weight(a) > g.weight(b) || (g.weight(a) == g.weight(b) && a < b);
}

inline bool is_legal_ordering(const WeightedGraph& g, VertexSet independent, const std::vector<Vertex>& sigma) {
  if (!is_independent(g, independent)) return false;
  VertexSet seen;
  for (Vertex v : sigma) {
    if (v < 0 || v >= g.size() || independent.contains(v) || seen.contains(v)) return false;
    if (!seen.empty()) {
      const VertexSet reach = g.neighborhood(seen) | g.neighborhood(g.neighborhood(seen) & independent);
      if (!reach.contains(v)) return false;
    }
    seen.insert(v);
  }
  return seen == g.vertices() - independent;
}

// Computes B_sigma, u_sigma and U_sigma. Throws unless sigma is legal.
inline LegalOrderingContext make_context(const WeightedGraph& g, VertexSet independent, std::vector<Vertex> sigma) {
  if (!is_legal_ordering(g, independent, sigma)) throw std::invalid_argument("ordering is not legal for I");
  LegalOrderingContext ctx;
  ctx.independent = independent;
  ctx.sigma = std::move(sigma);
  ctx.blocks.assign(g.size(), VertexSet{});
  ctx.representative.assign(g.size(), -1);
  VertexSet covered;
  for (Vertex v : ctx.sigma) {
    const VertexSet b = (g.neighbors(v) & independent) - covered;
    covered |= b;
    ctx.blocks[v] = b;
    for (Vertex u : b)
      if (ctx.representative[v] < 0 || outranks(g, u, ctx.representative[v])) ctx.representative[v] = u;
    if (ctx.representative[v] >= 0) ctx.u_set.insert(ctx.representative[v]);
  }
  return ctx;
}

// Breadth-first growth from the lowest vertex of V - I. A vertex is queued
// when it becomes adjacent to the prefix, directly or through I.
inline LegalOrderingContext build_legal_ordering(const WeightedGraph& g, VertexSet independent) {
  if (g.size() < 2) throw std::invalid_argument("legal orderings need at least two vertices");
  if (!is_connected(g)) throw std::invalid_argument("legal orderings need a connected graph");
  if (!is_independent(g, independent)) throw std::invalid_argument("I is not independent");
  const VertexSet rest = g.vertices() - independent;
  std::vector<Vertex> sigma;
  VertexSet queued = VertexSet::single(rest.front());
  std::deque<Vertex> queue{rest.front()};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    sigma.push_back(v);
    VertexSet next = g.neighbors(v) & rest;
    for (Vertex u : g.neighbors(v) & independent) next |= g.neighbors(u);
    for (Vertex x : next - queued) {
      queued.insert(x);
      queue.push_back(x);
    }
  }
  if (queued != rest) throw std::logic_error("no legal extension of the ordering");
  return make_context(g, independent, std::move(sigma));
}

// V*_sigma: vertices of V - I with at least two neighbors in U_sigma.
inline VertexSet v_star(const WeightedGraph& g, const LegalOrderingContext& ctx) {
  VertexSet out;
  for (Vertex v : ctx.sigma)
    if ((g.neighbors(v) & ctx.u_set).size() >= 2) out.insert(v);
  return out;
}

// q_sigma^v: the first vertex whose block meets N(v), or -1.
inline Vertex first_block_hit(const WeightedGraph& g, const LegalOrderingContext& ctx, Vertex v) {
  for (Vertex q : ctx.sigma)
    if (g.neighbors(v).intersects(ctx.blocks[q])) return q;
  return -1;
}

// sigma^v: v moved to the first position after q_sigma^v.
inline std::vector<Vertex> moved_ordering(const WeightedGraph& g, const LegalOrderingContext& ctx, Vertex v) {
  const Vertex q = first_block_hit(g, ctx, v);
  if (q < 0 || ctx.index_of(q) >= ctx.index_of(v)) throw std::invalid_argument("v has no earlier block to join");
  std::vector<Vertex> out;
  for (Vertex x : ctx.sigma) {
    if (x == v) continue;
    out.push_back(x);
    if (x == q) out.push_back(v);
  }
  return out;
}

struct ImprovementTrace {
  std::vector<Vertex> moved;     // v of every applied sigma^v move
  std::vector<Weight> u_weight;  // w(U_sigma) before the first move and after each one
};

// Applies improving sigma^v moves (lowest improving v first) until
// none of V*_sigma lowers w(U_sigma).
inline LegalOrderingContext improve_ordering(const WeightedGraph& g, LegalOrderingContext ctx,
                                             ImprovementTrace* trace = nullptr) {
  if (trace) trace->u_weight.push_back(g.weight(ctx.u_set));
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v : v_star(g, ctx)) {
      LegalOrderingContext next = make_context(g, ctx.independent, moved_ordering(g, ctx, v));
      if (g.weight(next.u_set) < g.weight(ctx.u_set)) {
        ctx = std::move(next);
        if (trace) {
          trace->moved.push_back(v);
          trace->u_weight.push_back(g.weight(ctx.u_set));
        }
        improved = true;
        break;
      }
    }
  }
  return ctx;
}

// U*_sigma = U_sigma minus every Y_sigma^v = U_sigma - U_{sigma^v}, v in V*_sigma.
inline VertexSet u_star(const WeightedGraph& g, const LegalOrderingContext& ctx) {
  VertexSet out = ctx.u_set;
  for (Vertex v : v_star(g, ctx)) {
    const LegalOrderingContext moved = make_context(g, ctx.independent, moved_ordering(g, ctx, v));
    out -= ctx.u_set - moved.u_set;
  }
  return out;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_LEGAL_ORDERING_HPP_
