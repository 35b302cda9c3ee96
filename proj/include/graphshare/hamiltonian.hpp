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

// Structural lemmas for a graph G with a Hamiltonian cycle H:
//
//   hamil_separator: a connected S with w*(H - S) >= w(G)/5, or a set S whose
//                    reduction is a cycle with w(S) >= w(G)/5.
//   hamil_grow:      for a connected A, a connected S containing A with either
//                    w*(G - S) or w(N(S)) at least w*(H - A)/5.

#ifndef GRAPHSHARE_HAMILTONIAN_HPP_
#define GRAPHSHARE_HAMILTONIAN_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/constants.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/oriented_paths.hpp"
#include "graphshare/outcome.hpp"

namespace graphshare {

namespace detail {

// The cycle H with positions 0..L-1 in its fixed orientation.
struct CycleFrame {
  const CycleCertificate* cycle;
  std::vector<int> pos;  // vertex -> position, -1 if off the cycle

  CycleFrame(const WeightedGraph& g, const CycleCertificate& h) : cycle(&h), pos(g.size(), -1) {
    for (int i = 0; i < h.length(); ++i) pos[h.order[i]] = i;
  }
  int length() const { return cycle->length(); }
  Vertex at(int p) const { return cycle->order[((p % length()) + length()) % length()]; }
  // Forward distance from a to b along H (0 when a == b).
  int dist(Vertex a, Vertex b) const { return ((pos[b] - pos[a]) % length() + length()) % length(); }
  // (a, b)_H: vertices strictly between a and b going forward; all but a when a == b.
  VertexSet open_interval(Vertex a, Vertex b) const {
    VertexSet out;
    int steps = a == b ? length() : dist(a, b);
    for (int k = 1; k < steps; ++k) out.insert(at(pos[a] + k));
    return out;
  }
};

struct Arc {
  Vertex tail;
  Vertex head;
};

inline VertexSet uncovered(const CycleFrame& f, const std::vector<Arc>& arcs) {
  VertexSet covered;
  for (const Arc& a : arcs) covered |= f.open_interval(a.tail, a.head);
  return f.cycle->vertex_set() - covered;
}

// Splits H at the uncovered vertices u_0..u_{k-1} (in cycle order), runs the
// two-paths construction on each piece and glues the pieces into two cycles.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> glue_cycles(const CycleFrame& f,
                                                                      const std::vector<Arc>& arcs,
                                                                      VertexSet u_set) {
  std::vector<Vertex> us;
  for (int p = 0; p < f.length(); ++p)
    if (u_set.contains(f.at(p))) us.push_back(f.at(p));
  const int k = static_cast<int>(us.size());
  std::vector<int> seg_len(k);
  for (int i = 0; i < k; ++i) seg_len[i] = k == 1 ? f.length() : f.dist(us[i], us[(i + 1) % k]);
  std::vector<OrientedPathGraph> pieces;
  for (int i = 0; i < k; ++i) pieces.emplace_back(seg_len[i] + 1);

  // Segment i owns tails in [u_i, u_{i+1}).
  auto segment_of = [&](Vertex x) {
    int best = -1, best_dist = f.length() + 1;
    for (int i = 0; i < k; ++i) {
      int d = f.dist(us[i], x);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    return best;
  };
  for (const Arc& a : arcs) {
    int i = segment_of(a.tail);
    int from = f.dist(us[i], a.tail);
    int to = f.dist(us[i], a.head);
    if (to == 0) to = seg_len[i];
    if (to <= from || to > seg_len[i]) throw std::logic_error("arc leaves its segment");
    pieces[i].add_arc(from, to);
  }

  std::vector<Vertex> c0, c1;
  for (int i = 0; i < k; ++i) {
    TwoPaths tp = oriented_two_paths(pieces[i]);
    for (std::size_t j = 0; j + 1 < tp.q0.size(); ++j) c0.push_back(f.at(f.pos[us[i]] + tp.q0[j]));
    for (std::size_t j = 0; j + 1 < tp.q1.size(); ++j) c1.push_back(f.at(f.pos[us[i]] + tp.q1[j]));
  }
  return {c0, c1};
}

}  // namespace detail

// Precondition: h is a Hamiltonian cycle of g (degenerate lengths allowed).
// Throws std::logic_error if an invariant promised by the construction fails.
inline StructuralOutcome hamil_separator(const WeightedGraph& g, const CycleCertificate& h) {
  if (h.length() != g.size() || !is_cycle_in(g, h))
    throw std::invalid_argument("hamil_separator needs a Hamiltonian cycle of the graph");
  const Weight total = g.total_weight();
  const Weight& c = constants::kHamilSeparator;
  const WeightedGraph hg = cycle_subgraph(g, h);
  const VertexSet all = g.vertices();

  StructuralOutcome out;
  out.constant = c;
  out.reference = total;

  if (g.size() <= 3) {
    out.tag = OutcomeTag::kCycleSet;
    out.set = all;
    out.cycle = h;
    out.achieved = total;
    return out;
  }

  // A balanced edge is already a two-vertex separator.
  std::optional<Edge> best_edge;
  Weight best_residual(0);
  for (const Edge& e : g.edges()) {
    Weight r = w_star(hg, all - VertexSet{e.first, e.second});
    if (!best_edge || r > best_residual) {
      best_edge = e;
      best_residual = r;
    }
  }
  if (best_residual >= c * total) {
    out.tag = OutcomeTag::kConnectedSeparator;
    out.set = VertexSet{best_edge->first, best_edge->second};
    out.achieved = best_residual;
    return out;
  }

  // Orient H along its order and every chord toward its lighter side.
  detail::CycleFrame frame(g, h);
  std::vector<detail::Arc> arcs;
  for (auto [a, b] : g.edges()) {
    if (frame.dist(a, b) == 1) {
      arcs.push_back({a, b});
    } else if (frame.dist(b, a) == 1) {
      arcs.push_back({b, a});
    } else {
      Weight ab = g.weight(frame.open_interval(a, b));
      Weight ba = g.weight(frame.open_interval(b, a));
      bool forward = ab < ba || (ab == ba && frame.pos[a] < frame.pos[b]);
      detail::Arc arc = forward ? detail::Arc{a, b} : detail::Arc{b, a};
      if (!(g.weight(frame.open_interval(arc.tail, arc.head)) < c * total))
        throw std::logic_error("oriented chord covers too much weight");
      arcs.push_back(arc);
    }
  }

  VertexSet u_set = detail::uncovered(frame, arcs);
  if (!u_set.empty() && g.weight(u_set) >= c * total) {
    out.tag = OutcomeTag::kCycleSet;
    out.set = u_set;
    CycleCertificate cert;
    for (int p = 0; p < frame.length(); ++p)
      if (u_set.contains(frame.at(p))) cert.order.push_back(frame.at(p));
    out.cycle = cert;
    out.achieved = g.weight(u_set);
    return out;
  }
  if (u_set.empty()) {
    // Redirect every arc covering v so that it ends at v.
    const Vertex v = 0;
    for (detail::Arc& a : arcs)
      if (frame.open_interval(a.tail, a.head).contains(v)) a.head = v;
    u_set = detail::uncovered(frame, arcs);
    if (!u_set.contains(v) || !(g.weight(u_set) < c * total))
      throw std::logic_error("redirected graph leaves a heavy uncovered set");
  }

  auto [c0, c1] = detail::glue_cycles(frame, arcs, u_set);
  VertexSet s0 = VertexSet::of(c0), s1 = VertexSet::of(c1);
  if ((s0 & s1) != u_set) throw std::logic_error("glued cycles do not meet exactly in the uncovered set");
  if (!is_connected(g, s0) || !is_connected(g, s1)) throw std::logic_error("glued cycle is not connected in G");
  VertexSet s = g.weight(s0) <= g.weight(s1) ? s0 : s1;
  out.tag = OutcomeTag::kConnectedSeparator;
  out.set = s;
  out.achieved = w_star(hg, all - s);
  return out;
}

// Block decomposition used by hamil_grow, exposed for inspection.
struct GrowBlocks {
  std::vector<Vertex> path;            // P: starts after the chosen vertex of A, ends at it
  std::vector<VertexSet> blocks;       // B_1..B_n
  std::vector<Vertex> first;           // f_i
  std::vector<Vertex> stop;            // u_i
  std::vector<int> family;             // 0 or 1
};

inline GrowBlocks grow_blocks(const WeightedGraph& g, const CycleCertificate& h, VertexSet a) {
  GrowBlocks out;
  const Vertex anchor = a.front();
  int start = 0;
  while (h.order[start] != anchor) ++start;
  for (int k = 1; k <= h.length(); ++k) out.path.push_back(h.order[(start + k) % h.length()]);

  VertexSet done = a;
  int p = 0;
  const int len = static_cast<int>(out.path.size());
  while (done != g.vertices()) {
    while (done.contains(out.path[p])) ++p;
    const Vertex f = out.path[p];
    const VertexSet reach = g.closed_neighborhood(done);
    int q = p + 1;
    while (q < len && !reach.contains(out.path[q])) ++q;
    if (q == len) throw std::logic_error("block has no end");
    VertexSet block;
    for (int x = p; x < q; ++x) block.insert(out.path[x]);
    out.blocks.push_back(block);
    out.first.push_back(f);
    out.stop.push_back(out.path[q]);
    done |= block;
  }

  const VertexSet near_a = g.closed_neighborhood(a);
  VertexSet family1;
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    const Vertex u = out.stop[i];
    bool zero = near_a.contains(u) || g.neighbors(u).intersects(family1);
    out.family.push_back(zero ? 0 : 1);
    if (!zero) family1 |= out.blocks[i];
  }
  return out;
}

// Precondition: h Hamiltonian in g, a non-empty and connected.
inline StructuralOutcome hamil_grow(const WeightedGraph& g, const CycleCertificate& h, VertexSet a) {
  if (h.length() != g.size() || !is_cycle_in(g, h))
    throw std::invalid_argument("hamil_grow needs a Hamiltonian cycle of the graph");
  if (a.empty() || !a.is_subset_of(g.vertices()) || !is_connected(g, a))
    throw std::invalid_argument("hamil_grow needs a non-empty connected set");
  const Weight& c = constants::kHamilGrow;
  const WeightedGraph hg = cycle_subgraph(g, h);
  const VertexSet all = g.vertices();
  const Weight residual = w_star(hg, all - a);

  StructuralOutcome out;
  out.constant = c;
  out.reference = residual;
  auto separator = [&](VertexSet s) {
    out.tag = OutcomeTag::kConnectedSeparator;
    out.set = s;
    out.achieved = w_star(g, all - s);
    return out;
  };

  if (components(hg, all - a).size() <= 1) return separator(a);

  const GrowBlocks gb = grow_blocks(g, h, a);
  VertexSet a_prime[2] = {a, a}, f_set[2];
  for (std::size_t i = 0; i < gb.blocks.size(); ++i) {
    a_prime[1 - gb.family[i]] |= gb.blocks[i];
    f_set[gb.family[i]].insert(gb.first[i]);
  }
  for (int k = 0; k < 2; ++k) {
    if (g.weight(f_set[k]) >= c * residual) {
      out.tag = OutcomeTag::kNeighborhoodSet;
      out.set = a_prime[k];
      out.achieved = g.weight(g.neighborhood(a_prime[k]));
      return out;
    }
  }
  for (int k = 0; k < 2; ++k) {
    VertexSet s = a_prime[k] | f_set[k];
    if (w_star(g, all - s) >= c * residual) return separator(s);
  }

  // Heaviest tail B_i - {f_i} of each family; they lie in different
  // components of H - A and their removal leaves G connected.
  VertexSet tail[2];
  Weight tail_weight[2] = {Weight(-1), Weight(-1)};
  for (std::size_t i = 0; i < gb.blocks.size(); ++i) {
    int k = gb.family[i];
    VertexSet t = gb.blocks[i] - VertexSet::single(gb.first[i]);
    if (g.weight(t) > tail_weight[k]) {
      tail_weight[k] = g.weight(t);
      tail[k] = t;
    }
  }
  return separator(all - (tail[0] | tail[1]));
}

}  // namespace graphshare

#endif  // GRAPHSHARE_HAMILTONIAN_HPP_
