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

// Decompositions of general connected graphs:
//
//   full_decomposition:   connected separator, connected set with a heavy
//                         neighborhood, or cycle-reduction set, each >= w(G)/52.
//   indsubdiv:            from a heavy neighborhood N(A), a separator that
//                         splits N(A), one heavy vertex of N(A), or a
//                         subdivision of an n-vertex m-edge graph on N(A).
//   subdiv_decomposition: the two above chained; a K_n witness surfaces only
//                         when G really contains a subdivision of K_n.

#ifndef GRAPHSHARE_DECOMPOSE_HPP_
#define GRAPHSHARE_DECOMPOSE_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/constants.hpp"
#include "graphshare/dfs_cycle.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/hamiltonian.hpp"
#include "graphshare/outcome.hpp"
#include "graphshare/subdivision.hpp"

namespace graphshare {

inline StructuralOutcome full_decomposition(const WeightedGraph& g) {
  if (g.size() == 0 || !is_connected(g)) throw std::invalid_argument("full_decomposition needs a connected graph");
  const Weight total = g.total_weight();
  const Weight& c = constants::kFull;
  const VertexSet all = g.vertices();

  StructuralOutcome out;
  out.constant = c;
  out.reference = total;

  if (g.size() == 1) {
    out.tag = OutcomeTag::kCycleSet;
    out.set = all;
    out.cycle = CycleCertificate{{0}};
    out.achieved = total;
    return out;
  }

  const CycleCertificate h = dfs_cycle(g);
  const VertexSet on_h = h.vertex_set();
  if (g.weight(on_h) <= (Weight(1, 2) - c) * total) {
    out.tag = OutcomeTag::kConnectedSeparator;
    out.set = on_h;
    out.achieved = w_star(g, all - on_h);
    return out;
  }

  const SubsetGraph red = reduction(g, on_h);
  CycleCertificate local_h;
  for (Vertex v : h.order) local_h.order.push_back(red.local_id(v));

  StructuralOutcome inner = hamil_separator(red.graph, local_h);
  if (inner.tag == OutcomeTag::kCycleSet) {
    out.tag = OutcomeTag::kCycleSet;
    out.set = red.to_original(inner.set);
    CycleCertificate cert;
    for (Vertex v : inner.cycle->order) cert.order.push_back(red.original[v]);
    out.cycle = cert;
    out.achieved = g.weight(out.set);
    return out;
  }
  inner = hamil_grow(red.graph, local_h, inner.set);

  // Lift: everything reachable from S' without touching another vertex of H.
  const VertexSet s = reachable(g, red.to_original(inner.set), all - on_h);
  out.set = s;
  if (inner.tag == OutcomeTag::kNeighborhoodSet) {
    out.tag = OutcomeTag::kNeighborhoodSet;
    out.achieved = g.weight(g.neighborhood(s));
  } else {
    out.tag = OutcomeTag::kConnectedSeparator;
    out.achieved = w_star(g, all - s);
  }
  return out;
}

enum class IndSubdivKind { kSeparator, kHeavyVertex, kWitness };

inline const char* to_string(IndSubdivKind k) {
  switch (k) {
    case IndSubdivKind::kSeparator: return "Separator";
    case IndSubdivKind::kHeavyVertex: return "HeavyVertex";
    case IndSubdivKind::kWitness: return "SubdivisionWitness";
  }
  return "?";
}

struct IndSubdivResult {
  IndSubdivKind kind = IndSubdivKind::kSeparator;
  VertexSet set;         // S for a separator
  Vertex vertex = -1;    // the heavy vertex
  SubdivisionWitness witness;
  Weight achieved{0};    // w(N(A) - S) - max_C w(C & N(A)), or w(v)
  Weight constant{0};    // c_{n,m}
  Weight reference{0};   // w(N(A))

  bool meets_bound() const { return kind == IndSubdivKind::kWitness || achieved >= constant * reference; }
};

// w(N(A) - S) - max over components C of G - S of w(C & N(A)).
inline Weight split_measure(const WeightedGraph& g, VertexSet na, VertexSet s) {
  Weight heaviest(0);
  for (VertexSet comp : components(g, g.vertices() - s)) heaviest = std::max(heaviest, g.weight(comp & na));
  return g.weight(na - s) - heaviest;
}

namespace detail {

// Shortest path from u to v inside `within` (which contains both).
inline std::vector<Vertex> bfs_path(const WeightedGraph& g, Vertex u, Vertex v, VertexSet within) {
  std::vector<Vertex> prev(g.size(), -1);
  std::deque<Vertex> queue{u};
  VertexSet seen = VertexSet::single(u);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (Vertex y : (g.neighbors(x) & within) - seen) {
      seen.insert(y);
      prev[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen.contains(v)) throw std::logic_error("no connecting path for the extra pattern edge");
  std::vector<Vertex> path;
  for (Vertex x = v; x != u; x = prev[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

// Requires G connected, A non-empty, connected and proper, n >= 1 and
// 0 <= m <= C(n,2).
inline IndSubdivResult indsubdiv(const WeightedGraph& g, VertexSet a, int n, std::int64_t m) {
  if (n < 1) throw std::invalid_argument("indsubdiv needs n >= 1");
  if (m < 0 || m > constants::choose2(n))
    throw std::invalid_argument("indsubdiv needs 0 <= m <= C(n,2)");
  if (!is_connected(g)) throw std::invalid_argument("indsubdiv needs a connected graph");
  if (a.empty() || a == g.vertices() || !a.is_subset_of(g.vertices()) || !is_connected(g, a))
    throw std::invalid_argument("indsubdiv needs a connected non-empty proper subset");

  const VertexSet na = g.neighborhood(a);
  IndSubdivResult out;
  out.constant = constants::c_nm(n, m);
  out.reference = g.weight(na);

  if (n == 1) {
    out.kind = IndSubdivKind::kWitness;
    out.witness.branch = {na.front()};
    return out;
  }
  if (m == 0) {
    if (na.size() <= n - 1) {
      Vertex best = -1;
      for (Vertex v : na)
        if (best < 0 || g.weight(v) > g.weight(best)) best = v;
      out.kind = IndSubdivKind::kHeavyVertex;
      out.vertex = best;
      out.achieved = g.weight(best);
    } else {
      out.kind = IndSubdivKind::kWitness;
      auto ids = na.to_vector();
      out.witness.branch.assign(ids.begin(), ids.begin() + n);
    }
    return out;
  }

  const Weight& c = out.constant;
  const Weight beta = constants::beta_nm(n, m);
  const Weight w_na = out.reference;
  auto separator = [&](VertexSet s) {
    out.kind = IndSubdivKind::kSeparator;
    out.set = s;
    out.achieved = split_measure(g, na, s);
    return out;
  };

  VertexSet heavy_comp;
  for (VertexSet comp : components(g, g.vertices() - a))
    if (g.weight(comp & na) > (Weight(1) - c) * w_na) heavy_comp = comp;
  if (heavy_comp.empty()) return separator(a);

  // BFS layers of the reduction of G[C] to B, from the lowest vertex of B.
  const VertexSet b = heavy_comp & na;
  const SubsetGraph comp_graph = induced_subgraph(g, heavy_comp);
  const SubsetGraph red = reduction(comp_graph.graph, comp_graph.to_local(b));
  std::vector<VertexSet> layers;
  {
    VertexSet seen = VertexSet::single(0), frontier = seen;
    while (!frontier.empty()) {
      VertexSet orig;
      for (Vertex x : frontier) orig.insert(comp_graph.original[red.original[x]]);
      layers.push_back(orig);
      VertexSet next;
      for (Vertex x : frontier) next |= red.graph.neighbors(x);
      next -= seen;
      seen |= next;
      frontier = next;
    }
  }
  const Weight w_b = g.weight(b);
  std::size_t j = 0;
  Weight prefix = g.weight(layers[0]);
  while (prefix * 2 < w_b) prefix += g.weight(layers[++j]);
  const VertexSet bj = layers[j];

  if (g.weight(bj) <= (Weight(1, 2) - beta) * w_b) return separator(a | bj);

  const VertexSet a_prime = reachable(g, a, g.vertices() - bj);
  IndSubdivResult inner = indsubdiv(g, a_prime, n, m - 1);
  if (inner.kind == IndSubdivKind::kSeparator) return separator(inner.set);
  if (inner.kind == IndSubdivKind::kHeavyVertex) {
    out.kind = IndSubdivKind::kHeavyVertex;
    out.vertex = inner.vertex;
    out.achieved = g.weight(inner.vertex);
    return out;
  }

  // Add one missing pattern edge, routed through A' - A.
  SubdivisionWitness w = inner.witness;
  const int k = w.pattern_vertex_count();
  int pu = -1, pv = -1;
  for (int x = 0; x < k && pu < 0; ++x)
    for (int y = x + 1; y < k; ++y)
      if (!w.has_pattern_edge(x, y)) {
        pu = x;
        pv = y;
        break;
      }
  if (pu < 0) throw std::logic_error("pattern graph is already complete");
  const Vertex u = w.branch[pu], v = w.branch[pv];
  w.paths.push_back({pu, pv, detail::bfs_path(g, u, v, (a_prime - a) | VertexSet{u, v})});
  out.kind = IndSubdivKind::kWitness;
  out.witness = std::move(w);
  return out;
}

// Requires G connected and n >= 2. The constant reported is c_subdiv(n),
// which the lemma guarantees whenever no witness surfaces.
inline StructuralOutcome subdiv_decomposition(const WeightedGraph& g, int n) {
  if (n < 2) throw std::invalid_argument("subdiv_decomposition needs n >= 2");
  StructuralOutcome full = full_decomposition(g);
  StructuralOutcome out;
  out.constant = constants::c_subdiv(n);
  out.reference = g.total_weight();
  if (full.tag != OutcomeTag::kNeighborhoodSet || g.neighborhood(full.set).empty()) {
    out.tag = full.tag == OutcomeTag::kNeighborhoodSet ? OutcomeTag::kConnectedSeparator : full.tag;
    out.set = full.set;
    out.cycle = full.cycle;
    out.achieved = out.tag == OutcomeTag::kCycleSet ? g.weight(full.set) : w_star(g, g.vertices() - full.set);
    return out;
  }
  IndSubdivResult r = indsubdiv(g, full.set, n, constants::choose2(n));
  switch (r.kind) {
    case IndSubdivKind::kSeparator:
      out.tag = OutcomeTag::kConnectedSeparator;
      out.set = r.set;
      out.achieved = w_star(g, g.vertices() - r.set);
      break;
    case IndSubdivKind::kHeavyVertex:
      out.tag = OutcomeTag::kCycleSet;
      out.set = VertexSet::single(r.vertex);
      out.cycle = CycleCertificate{{r.vertex}};
      out.achieved = g.weight(r.vertex);
      break;
    case IndSubdivKind::kWitness:
      out.tag = OutcomeTag::kSubdivisionWitness;
      out.witness = r.witness;
      out.set = r.witness.vertex_set();
      out.achieved = Weight(0);
      break;
  }
  return out;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_DECOMPOSE_HPP_
