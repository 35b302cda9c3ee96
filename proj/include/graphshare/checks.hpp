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

// Independent re-verification of decomposer outputs. Every checker
// recomputes the promised inequality from the returned set alone and returns
// a description of the first defect, or nullopt.

#ifndef GRAPHSHARE_CHECKS_HPP_
#define GRAPHSHARE_CHECKS_HPP_

#include <optional>
#include <string>

#include "graphshare/constants.hpp"
#include "graphshare/decompose.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/oriented_paths.hpp"
#include "graphshare/outcome.hpp"
#include "graphshare/subdivision.hpp"

namespace graphshare {

using Defect = std::optional<std::string>;

namespace detail {

inline std::string describe(const StructuralOutcome& o) { return format_outcome(o); }

inline Defect require(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

// Shared part of every separator/cycle/neighborhood check: recompute
// `achieved` with `measure` and compare it with constant * reference.
inline Defect check_bound(const StructuralOutcome& o, const Weight& recomputed, const Weight& constant,
                          const Weight& reference) {
  if (recomputed != o.achieved)
    return "achieved " + to_string(o.achieved) + " but recomputed " + to_string(recomputed) + " in " + describe(o);
  if (o.constant != constant) return "constant " + to_string(o.constant) + " expected " + to_string(constant);
  if (recomputed < constant * reference)
    return "bound violated: " + to_string(recomputed) + " < " + to_string(constant) + " * " + to_string(reference);
  return std::nullopt;
}

}  // namespace detail

inline Defect check_two_paths(const OrientedPathGraph& d, const TwoPaths& tp) {
  const int t = d.size() - 1;
  VertexSet inner[2];
  for (int k = 0; k < 2; ++k) {
    const auto& q = k == 0 ? tp.q0 : tp.q1;
    if (q.empty() || q.front() != 0 || q.back() != t) return "path does not run from s to t";
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      int a = q[i], b = q[i + 1];
      if (b <= a) return "path steps backward";
      if (b != a + 1 && b > d.reach(a)) return "path uses a missing arc";
      if (i > 0) inner[k].insert(a);
    }
  }
  if (inner[0].intersects(inner[1])) return "paths share an internal vertex";
  return std::nullopt;
}

inline Defect check_hamil_separator(const WeightedGraph& g, const CycleCertificate& h, const StructuralOutcome& o) {
  const Weight total = g.total_weight();
  const Weight& c = constants::kHamilSeparator;
  if (o.tag == OutcomeTag::kConnectedSeparator) {
    if (o.set.empty() || !is_connected(g, o.set)) return "separator is not connected";
    return detail::check_bound(o, w_star(cycle_subgraph(g, h), g.vertices() - o.set), c, total);
  }
  if (o.tag == OutcomeTag::kCycleSet) {
    if (!cycle_reduction_check(g, o.set)) return "reduction to S is not a cycle";
    return detail::check_bound(o, g.weight(o.set), c, total);
  }
  return "unexpected tag " + std::string(to_string(o.tag));
}

inline Defect check_hamil_grow(const WeightedGraph& g, const CycleCertificate& h, VertexSet a,
                               const StructuralOutcome& o) {
  const Weight reference = w_star(cycle_subgraph(g, h), g.vertices() - a);
  const Weight& c = constants::kHamilGrow;
  if (!a.is_subset_of(o.set)) return "S does not contain A";
  if (!is_connected(g, o.set)) return "S is not connected";
  if (o.reference != reference) return "reference is not w*(H - A)";
  if (o.tag == OutcomeTag::kConnectedSeparator)
    return detail::check_bound(o, w_star(g, g.vertices() - o.set), c, reference);
  if (o.tag == OutcomeTag::kNeighborhoodSet)
    return detail::check_bound(o, g.weight(g.neighborhood(o.set)), c, reference);
  return "unexpected tag " + std::string(to_string(o.tag));
}

inline Defect check_dfs_cycle(const WeightedGraph& g, const CycleCertificate& h) {
  if (!is_cycle_in(g, h)) return "not a cycle of the graph";
  const VertexSet on = h.vertex_set();
  for (VertexSet comp : components(g, g.vertices() - on))
    if (g.weight(comp) * 2 > g.total_weight()) return "component " + to_string(comp) + " is heavier than half";
  return std::nullopt;
}

// Connected separator, neighborhood set or cycle set against
// constant * w(G).
inline Defect check_structural(const WeightedGraph& g, const StructuralOutcome& o, const Weight& constant) {
  const Weight total = g.total_weight();
  if (o.reference != total) return "reference is not w(G)";
  switch (o.tag) {
    case OutcomeTag::kConnectedSeparator:
      if (o.set.empty() || !is_connected(g, o.set)) return "separator is not connected";
      return detail::check_bound(o, w_star(g, g.vertices() - o.set), constant, total);
    case OutcomeTag::kNeighborhoodSet:
      if (o.set.empty() || !is_connected(g, o.set)) return "neighborhood set is not connected";
      return detail::check_bound(o, g.weight(g.neighborhood(o.set)), constant, total);
    case OutcomeTag::kCycleSet: {
      auto cert = cycle_reduction_check(g, o.set);
      if (!cert) return "reduction to S is not a cycle";
      return detail::check_bound(o, g.weight(o.set), constant, total);
    }
    case OutcomeTag::kSubdivisionWitness:
      return "witness where a structural outcome was expected";
  }
  return "unknown tag";
}

inline Defect check_full(const WeightedGraph& g, const StructuralOutcome& o) {
  return check_structural(g, o, constants::kFull);
}

inline Defect check_subdiv(const WeightedGraph& g, int n, const StructuralOutcome& o) {
  if (o.tag == OutcomeTag::kSubdivisionWitness) {
    if (!o.witness) return "witness tag without a witness";
    if (auto d = witness_defect(g, *o.witness)) return "invalid witness: " + *d;
    if (!is_complete_witness(g, *o.witness, n)) return "witness is not a subdivision of K_n";
    return std::nullopt;
  }
  if (o.tag == OutcomeTag::kNeighborhoodSet) return "neighborhood set escaped the decomposition";
  return check_structural(g, o, constants::c_subdiv(n));
}

inline Defect check_indsubdiv(const WeightedGraph& g, VertexSet a, int n, std::int64_t m, const IndSubdivResult& r) {
  const VertexSet na = g.neighborhood(a);
  const Weight reference = g.weight(na);
  const Weight c = constants::c_nm(n, m);
  if (r.reference != reference) return "reference is not w(N(A))";
  switch (r.kind) {
    case IndSubdivKind::kSeparator: {
      if (!a.is_subset_of(r.set)) return "S does not contain A";
      if (!is_connected(g, r.set)) return "S is not connected";
      Weight measure = split_measure(g, na, r.set);
      if (measure != r.achieved) return "achieved does not match the split measure";
      if (measure < c * reference) return "separator bound violated";
      return std::nullopt;
    }
    case IndSubdivKind::kHeavyVertex:
      if (!na.contains(r.vertex)) return "heavy vertex outside N(A)";
      if (g.weight(r.vertex) != r.achieved) return "achieved is not w(v)";
      if (g.weight(r.vertex) < c * reference) return "heavy vertex bound violated";
      return std::nullopt;
    case IndSubdivKind::kWitness: {
      const SubdivisionWitness& w = r.witness;
      if (auto d = witness_defect(g, w, g.vertices() - a)) return "invalid witness: " + *d;
      if (w.pattern_vertex_count() != n) return "witness has the wrong number of branch vertices";
      if (w.pattern_edge_count() != m) return "witness has the wrong number of pattern edges";
      if (!w.branch_set().is_subset_of(na)) return "branch vertices outside N(A)";
      return std::nullopt;
    }
  }
  return "unknown kind";
}

}  // namespace graphshare

#endif  // GRAPHSHARE_CHECKS_HPP_
