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

#ifndef GRAPHSHARE_SPARSE_OR_LEGAL_HPP_
#define GRAPHSHARE_SPARSE_OR_LEGAL_HPP_

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graphshare/arrangeable.hpp"
#include "graphshare/constants.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/legal_ordering.hpp"

namespace graphshare {

enum class Branch { kSparse, kLegal };

inline const char* to_string(Branch b) { return b == Branch::kSparse ? "sparse" : "legal"; }

struct Dichotomy {
  Branch branch = Branch::kSparse;
  VertexSet sparse_set;                        // sparse branch
  std::optional<LegalOrderingContext> legal;   // legal branch
  VertexSet independent;                       // I, the heaviest color class
  VertexSet u_star;                            // sparse branch only
  Weight weight{0};                            // w(S) or w(I - U_sigma)
  int measured_p = 0;
  int colors = 0;
  Weight c_n{0};                               // c_final(measured_p)
};

inline std::string format_dichotomy(const Dichotomy& d) {
  std::ostringstream out;
  out << "dichotomy branch=" << to_string(d.branch) << " weight=" << to_string(d.weight)
      << " measuredP=" << d.measured_p << " cN=" << to_string(d.c_n);
  return out.str();
}

// Greedy coloring of `s` by descending weight (lowest id on ties) in which
// vertices at distance 2 get different colors; returns the heaviest class.
inline VertexSet heaviest_distance_two_class(const WeightedGraph& g, VertexSet s) {
  std::vector<Vertex> order = s.to_vector();
  std::stable_sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) { return g.weight(a) > g.weight(b); });
  std::vector<VertexSet> classes;
  for (Vertex v : order) {
    const VertexSet ball = g.closed_neighborhood(g.closed_neighbors(v));
    std::size_t c = 0;
    while (c < classes.size() && classes[c].intersects(ball)) ++c;
    if (c == classes.size()) classes.emplace_back();
    classes[c].insert(v);
  }
  VertexSet best;
  Weight best_weight(-1);
  for (VertexSet cls : classes)
    if (g.weight(cls) > best_weight) {
      best = cls;
      best_weight = g.weight(cls);
    }
  return best;
}

// Requires G connected. The branch is legal iff
// w(I - U_sigma) >= w(I) / (p^2 + 4p + 5).
inline Dichotomy sparse_or_legal(const WeightedGraph& g) {
  if (g.size() == 0 || !is_connected(g)) throw std::invalid_argument("sparse_or_legal needs a connected graph");
  Dichotomy d;
  const OrderedGraph og = arrangeable_ordering(g);
  d.measured_p = og.measured_p;
  d.c_n = constants::c_final(og.measured_p);
  const Coloring coloring = distinguishing_coloring(g, og);
  d.colors = coloring.count;
  d.independent = heaviest_class(g, coloring);

  if (g.size() == 1) {
    d.branch = Branch::kSparse;
    d.sparse_set = g.vertices();
    d.weight = g.total_weight();
    return d;
  }

  LegalOrderingContext ctx = improve_ordering(g, build_legal_ordering(g, d.independent));
  const Weight legal_weight = g.weight(d.independent - ctx.u_set);
  const int p = og.measured_p;
  if (legal_weight * (p * p + 4 * p + 5) >= g.weight(d.independent)) {
    d.branch = Branch::kLegal;
    d.weight = legal_weight;
    d.legal = std::move(ctx);
    return d;
  }
  d.branch = Branch::kSparse;
  d.u_star = u_star(g, ctx);
  d.sparse_set = heaviest_distance_two_class(g, d.u_star);
  d.weight = g.weight(d.sparse_set);
  return d;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_SPARSE_OR_LEGAL_HPP_
