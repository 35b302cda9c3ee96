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

#ifndef GRAPHSHARE_SHALLOW_MINOR_HPP_
#define GRAPHSHARE_SHALLOW_MINOR_HPP_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "graphshare/graph.hpp"

namespace graphshare {

// The 1-shallow minor obtained by contracting N[v] for every positive-weight
// vertex v. Block N[v] carries w(v); the remaining singletons carry 0.
struct ShallowQuotient {
  QuotientGraph minor;
  std::vector<Vertex> center;  // block -> its positive vertex, or -1 for a singleton

  const WeightedGraph& graph() const { return minor.graph; }
  VertexSet blocks_to_vertices(VertexSet blocks) const {
    VertexSet out;
    for (int b : blocks) out |= minor.blocks[b];
    return out;
  }
  int block_of(Vertex v) const { return minor.block_of[v]; }
};

// Blocks are numbered by their lowest vertex id. Requires the positive-weight
// set to be sparse.
inline ShallowQuotient shallow_quotient(const WeightedGraph& g) {
  const VertexSet positive = g.positive_vertices();
  if (!is_sparse(g, positive))
    throw std::invalid_argument("positive-weight vertices are not pairwise at distance >= 3");
  std::vector<VertexSet> blocks;
  for (Vertex v : positive) blocks.push_back(g.closed_neighbors(v));
  for (Vertex v : g.vertices() - g.closed_neighborhood(positive)) blocks.push_back(VertexSet::single(v));
  std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });

  std::vector<Vertex> center(blocks.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    VertexSet inside = blocks[b] & positive;
    if (!inside.empty()) center[b] = inside.front();
  }
  auto rule = [&g, &positive](VertexSet block) {
    VertexSet inside = block & positive;
    return inside.empty() ? Weight(0) : g.weight(inside.front());
  };
  return ShallowQuotient{quotient(g, std::move(blocks), rule), std::move(center)};
}

}  // namespace graphshare

#endif  // GRAPHSHARE_SHALLOW_MINOR_HPP_
