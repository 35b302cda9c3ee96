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

#ifndef GRAPHSHARE_DFS_CYCLE_HPP_
#define GRAPHSHARE_DFS_CYCLE_HPP_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "graphshare/graph.hpp"

namespace graphshare {

struct DfsTree {
  Vertex root = 0;
  std::vector<Vertex> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<VertexSet> subtree;
};

// Depth-first spanning tree from `root`, visiting neighbors in increasing id.
inline DfsTree dfs_tree(const WeightedGraph& g, Vertex root) {
  DfsTree t;
  t.root = root;
  t.parent.assign(g.size(), -1);
  t.depth.assign(g.size(), -1);
  t.subtree.assign(g.size(), VertexSet{});
  std::vector<Vertex> order;
  std::vector<std::pair<Vertex, VertexSet>> stack;  // vertex, neighbors still to try
  t.depth[root] = 0;
  order.push_back(root);
  stack.emplace_back(root, g.neighbors(root));
  while (!stack.empty()) {
    auto& [v, rest] = stack.back();
    if (rest.empty()) {
      stack.pop_back();
      continue;
    }
    Vertex u = rest.front();
    rest.erase(u);
    if (t.depth[u] >= 0) continue;
    t.parent[u] = v;
    t.depth[u] = t.depth[v] + 1;
    order.push_back(u);
    stack.emplace_back(u, g.neighbors(u));
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    t.subtree[*it].insert(*it);
    if (t.parent[*it] >= 0) t.subtree[t.parent[*it]] |= t.subtree[*it];
  }
  return t;
}

// A cycle H (possibly of length 1) such that every component of G - V(H)
// weighs at most w(G)/2. Requires G connected.
inline CycleCertificate dfs_cycle(const WeightedGraph& g) {
  if (g.size() == 0 || !is_connected(g)) throw std::invalid_argument("dfs_cycle needs a connected graph");
  const Vertex root = 0;
  const DfsTree t = dfs_tree(g, root);
  const Weight total = g.total_weight();

  // Walk toward the unique heavy side until every side is light.
  Vertex v = root;
  while (true) {
    Vertex next = -1;
    for (Vertex c : g.neighbors(v)) {
      Weight side;
      if (t.parent[c] == v)
        side = g.weight(t.subtree[c]);
      else if (t.parent[v] == c)
        side = total - g.weight(t.subtree[v]);
      else
        continue;
      if (side * 2 > total) next = c;
    }
    if (next < 0) break;
    v = next;
  }
  if (v == root) return CycleCertificate{{v}};

  const VertexSet below = t.subtree[v] - VertexSet::single(v);
  const VertexSet above = g.vertices() - t.subtree[v];
  Vertex x = -1, y = -1;
  for (Vertex a : above)
    for (Vertex b : g.neighbors(a) & below)
      if (x < 0 || t.depth[a] < t.depth[x] || (t.depth[a] == t.depth[x] && (a < x || (a == x && b < y)))) {
        x = a;
        y = b;
      }
  if (x < 0) return CycleCertificate{{v}};

  // x is an ancestor of y; the cycle runs down the tree from x to y.
  std::vector<Vertex> up;
  for (Vertex z = y; z != x; z = t.parent[z]) up.push_back(z);
  up.push_back(x);
  std::reverse(up.begin(), up.end());
  return CycleCertificate{up};
}

}  // namespace graphshare

#endif  // GRAPHSHARE_DFS_CYCLE_HPP_
