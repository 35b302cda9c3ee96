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

#ifndef GRAPHSHARE_GENERATORS_HPP_
#define GRAPHSHARE_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/graph.hpp"

namespace graphshare {

enum class Spine { kPath, kStar };

// G_n: vertices a_i = i and b_i = n + i, a_i pendant on b_i, the b's joined
// by a path or a star centred at b_0. w(a_i) = 1, w(b_i) = 0.
inline WeightedGraph hedgehog(int n, Spine spine) {
  if (n < 1) throw std::invalid_argument("hedgehog needs n >= 1");
  WeightedGraph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.set_weight(i, Weight(1));
    g.add_edge(i, n + i);
    if (i > 0) g.add_edge(spine == Spine::kPath ? n + i - 1 : n, n + i);
  }
  return g;
}

inline constexpr int kMaxOddConstruction = 4;

// H_n: a_i = i, b_i = n + i, and c_X = 2n + X - 1 for every non-empty
// X subset of {0..n-1} (as a bitmask). a_i - b_i, and b_i - c_X iff i in X.
inline WeightedGraph odd_construction(int n, int cap = kMaxOddConstruction) {
  if (n < 1) throw std::invalid_argument("odd construction needs n >= 1");
  if (n > cap) throw std::invalid_argument("odd construction capped at n = " + std::to_string(cap));
  const int subsets = (1 << n) - 1;
  WeightedGraph g(2 * n + subsets);
  for (int i = 0; i < n; ++i) {
    g.set_weight(i, Weight(1));
    g.add_edge(i, n + i);
  }
  for (int x = 1; x <= subsets; ++x)
    for (int i = 0; i < n; ++i)
      if ((x >> i) & 1) g.add_edge(n + i, 2 * n + x - 1);
  return g;
}

// Replaces each listed edge uv by a path through `count` new zero-weight
// vertices (appended after the existing ids, in list order). Counts must be
// even and both endpoints must have weight zero.
inline WeightedGraph subdivide_even(const WeightedGraph& g, const std::vector<std::pair<Edge, int>>& counts) {
  std::map<Edge, int> plan;
  int extra = 0;
  for (auto [e, count] : counts) {
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.size() || !g.adjacent(u, v))
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the graph");
    if (count < 0 || count % 2 != 0) throw std::invalid_argument("subdivision counts must be even");
    if (g.weight(u) != 0 || g.weight(v) != 0)
      throw std::invalid_argument("subdivided edges need zero-weight endpoints");
    if (!plan.emplace(Edge{u, v}, count).second) throw std::invalid_argument("edge listed twice");
    extra += count;
  }
  std::vector<Weight> weights = g.weights();
  weights.resize(g.size() + extra, Weight(0));
  WeightedGraph out(weights);
  Vertex next = g.size();
  for (auto [u, v] : g.edges()) {
    auto it = plan.find({u, v});
    if (it == plan.end() || it->second == 0) {
      out.add_edge(u, v);
      continue;
    }
    Vertex prev = u;
    for (int k = 0; k < it->second; ++k) {
      out.add_edge(prev, next);
      prev = next++;
    }
    out.add_edge(prev, v);
  }
  return out;
}

enum class Parity { kAny, kOdd, kEven };

struct RandomSpec {
  int size = 9;
  std::uint64_t seed = 0;
  Parity parity = Parity::kAny;
  double extra_edge_probability = 0.2;
  double zero_probability = 0.3;
  int max_weight = 8;
  int max_denominator = 1;  // > 1 draws denominators from 1..max_denominator
};

namespace detail {

inline Weight draw_weight(std::mt19937_64& rng, const RandomSpec& spec) {
  std::bernoulli_distribution zero(spec.zero_probability);
  if (zero(rng)) return Weight(0);
  std::uniform_int_distribution<int> num(1, spec.max_weight);
  std::uniform_int_distribution<int> den(1, std::max(1, spec.max_denominator));
  return Weight(num(rng), den(rng));
}

inline WeightedGraph fix_parity(const WeightedGraph& g, Parity parity) {
  bool odd = g.size() % 2 == 1;
  if (parity == Parity::kAny || (parity == Parity::kOdd) == odd) return g;
  // Hang a zero-weight pendant on the last vertex.
  std::vector<Weight> weights = g.weights();
  weights.push_back(Weight(0));
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(g.size() - 1, g.size());
  return WeightedGraph(std::move(weights), edges);
}

}  // namespace detail

// Random spanning tree (each vertex hangs off an earlier one) plus extra
// edges with the given probability.
inline WeightedGraph random_connected(const RandomSpec& spec) {
  if (spec.size < 1) throw std::invalid_argument("random graphs need at least one vertex");
  std::mt19937_64 rng(spec.seed);
  WeightedGraph g(spec.size);
  for (Vertex v = 0; v < spec.size; ++v) g.set_weight(v, detail::draw_weight(rng, spec));
  for (Vertex v = 1; v < spec.size; ++v) g.add_edge(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  std::bernoulli_distribution extra(spec.extra_edge_probability);
  for (Vertex u = 0; u < spec.size; ++u)
    for (Vertex v = u + 1; v < spec.size; ++v)
      if (!g.adjacent(u, v) && extra(rng)) g.add_edge(u, v);
  return detail::fix_parity(g, spec.parity);
}

// Random connected graph whose positive-weight vertices are pairwise at
// distance >= 3: positives are drawn in random order, skipping conflicts.
inline WeightedGraph random_sparsely_weighted(const RandomSpec& spec) {
  RandomSpec shape = spec;
  shape.zero_probability = 1.0;
  WeightedGraph g = random_connected(shape);
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Vertex> order = g.vertices().to_vector();
  std::shuffle(order.begin(), order.end(), rng);
  RandomSpec positive = spec;
  positive.zero_probability = 0;
  VertexSet blocked;
  std::bernoulli_distribution skip(spec.zero_probability);
  for (Vertex v : order) {
    if (g.closed_neighbors(v).intersects(blocked) || skip(rng)) continue;
    g.set_weight(v, detail::draw_weight(rng, positive));
    blocked |= g.closed_neighbors(v);
  }
  return g;
}

// A random graph with a Hamiltonian cycle through a shuffled vertex order,
// plus chords with probability extra_edge_probability. Returns the cycle.
inline std::pair<WeightedGraph, CycleCertificate> random_hamiltonian(const RandomSpec& spec) {
  if (spec.size < 1) throw std::invalid_argument("random graphs need at least one vertex");
  std::mt19937_64 rng(spec.seed);
  WeightedGraph g(spec.size);
  for (Vertex v = 0; v < spec.size; ++v) g.set_weight(v, detail::draw_weight(rng, spec));
  std::vector<Vertex> order = g.vertices().to_vector();
  std::shuffle(order.begin(), order.end(), rng);
  if (spec.size >= 2)
    for (int i = 0; i < spec.size; ++i) g.add_edge(order[i], order[(i + 1) % spec.size]);
  std::bernoulli_distribution chord(spec.extra_edge_probability);
  for (Vertex u = 0; u < spec.size; ++u)
    for (Vertex v = u + 1; v < spec.size; ++v)
      if (!g.adjacent(u, v) && chord(rng)) g.add_edge(u, v);
  return {std::move(g), CycleCertificate{order}};
}

// k stars whose zero-weight centers 0..k-1 form a cycle (an edge for k = 2);
// each center i carries a leaf k + i of weight leaf_weights[i], and
// `pendants` extra zero-weight leaves hang off centers 0, 1, ...
inline WeightedGraph ring_of_stars(const std::vector<Weight>& leaf_weights, int pendants = 0) {
  const int k = static_cast<int>(leaf_weights.size());
  if (k < 1) throw std::invalid_argument("ring of stars needs at least one star");
  WeightedGraph g(2 * k + pendants);
  for (int i = 0; i < k; ++i) {
    g.set_weight(k + i, leaf_weights[i]);
    g.add_edge(i, k + i);
    if (k > 1) g.add_edge(i, (i + 1) % k);
  }
  for (int j = 0; j < pendants; ++j) g.add_edge(j % k, 2 * k + j);
  return g;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_GENERATORS_HPP_
