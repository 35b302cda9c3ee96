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

#ifndef GRAPHSHARE_ORIENTED_PATHS_HPP_
#define GRAPHSHARE_ORIENTED_PATHS_HPP_

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphshare {

// An acyclic oriented graph laid out along its Hamiltonian path: vertices are
// the positions 0..size-1 (s = 0, t = size-1), every arc points forward and
// a -> a+1 is always present. Only the farthest arc out of each position
// matters to the construction, so that is all that is stored.
class OrientedPathGraph {
 public:
  explicit OrientedPathGraph(int size) : reach_(size) {
    for (int a = 0; a < size; ++a) reach_[a] = a + 1 < size ? a + 1 : a;
  }
  int size() const { return static_cast<int>(reach_.size()); }
  void add_arc(int a, int b) {
    if (a < 0 || b >= size() || a >= b) throw std::invalid_argument("arcs must point forward along the path");
    reach_[a] = std::max(reach_[a], b);
  }
  // Farthest head of an arc leaving a.
  int reach(int a) const { return reach_[a]; }
  // Whether position x lies strictly inside some arc.
  bool covered(int x) const {
    for (int a = 0; a < x; ++a)
      if (reach_[a] > x) return true;
    return false;
  }

 private:
  std::vector<int> reach_;
};

struct TwoPaths {
  std::vector<int> q0;
  std::vector<int> q1;
  // The greedy sequence behind them: arc u[i] -> v[i].
  std::vector<int> u;
  std::vector<int> v;
};

// Two s-t paths sharing only s and t, built greedily: v_0 is the farthest
// out-neighbor of s, and v_i the farthest vertex reachable by one arc from
// some u in [s, v_{i-1}), with u_i the earliest such u.
inline TwoPaths oriented_two_paths(const OrientedPathGraph& d) {
  const int size = d.size();
  if (size < 2) throw std::invalid_argument("two paths need at least two vertices");
  for (int x = 1; x + 1 < size; ++x)
    if (!d.covered(x)) throw std::invalid_argument("internal position " + std::to_string(x) + " is not covered");

  const int t = size - 1;
  TwoPaths out;
  out.u.push_back(0);
  out.v.push_back(d.reach(0));
  while (out.v.back() != t) {
    const int prev = out.v.back();
    int best_u = -1, best_v = -1;
    for (int a = 0; a < prev; ++a) {
      int far = d.reach(a);
      if (far > best_v) {
        best_v = far;
        best_u = a;
      }
    }
    if (best_v <= prev) throw std::logic_error("greedy construction stalled at position " + std::to_string(prev));
    out.u.push_back(best_u);
    out.v.push_back(best_v);
  }

  for (int k = 0; k < 2; ++k) {
    std::vector<int> jump(size, -1);
    for (std::size_t i = k; i < out.u.size(); i += 2) jump[out.u[i]] = out.v[i];
    std::vector<int>& q = k == 0 ? out.q0 : out.q1;
    for (int p = 0;;) {
      q.push_back(p);
      if (p == t) break;
      p = jump[p] >= 0 ? jump[p] : p + 1;
    }
  }
  return out;
}

}  // namespace graphshare

#endif  // GRAPHSHARE_ORIENTED_PATHS_HPP_
