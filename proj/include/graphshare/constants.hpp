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

#ifndef GRAPHSHARE_CONSTANTS_HPP_
#define GRAPHSHARE_CONSTANTS_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "graphshare/weight.hpp"

namespace graphshare::constants {

// Separator-or-cycle on a Hamiltonian graph.
inline const Weight kHamilSeparator{1, 5};
// Growing a connected set on a Hamiltonian graph.
inline const Weight kHamilGrow{1, 5};
// Their product.
inline const Weight kHamilCombined = kHamilSeparator * kHamilGrow;
// General connected graphs: c' / (2 (1 + c')) with c' = kHamilCombined.
inline const Weight kFull = kHamilCombined / (Weight(2) * (Weight(1) + kHamilCombined));

inline std::int64_t choose2(int n) { return std::int64_t{n} * (n - 1) / 2; }

inline void check_nm(int n, std::int64_t m) {
  if (n < 2) throw std::invalid_argument("c_{n,m} needs n >= 2, got n=" + std::to_string(n));
  if (m < 0 || m > choose2(n))
    throw std::invalid_argument("m=" + std::to_string(m) + " outside 0..C(" + std::to_string(n) + ",2)");
}

// beta_{n,m} for m >= 1, from c_{n,m-1}.
inline Weight beta_from(const Weight& c_prev) { return c_prev / (Weight(2) * (Weight(1) + c_prev)); }

// c_{n,m} of the induced-subdivision recursion. For n = 1 the lemma holds
// through its third outcome and any constant works; 1 is returned.
inline Weight c_nm(int n, std::int64_t m) {
  if (n == 1) {
    if (m != 0) throw std::invalid_argument("n=1 allows only m=0");
    return Weight(1);
  }
  check_nm(n, m);
  Weight c(1, n - 1);
  for (std::int64_t k = 1; k <= m; ++k) {
    Weight beta = beta_from(c);
    c = beta / (Weight(1) + beta);
  }
  return c;
}

inline Weight beta_nm(int n, std::int64_t m) {
  check_nm(n, m);
  if (m < 1) throw std::invalid_argument("beta_{n,m} needs m >= 1");
  return beta_from(c_nm(n, m - 1));
}

// Constant of the forbidden-K_n decomposition.
inline Weight c_subdiv(int n) { return kFull * c_nm(n, choose2(n)); }

// Sparse-or-legal constant at arrangeability p.
inline Weight c_final(int p) {
  if (p < 0) throw std::invalid_argument("arrangeability must be non-negative");
  std::int64_t q = std::int64_t{p} * p + 4 * std::int64_t{p};
  return Weight(1, (q + 5) * (q + 3));
}

// Sparse-weight strategy constant for a G^R without a K_N subdivision.
inline Weight c_sparse(int big_n) { return c_subdiv(big_n) / 6; }

// Overall game constant: c_final(p) * min(c_sparse(N), 1/2).
inline Weight c_game(int p, int big_n) { return c_final(p) * std::min(c_sparse(big_n), Weight(1, 2)); }

}  // namespace graphshare::constants

#endif  // GRAPHSHARE_CONSTANTS_HPP_
