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

#ifndef GRAPHSHARE_BUDGET_HPP_
#define GRAPHSHARE_BUDGET_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace graphshare {

// Raised when a search (minimax memo, subdivision search, Bob enumeration)
// would grow past its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMemoBudget = std::size_t{1} << 22;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

}  // namespace graphshare

#endif  // GRAPHSHARE_BUDGET_HPP_
