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

#ifndef GRAPHSHARE_GRAPHSHARE_HPP_
#define GRAPHSHARE_GRAPHSHARE_HPP_

#include "graphshare/arrangeable.hpp"
#include "graphshare/budget.hpp"
#include "graphshare/checks.hpp"
#include "graphshare/constants.hpp"
#include "graphshare/decompose.hpp"
#include "graphshare/dfs_cycle.hpp"
#include "graphshare/game.hpp"
#include "graphshare/generators.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/graph_io.hpp"
#include "graphshare/hamiltonian.hpp"
#include "graphshare/legal_ordering.hpp"
#include "graphshare/oriented_paths.hpp"
#include "graphshare/outcome.hpp"
#include "graphshare/report.hpp"
#include "graphshare/shallow_minor.hpp"
#include "graphshare/solver.hpp"
#include "graphshare/sparse_or_legal.hpp"
#include "graphshare/strategies.hpp"
#include "graphshare/subdivision.hpp"
#include "graphshare/verify.hpp"
#include "graphshare/vertex_set.hpp"
#include "graphshare/weight.hpp"

#endif  // GRAPHSHARE_GRAPHSHARE_HPP_
