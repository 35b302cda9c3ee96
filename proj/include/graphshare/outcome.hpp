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

#ifndef GRAPHSHARE_OUTCOME_HPP_
#define GRAPHSHARE_OUTCOME_HPP_

#include <optional>
#include <sstream>
#include <string>

#include "graphshare/graph.hpp"
#include "graphshare/subdivision.hpp"

namespace graphshare {

enum class OutcomeTag { kConnectedSeparator, kNeighborhoodSet, kCycleSet, kSubdivisionWitness };

inline const char* to_string(OutcomeTag t) {
  switch (t) {
    case OutcomeTag::kConnectedSeparator: return "ConnectedSeparator";
    case OutcomeTag::kNeighborhoodSet: return "NeighborhoodSet";
    case OutcomeTag::kCycleSet: return "CycleSet";
    case OutcomeTag::kSubdivisionWitness: return "SubdivisionWitness";
  }
  return "?";
}

// One branch of a structural lemma. `achieved` is the realized quantity
// (w* of the remainder, w(N(S)) or w(S)); the lemma promises
// achieved >= constant * reference.
struct StructuralOutcome {
  OutcomeTag tag = OutcomeTag::kConnectedSeparator;
  VertexSet set;
  std::optional<CycleCertificate> cycle;
  std::optional<SubdivisionWitness> witness;
  Weight achieved{0};
  Weight constant{0};
  Weight reference{0};

  bool meets_bound() const { return achieved >= constant * reference; }
  // Vertices named on the report line: S, or the branch vertices of a witness.
  VertexSet reported_set() const { return witness ? witness->branch_set() : set; }
};

inline std::string format_outcome(const StructuralOutcome& o) {
  std::ostringstream out;
  out << "outcome tag=" << to_string(o.tag) << " S=" << to_string(o.reported_set())
      << " achieved=" << to_string(o.achieved) << " constant=" << to_string(o.constant);
  return out.str();
}

}  // namespace graphshare

#endif  // GRAPHSHARE_OUTCOME_HPP_
