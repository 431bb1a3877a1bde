// Copyright 2026 The pairdom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAIRDOM_CHECKS_HPP
#define PAIRDOM_CHECKS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pairdom/characterizations.hpp"
#include "pairdom/domination.hpp"
#include "pairdom/families.hpp"
#include "pairdom/graph.hpp"

namespace pairdom {

// One graph plus everything derived from it, computed on first use so that a
// batch of checks pays for the exhaustive solver once.
class GraphContext {
 public:
  explicit GraphContext(Graph g);

  const Graph& graph() const { return graph_; }
  const std::string& graph6() const { return graph6_; }

  const ClassFlags& flags();
  const FamilyLabel& family();
  bool componentwise_c3_free_cactus();

  // True when the paired solver may run (n <= 20).
  bool solvable() const { return graph_.order() <= kMaxPairedOrder; }
  const DominationProfile& profile();

  // Γ_pr = 2Γ; requires paired invariants to be defined.
  bool equality_holds();

 private:
  Graph graph_;
  std::string graph6_;
  std::optional<ClassFlags> flags_;
  std::optional<FamilyLabel> family_;
  std::optional<bool> cactus_;
  std::optional<DominationProfile> profile_;
};

struct CheckInfo {
  std::string_view id;
  std::string_view summary;
};

// Registered checks in a fixed order.
std::span<const CheckInfo> all_checks();
bool is_known_check(std::string_view id);

// Evaluates one check. Guard violations yield kSkipped, failed hypotheses
// kNotApplicable.
Verdict run_check(std::string_view id, GraphContext& ctx);

}  // namespace pairdom

#endif  // PAIRDOM_CHECKS_HPP
