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

#ifndef PAIRDOM_FAMILIES_HPP
#define PAIRDOM_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom {

// The named families, up to isomorphism. When several labels fit one graph
// the first in this precedence wins: C3, C5, mK2, subdivided star with
// triangles, mK2 + mC5.
struct FamilyLabel {
  enum class Kind { kNone, kMK2, kC3, kC5, kSubdividedStarDelta, kMK2PlusMC5 };

  Kind kind = Kind::kNone;
  int m = 0;       // kMK2: number of K2 copies
  int t = 0;       // kSubdividedStarDelta: subdivided edges
  int delta = 0;   // kSubdividedStarDelta: triangles at the centre
  int m_k2 = 0;    // kMK2PlusMC5
  int m_c5 = 0;    // kMK2PlusMC5

  static FamilyLabel None() { return {}; }
  static FamilyLabel MK2(int m);
  static FamilyLabel C3() { return {Kind::kC3}; }
  static FamilyLabel C5() { return {Kind::kC5}; }
  static FamilyLabel SubdividedStarDelta(int t, int delta);
  static FamilyLabel MK2PlusMC5(int m_k2, int m_c5);

  // "mK2(3)", "C5", "K1,t*^D(t=3,D=1)", "mK2+mC5(2,1)", "none"
  std::string ToString() const;

  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

struct ClassFlags {
  bool connected = false;
  bool bipartite = false;
  bool unicyclic = false;
  bool cactus = false;
  bool c3_free = false;
  std::optional<int> girth;  // unset for forests
};

/// Centre 0; leg i is 0-(1+2i)-(2+2i); triangle j is 0-p-q-0 with
/// p = 1+2t+2j, q = p+1. t = 0 is accepted when delta >= 1.
Graph make_subdivided_star(int t, int delta);

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);

/// Disjoint union of `count` copies of each graph, blocks in order.
Graph make_union(const std::vector<std::pair<Graph, int>>& parts);

ClassFlags classify(const Graph& g);

/// Cactus test for one connected graph: every biconnected block is a single
/// edge or a cycle.
bool is_cactus(const Graph& g);

/// Every component of g (with at least one vertex) satisfies pred.
template <typename Pred>
bool every_component(const Graph& g, Pred pred) {
  for (const auto& members : components(g).members()) {
    if (!pred(induced_subgraph(g, members))) return false;
  }
  return true;
}

bool is_componentwise_c3_free_cactus(const Graph& g);

FamilyLabel recognize_family(const Graph& g);

/// Family mini-language used on the command line:
///   "K2", "C5", "P4", "K4"            single named graphs (Kn, Cn, Pn)
///   "mK2:3"                           3 disjoint copies of K2
///   "star:t=3,d=1"                    subdivided star with triangles
///   "union:K2*2+C5*1"                 disjoint union of named graphs
Graph parse_family_spec(std::string_view spec);

}  // namespace pairdom

#endif  // PAIRDOM_FAMILIES_HPP
