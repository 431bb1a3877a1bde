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

#ifndef PAIRDOM_MATCHING_HPP
#define PAIRDOM_MATCHING_HPP

#include <compare>
#include <optional>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom {

// Pairwise vertex-disjoint edges (u, v), u < v, sorted ascending. Matchings
// compare lexicographically on that pair list.
struct Matching {
  std::vector<Edge> pairs;

  // The vertex matched to v, or -1 when v is not covered.
  int partner(int v) const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;
};

inline constexpr int kMaxMatchingEnumeration = 20;

// Perfect matchings are searched by pairing the least unmatched vertex of s
// with each of its neighbours inside s, in ascending order.
bool has_perfect_matching(const Graph& g, const VertexSet& s);
std::optional<Matching> find_perfect_matching(const Graph& g, const VertexSet& s);

// All perfect matchings of G[s], lexicographically sorted. Throws
// kGuardExceeded when |s| > 20.
std::vector<Matching> all_perfect_matchings(const Graph& g, const VertexSet& s);

namespace detail {
bool HasPerfectMatching(std::span<const std::uint64_t> rows, std::uint64_t s) noexcept;
}  // namespace detail

}  // namespace pairdom

#endif  // PAIRDOM_MATCHING_HPP
