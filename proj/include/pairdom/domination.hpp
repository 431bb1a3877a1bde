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

#ifndef PAIRDOM_DOMINATION_HPP
#define PAIRDOM_DOMINATION_HPP

#include <optional>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom {

inline constexpr int kMaxDominationOrder = 24;
inline constexpr int kMaxPairedOrder = 20;

/// D ∪ N(D) = V(G).
bool is_dominating(const Graph& g, const VertexSet& d);

/// pn(v,S) = {u : N(u) ∩ S = {v}}, with open neighbourhoods. Since graphs are
/// loopless, v itself never qualifies. Requires v ∈ S.
VertexSet private_neighborhood(const Graph& g, int v, const VertexSet& s);

/// pn(v,S) \ S. Requires v ∈ S.
VertexSet external_private_neighborhood(const Graph& g, int v, const VertexSet& s);

/// epn(u,v;S) = {w ∈ (N(u) ∪ N(v)) \ S : N(w) ∩ S ⊆ {u,v}}. Requires
/// u, v ∈ S and u != v.
VertexSet epn_pair(const Graph& g, int u, int v, const VertexSet& s);

/// D dominates and every v ∈ D either has no neighbour in D or owns an
/// external private neighbour (the closed-neighbourhood private-neighbour
/// criterion).
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

/// Dominating and G[P] has a perfect matching.
bool is_paired_dominating(const Graph& g, const VertexSet& p);

/// P is paired dominating and no proper subset of P is; only even-size
/// subsets are tried since odd sets have no perfect matching.
bool is_minimal_paired_dominating(const Graph& g, const VertexSet& p);

/// All minimal dominating sets in lexicographic order. n <= 24.
std::vector<VertexSet> enumerate_minimal_dominating_sets(const Graph& g);

/// All minimal paired dominating sets in lexicographic order. n <= 20 and no
/// isolated vertices.
std::vector<VertexSet> enumerate_minimal_paired_dominating_sets(const Graph& g);

struct InvariantReport {
  int gamma = 0;
  int upper_gamma = 0;
  VertexSet gamma_witness;
  VertexSet upper_gamma_witness;
  // Unset when the graph has an isolated vertex.
  std::optional<int> gamma_pr;
  std::optional<int> upper_gamma_pr;
  std::optional<VertexSet> gamma_pr_witness;
  std::optional<VertexSet> upper_gamma_pr_witness;

  bool paired_defined() const { return upper_gamma_pr.has_value(); }
};

// Everything the verifiers need about one graph, computed once.
struct DominationProfile {
  std::vector<VertexSet> minimal_dominating;
  // Unset when the graph has an isolated vertex.
  std::optional<std::vector<VertexSet>> minimal_paired;
  InvariantReport report;

  // Minimal dominating sets of size Γ.
  std::vector<VertexSet> upper_gamma_sets() const;
  // Minimal paired dominating sets of size Γ_pr; empty when undefined.
  std::vector<VertexSet> upper_paired_sets() const;
};

DominationProfile domination_profile(const Graph& g);

/// γ, Γ, γ_pr, Γ_pr with lexicographically least witnesses.
InvariantReport invariants(const Graph& g);

/// α(G). n <= 24.
int independence_number(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

namespace detail {
bool Dominates(std::span<const std::uint64_t> rows, std::uint64_t d) noexcept;
}  // namespace detail

}  // namespace pairdom

#endif  // PAIRDOM_DOMINATION_HPP
