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

#ifndef PAIRDOM_CHARACTERIZATIONS_HPP
#define PAIRDOM_CHARACTERIZATIONS_HPP

#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pairdom/domination.hpp"
#include "pairdom/families.hpp"
#include "pairdom/graph.hpp"

namespace pairdom {

// ---------------------------------------------------------------------------
// Deciding Γ_pr(G) = 2Γ(G)

enum class Method { kBruteForce, kBipartite, kUnicyclic, kGirth6, kC3FreeCactus };

std::string_view MethodName(Method m);

struct Decision {
  bool equality_holds = false;
  Method method = Method::kBruteForce;
  std::variant<FamilyLabel, InvariantReport> evidence;
};

// Computes Γ and Γ_pr exhaustively. Throws kUndefined when g has an isolated
// vertex and kGuardExceeded above the solver limits.
Decision decide_equality_bruteforce(const Graph& g);

// Decides by family recognition when g lies in a characterized class:
//   girth >= 6 (forests included), no isolated vertex   -> g is mK2
//   every component a C3-free cactus, no isolated vertex -> g is mK2 + mC5
//   connected unicyclic                                   -> g is C3, C5 or K1,t*^1
//   connected bipartite, n >= 2                           -> g is K2
// Returns the most general applicable class in that order; every applicable
// class is evaluated and they must agree. std::nullopt when none applies.
std::optional<Decision> decide_equality_fastpath(const Graph& g);

// All classes whose hypotheses g satisfies, in precedence order.
std::vector<Method> applicable_fastpaths(const Graph& g);

// The verdict a class-specific characterization gives for a graph of that
// class with the given family label.
bool fastpath_decision(Method m, const FamilyLabel& family);

// ---------------------------------------------------------------------------
// Verdicts

enum class Outcome { kHolds, kFails, kNotApplicable, kSkipped };

std::string_view OutcomeName(Outcome o);

struct Verdict {
  std::string check_id;
  std::string graph6;
  Outcome outcome = Outcome::kNotApplicable;
  // Present exactly when outcome == kFails.
  std::optional<nlohmann::json> witness;
  // Why a check was not applicable or skipped.
  std::string note;

  bool holds() const { return outcome == Outcome::kHolds; }

  // {"check_id", "graph6", "holds", "witness"?}; "holds" is null for
  // not-applicable and skipped verdicts, which also carry "status".
  nlohmann::json ToJson() const;
};

// Every Γ_pr-set contains an independent minimal dominating set of size Γ.
// Not applicable unless Γ_pr = 2Γ.
Verdict check_independent_gamma_set(const Graph& g);

// Γ ≥ n/2 for even n, Γ ≥ (n-1)/2 for odd n. Throws kInvalidArgument when g
// is not connected unicyclic.
Verdict check_unicyclic_gamma_bound(const Graph& g);

// Structural properties of Γ_pr-sets P in C3-free cactus graphs with
// Γ_pr = 2Γ, quantified over every Γ_pr-set and every perfect matching of
// G[P].
enum class StructuralLemma {
  kLeaf,          // each matched pair has an endpoint of degree 1 in G[P]
  kTwoNeighbors,  // each x outside P has exactly two neighbours in P
  kPartners,      // the partners of those two neighbours are adjacent
  kNoCommon,      // two outside vertices share no neighbour in P
  kMaxDegree,     // Δ(G[P]) <= 2
  kOneSide,       // at most one endpoint of each pair sees V \ P
  kOutsideIndependent,  // V \ P is independent
};

inline constexpr StructuralLemma kAllStructuralLemmas[] = {
    StructuralLemma::kLeaf,     StructuralLemma::kTwoNeighbors, StructuralLemma::kPartners,
    StructuralLemma::kNoCommon, StructuralLemma::kMaxDegree,    StructuralLemma::kOneSide,
    StructuralLemma::kOutsideIndependent};

std::string_view StructuralLemmaId(StructuralLemma which);

Verdict check_structural_lemma(const Graph& g, StructuralLemma which);

// ---------------------------------------------------------------------------
// Counterexample hunt over C3-free graphs

struct HuntRecord {
  std::string graph6;
  int order = 0;
  int upper_gamma = 0;
  int upper_gamma_pr = 0;
  bool cactus = false;   // every component is a cactus
  bool of_form = false;  // isomorphic to m1 K2 + m2 C5
  FamilyLabel family;
};

struct HuntReport {
  long long scanned = 0;
  long long c3_free = 0;
  long long considered = 0;  // C3-free, at least one vertex, no isolated vertex
  long long skipped = 0;     // solver guard exceeded
  long long satisfiers = 0;
  long long of_form = 0;
  long long cactus_satisfiers = 0;
  long long cactus_not_of_form = 0;
  long long non_cactus_satisfiers = 0;
  std::vector<HuntRecord> satisfier_list;
  // Satisfiers that are not m1 K2 + m2 C5, listed verbatim.
  std::vector<HuntRecord> exceptions;

  void Add(const HuntReport& other);
  nlohmann::json ToJson() const;
};

// Tallies for a single graph.
HuntReport hunt_one(const Graph& g);

HuntReport hunt_c3free_counterexamples(std::span<const Graph> stream);

}  // namespace pairdom

#endif  // PAIRDOM_CHARACTERIZATIONS_HPP
