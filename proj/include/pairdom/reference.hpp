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

#ifndef PAIRDOM_REFERENCE_HPP
#define PAIRDOM_REFERENCE_HPP

#include "pairdom/graph.hpp"

// Slow routines that apply textbook definitions literally. They share no code
// with the solver and serve as its oracles.
namespace pairdom::reference {

inline constexpr int kMaxReferenceOrder = 7;

// D dominates and no proper subset of D dominates.
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

// Number of |S|/2-edge subsets of E(G[S]) that cover S.
long long count_perfect_matchings(const Graph& g, const VertexSet& s);

}  // namespace pairdom::reference

#endif  // PAIRDOM_REFERENCE_HPP
