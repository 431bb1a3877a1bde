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


// Slow, literal implementations of the definitions, kept apart from the
// library so that tests compare two independent computations. Graphs are
// plain adjacency matrices; vertex sets are sorted vectors.

#ifndef PAIRDOM_TESTS_ORACLES_HPP
#define PAIRDOM_TESTS_ORACLES_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pairdom/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Set = std::vector<int>;

Matrix FromEdges(int n, const std::vector<std::pair<int, int>>& edges);
Matrix FromGraph(const pairdom::Graph& g);
pairdom::Graph ToGraph(const Matrix& m);

// Every subset of 0..n-1 in increasing mask order.
std::vector<Set> AllSubsets(int n);
Set ToSet(const pairdom::VertexSet& s);

std::string Graph6(const Matrix& m);

bool Dominates(const Matrix& m, const Set& d);
bool MinimalDominating(const Matrix& m, const Set& d);
int PerfectMatchingCount(const Matrix& m, const Set& s);
std::vector<std::vector<std::pair<int, int>>> PerfectMatchings(const Matrix& m, const Set& s);
bool PairedDominating(const Matrix& m, const Set& p);
bool MinimalPairedDominating(const Matrix& m, const Set& p);
bool Independent(const Matrix& m, const Set& s);

std::set<Set> MinimalDominatingSets(const Matrix& m);
std::set<Set> MinimalPairedDominatingSets(const Matrix& m);

struct Invariants {
  int gamma = 0;
  int upper_gamma = 0;
  std::optional<int> gamma_pr;
  std::optional<int> upper_gamma_pr;
};
Invariants ComputeInvariants(const Matrix& m);
int Alpha(const Matrix& m);

// Vertices whose neighbours in s are exactly {v} (open neighbourhoods).
Set PrivateNeighbors(const Matrix& m, int v, const Set& s);
// Vertices outside s whose neighbours in s all lie in {u, v}, with at least one.
Set EpnPair(const Matrix& m, int u, int v, const Set& s);

// Simple cycles, each as its vertex sequence starting at its least vertex.
std::vector<Set> Cycles(const Matrix& m);
std::optional<int> Girth(const Matrix& m);
int ComponentCount(const Matrix& m);
bool Bipartite(const Matrix& m);
// Connected and every edge on at most one cycle.
bool Cactus(const Matrix& m);

bool Isomorphic(const Matrix& a, const Matrix& b);
// Least graph6-order bit string over all vertex permutations.
std::string CanonicalBits(const Matrix& m);

}  // namespace oracle

#endif  // PAIRDOM_TESTS_ORACLES_HPP
