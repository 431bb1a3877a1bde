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

#include "pairdom/reference.hpp"

#include <vector>

namespace pairdom::reference {

namespace {

bool Dominates(const Graph& g, const std::vector<int>& d) {
  std::vector<bool> covered(g.order(), false);
  for (int v : d) {
    covered[v] = true;
    for (int u = 0; u < g.order(); ++u) {
      if (g.adjacent(u, v)) covered[u] = true;
    }
  }
  for (bool c : covered) {
    if (!c) return false;
  }
  return true;
}

void Choose(const std::vector<Edge>& edges, std::size_t start, int remaining,
            std::vector<Edge>& picked, const std::vector<int>& target, long long& count) {
  if (remaining == 0) {
    std::vector<int> hits(64, 0);
    for (const auto& [u, v] : picked) {
      ++hits[u];
      ++hits[v];
    }
    for (int v : target) {
      if (hits[v] != 1) return;
    }
    ++count;
    return;
  }
  for (std::size_t i = start; i < edges.size(); ++i) {
    picked.push_back(edges[i]);
    Choose(edges, i + 1, remaining - 1, picked, target, count);
    picked.pop_back();
  }
}

}  // namespace

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  const std::vector<int> members = d.elements();
  if (!Dominates(g, members)) return false;
  const std::size_t k = members.size();
  // Every proper subset, by index mask.
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << k); ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) subset.push_back(members[i]);
    }
    if (Dominates(g, subset)) return false;
  }
  return true;
}

long long count_perfect_matchings(const Graph& g, const VertexSet& s) {
  const std::vector<int> target = s.elements();
  if (target.size() % 2 != 0) return 0;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) edges.emplace_back(u, v);
  }
  long long count = 0;
  std::vector<Edge> picked;
  Choose(edges, 0, static_cast<int>(target.size() / 2), picked, target, count);
  return count;
}

}  // namespace pairdom::reference
