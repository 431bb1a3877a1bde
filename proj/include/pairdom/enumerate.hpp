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


#ifndef PAIRDOM_ENUMERATE_HPP
#define PAIRDOM_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom {

inline constexpr int kMaxLabeledOrder = 7;
inline constexpr int kMaxCanonicalOrder = 11;

// Upper triangle in graph6 order (column-major, x(0,1) first) read as an
// integer whose most significant bit is the first entry.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

// Minimum adjacency_code over all vertex permutations, and a graph
// realizing it. n <= kMaxCanonicalOrder.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

// All 2^(n(n-1)/2) labeled graphs on n <= 7 vertices in code order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

// Labeled graphs, or with dedup one canonical representative per
// isomorphism class sorted by canonical code.
std::vector<Graph> enumerate_labeled_graphs(int n, bool dedup);

// Hereditary classes that vertex extension can generate class by class.
enum class GraphClass { kAll, kTriangleFree, kAtMostOneCycle };

inline constexpr int kMaxClassOrderAll = 9;
inline constexpr int kMaxClassOrderFiltered = 10;

std::string_view GraphClassName(GraphClass c);
GraphClass ParseGraphClass(std::string_view name);

// Canonical representatives of every isomorphism class in the class, indexed
// by order 0..max_n and sorted by canonical code within each order.
std::vector<std::vector<Graph>> enumerate_graph_classes(int max_n, GraphClass cls);

}  // namespace pairdom

#endif  // PAIRDOM_ENUMERATE_HPP
