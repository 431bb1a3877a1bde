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

#ifndef PAIRDOM_GRAPH_HPP
#define PAIRDOM_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pairdom {

inline constexpr int kMaxOrder = 62;

using Edge = std::pair<int, int>;

// A set of vertices of a graph of a fixed order, stored as one machine word.
// Two sets may only be combined when their orders agree.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int order, std::uint64_t bits);

  static VertexSet Empty(int order) { return VertexSet(order, 0); }
  static VertexSet Full(int order);
  static VertexSet Of(int order, std::initializer_list<int> vertices);

  int order() const noexcept { return order_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(int v) const noexcept {
    return v >= 0 && v < order_ && ((bits_ >> v) & 1U);
  }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  // Ascending vertex list.
  std::vector<int> elements() const;
  // Least element; the set must be non-empty.
  int front() const;

  // "{0,2,4}"
  std::string ToString() const;

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  // Lexicographic order on the ascending element sequences, e.g.
  // {0} < {0,1} < {0,2} < {1}.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

 private:
  int order_ = 0;
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

// Lexicographic comparison of two raw masks under the VertexSet ordering.
bool LexLess(std::uint64_t a, std::uint64_t b) noexcept;

// Immutable simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on n vertices. Duplicate edges collapse; loops and
  // out-of-range endpoints throw.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Adjacency rows as masks. Validates symmetry and the absence of loops.
  static Graph FromAdjacency(std::vector<std::uint64_t> rows);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return edge_count_; }

  std::uint64_t row(int v) const noexcept { return adj_[v]; }
  std::span<const std::uint64_t> rows() const noexcept { return adj_; }

  VertexSet vertices() const { return VertexSet::Full(order()); }
  VertexSet neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  int min_degree() const;
  int max_degree() const;
  bool has_isolated_vertex() const;

  // Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void CheckVertex(int v) const;

  std::vector<std::uint64_t> adj_;
  int edge_count_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);

VertexSet neighborhood(const Graph& g, int v);

// Vertices at shortest-path distance exactly i from v.
VertexSet distance_layer(const Graph& g, int v, int i);

// Shortest-path distances from v; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, int v);

// Length of a shortest cycle; std::nullopt when the graph is a forest.
std::optional<int> girth(const Graph& g);

struct ComponentDecomposition {
  int count = 0;
  std::vector<int> assignment;  // vertex -> component, numbered by least vertex

  std::vector<VertexSet> members() const;
};

ComponentDecomposition components(const Graph& g);

bool is_connected(const Graph& g);

// Subgraph induced by s, with vertices renumbered in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> perm);

// Vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

// graph6 short form (n <= 62).
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Edge-list text: "n m" then m lines "u v". A stream may hold several
// graphs back to back.
std::vector<Graph> parse_edge_lists(std::istream& in);
std::string format_edge_list(const Graph& g);

}  // namespace pairdom

#endif  // PAIRDOM_GRAPH_HPP
