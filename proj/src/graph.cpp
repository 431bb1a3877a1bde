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

#include "pairdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "pairdom/error.hpp"

namespace pairdom {

namespace {

std::uint64_t FullMask(int order) {
  return order == 0 ? 0 : (~std::uint64_t{0} >> (64 - order));
}

void CheckOrder(int n) {
  if (n < 0 || n > kMaxOrder) {
    Fail(ErrorCode::kOutOfRange,
         "graph order " + std::to_string(n) + " outside 0.." +
             std::to_string(kMaxOrder));
  }
}

void CheckSameOrder(const VertexSet& a, const VertexSet& b) {
  if (a.order() != b.order()) {
    Fail(ErrorCode::kInvalidArgument, "vertex sets of different graph orders");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int order, std::uint64_t bits) : order_(order), bits_(bits) {
  CheckOrder(order);
  if ((bits & ~FullMask(order)) != 0) {
    Fail(ErrorCode::kOutOfRange, "vertex set has members outside the graph");
  }
}

VertexSet VertexSet::Full(int order) {
  CheckOrder(order);
  return VertexSet(order, FullMask(order));
}

VertexSet VertexSet::Of(int order, std::initializer_list<int> vertices) {
  CheckOrder(order);
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 0 || v >= order) {
      Fail(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
    bits |= std::uint64_t{1} << v;
  }
  return VertexSet(order, bits);
}

VertexSet VertexSet::with(int v) const {
  if (v < 0 || v >= order_) {
    Fail(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  return VertexSet(order_, bits_ | (std::uint64_t{1} << v));
}

VertexSet VertexSet::without(int v) const {
  if (v < 0 || v >= order_) {
    Fail(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  return VertexSet(order_, bits_ & ~(std::uint64_t{1} << v));
}

VertexSet VertexSet::complement() const {
  return VertexSet(order_, ~bits_ & FullMask(order_));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  CheckSameOrder(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

bool VertexSet::intersects(const VertexSet& other) const {
  CheckSameOrder(*this, other);
  return (bits_ & other.bits_) != 0;
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

int VertexSet::front() const {
  if (bits_ == 0) Fail(ErrorCode::kInvalidArgument, "front() of an empty set");
  return std::countr_zero(bits_);
}

std::string VertexSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int v : elements()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  CheckSameOrder(a, b);
  return VertexSet(a.order_, a.bits_ | b.bits_);
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  CheckSameOrder(a, b);
  return VertexSet(a.order_, a.bits_ & b.bits_);
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  CheckSameOrder(a, b);
  return VertexSet(a.order_, a.bits_ & ~b.bits_);
}

bool LexLess(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  int d = std::countr_zero(diff);
  // Both sequences agree below d. The one holding d is smaller unless the
  // other one has already ended.
  if ((a >> d) & 1U) return (b >> d) != 0;
  return (a >> d) == 0;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  return LexLess(a.bits_, b.bits_);
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  return os << s.ToString();
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, std::span<const Edge> edges) {
  CheckOrder(n);
  adj_.assign(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      Fail(ErrorCode::kOutOfRange, "edge (" + std::to_string(u) + "," +
                                       std::to_string(v) + ") has an endpoint out of range");
    }
    if (u == v) {
      Fail(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(u));
    }
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
  int degree_sum = 0;
  for (auto r : adj_) degree_sum += std::popcount(r);
  edge_count_ = degree_sum / 2;
}

Graph Graph::FromAdjacency(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  CheckOrder(n);
  const std::uint64_t full = FullMask(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~full) != 0) {
      Fail(ErrorCode::kOutOfRange, "adjacency row has bits outside the graph");
    }
    if ((rows[v] >> v) & 1U) {
      Fail(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(v));
    }
    for (std::uint64_t b = rows[v]; b != 0; b &= b - 1) {
      int u = std::countr_zero(b);
      if (((rows[u] >> v) & 1U) == 0) {
        Fail(ErrorCode::kInvalidArgument, "adjacency is not symmetric");
      }
    }
    degree_sum += std::popcount(rows[v]);
  }
  Graph g;
  g.adj_ = std::move(rows);
  g.edge_count_ = degree_sum / 2;
  return g;
}

void Graph::CheckVertex(int v) const {
  if (v < 0 || v >= order()) {
    Fail(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
}

VertexSet Graph::neighbors(int v) const {
  CheckVertex(v);
  return VertexSet(order(), adj_[v]);
}

int Graph::degree(int v) const {
  CheckVertex(v);
  return std::popcount(adj_[v]);
}

bool Graph::adjacent(int u, int v) const {
  CheckVertex(u);
  CheckVertex(v);
  return (adj_[u] >> v) & 1U;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : kMaxOrder;
  for (auto r : adj_) best = std::min(best, std::popcount(r));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (auto r : adj_) best = std::max(best, std::popcount(r));
  return best;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](std::uint64_t r) { return r == 0; });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (std::uint64_t b = adj_[u] >> u; b != 0; b &= b - 1) {
      int v = u + std::countr_zero(b);
      if (v != u) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure queries

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

VertexSet neighborhood(const Graph& g, int v) { return g.neighbors(v); }

std::vector<int> distances_from(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) {
    Fail(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  std::vector<int> dist(n, -1);
  dist[v] = 0;
  std::uint64_t frontier = std::uint64_t{1} << v;
  std::uint64_t seen = frontier;
  for (int d = 1; frontier != 0; ++d) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
      next |= g.row(std::countr_zero(b));
    }
    next &= ~seen;
    for (std::uint64_t b = next; b != 0; b &= b - 1) dist[std::countr_zero(b)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

VertexSet distance_layer(const Graph& g, int v, int i) {
  if (i < 0) Fail(ErrorCode::kInvalidArgument, "negative distance");
  auto dist = distances_from(g, v);
  std::uint64_t bits = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (dist[u] == i) bits |= std::uint64_t{1} << u;
  }
  return VertexSet(g.order(), bits);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(n), parent(n);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    queue.assign(1, root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (std::uint64_t b = g.row(u); b != 0; b &= b - 1) {
        int w = std::countr_zero(b);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<VertexSet> ComponentDecomposition::members() const {
  const int n = static_cast<int>(assignment.size());
  std::vector<std::uint64_t> bits(count, 0);
  for (int v = 0; v < n; ++v) bits[assignment[v]] |= std::uint64_t{1} << v;
  std::vector<VertexSet> out;
  out.reserve(count);
  for (auto b : bits) out.emplace_back(n, b);
  return out;
}

ComponentDecomposition components(const Graph& g) {
  const int n = g.order();
  ComponentDecomposition out;
  out.assignment.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (out.assignment[v] >= 0) continue;
    std::uint64_t seen = std::uint64_t{1} << v;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
        next |= g.row(std::countr_zero(b));
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    for (std::uint64_t b = seen; b != 0; b &= b - 1) {
      out.assignment[std::countr_zero(b)] = out.count;
    }
    ++out.count;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).count == 1; }

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.order() != g.order()) {
    Fail(ErrorCode::kInvalidArgument, "vertex set does not belong to this graph");
  }
  auto keep = s.elements();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  std::vector<std::uint64_t> rows(keep.size(), 0);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    for (std::uint64_t b = g.row(keep[i]) & s.bits(); b != 0; b &= b - 1) {
      rows[i] |= std::uint64_t{1} << index[std::countr_zero(b)];
    }
  }
  return Graph::FromAdjacency(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    Fail(ErrorCode::kInvalidArgument, "permutation length differs from graph order");
  }
  std::uint64_t image = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((image >> p) & 1U)) {
      Fail(ErrorCode::kInvalidArgument, "not a permutation");
    }
    image |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> rows(n, 0);
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t b = g.row(v); b != 0; b &= b - 1) {
      rows[perm[v]] |= std::uint64_t{1} << perm[std::countr_zero(b)];
    }
  }
  return Graph::FromAdjacency(std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  CheckOrder(na + b.order());
  std::vector<std::uint64_t> rows(a.rows().begin(), a.rows().end());
  for (auto r : b.rows()) rows.push_back(r << na);
  return Graph::FromAdjacency(std::move(rows));
}

}  // namespace pairdom
