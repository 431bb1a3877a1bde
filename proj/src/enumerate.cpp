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


#include "pairdom/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "pairdom/error.hpp"

namespace pairdom {

namespace {

constexpr std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

int CodeLength(int n) { return n * (n - 1) / 2; }

void CheckCanonicalOrder(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    Fail(ErrorCode::kGuardExceeded, "canonical forms limited to n <= 11");
  }
}

// Branch and bound over vertex orderings, one column of the code per level.
// Swapping two twins is an automorphism that fixes every placed vertex, so
// only one twin of each pair is tried per level.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), k_(CodeLength(n_)) {
    for (int v = 0; v < n_; ++v) {
      for (int w = 0; w < n_; ++w) {
        if (v != w && (g.row(v) & ~Bit(w)) == (g.row(w) & ~Bit(v))) twins_[v] |= Bit(w);
      }
    }
    Recurse(0, 0, 0);
  }

  std::uint64_t code() const { return best_; }
  const std::array<int, kMaxCanonicalOrder>& order() const { return best_order_; }

 private:
  void Recurse(int j, std::uint64_t used, std::uint64_t prefix) {
    if (j == n_) {
      if (!have_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        have_ = true;
      }
      return;
    }
    const int placed_bits = j * (j + 1) / 2;
    std::uint64_t tried = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used & Bit(v)) || (twins_[v] & tried)) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < j; ++i) column = (column << 1) | ((g_.row(order_[i]) >> v) & 1U);
      const std::uint64_t next = (prefix << j) | column;
      if (have_ && next > (best_ >> (k_ - placed_bits))) continue;
      tried |= Bit(v);
      order_[j] = v;
      Recurse(j + 1, used | Bit(v), next);
    }
  }

  const Graph& g_;
  int n_;
  int k_;
  std::array<std::uint64_t, kMaxCanonicalOrder> twins_{};
  std::array<int, kMaxCanonicalOrder> order_{};
  std::array<int, kMaxCanonicalOrder> best_order_{};
  std::uint64_t best_ = 0;
  bool have_ = false;
};

bool Admits(GraphClass cls, const Graph& base, std::uint64_t nbrs) {
  switch (cls) {
    case GraphClass::kAll:
      return true;
    case GraphClass::kTriangleFree:
      for (std::uint64_t b = nbrs; b != 0; b &= b - 1) {
        if (base.row(std::countr_zero(b)) & nbrs) return false;
      }
      return true;
    case GraphClass::kAtMostOneCycle:
      break;
  }
  return true;
}

bool InClass(GraphClass cls, const Graph& g) {
  if (cls != GraphClass::kAtMostOneCycle) return true;
  return g.size() - g.order() + components(g).count <= 1;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  CheckCanonicalOrder(g);
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | ((g.row(i) >> j) & 1U);
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > kMaxCanonicalOrder) Fail(ErrorCode::kOutOfRange, "order out of range");
  const int k = CodeLength(n);
  if (k < 64 && (code >> k) != 0) Fail(ErrorCode::kInvalidArgument, "code too long for order");
  std::vector<std::uint64_t> rows(n, 0);
  int t = k;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> --t) & 1U) {
        rows[i] |= Bit(j);
        rows[j] |= Bit(i);
      }
    }
  }
  return Graph::FromAdjacency(std::move(rows));
}

std::uint64_t canonical_code(const Graph& g) {
  CheckCanonicalOrder(g);
  return CanonicalSearch(g).code();
}

Graph canonical_form(const Graph& g) {
  CheckCanonicalOrder(g);
  CanonicalSearch search(g);
  std::vector<int> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[search.order()[pos]] = pos;
  return relabel(g, perm);
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > kMaxLabeledOrder) {
    Fail(ErrorCode::kOutOfRange, "labeled enumeration limited to 0 <= n <= 7");
  }
  const std::uint64_t count = std::uint64_t{1} << CodeLength(n);
  for (std::uint64_t code = 0; code < count; ++code) visit(graph_from_code(n, code));
}

std::vector<Graph> enumerate_labeled_graphs(int n, bool dedup) {
  std::vector<Graph> out;
  if (!dedup) {
    for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
  }
  if (n < 0 || n > kMaxLabeledOrder) {
    Fail(ErrorCode::kOutOfRange, "labeled enumeration limited to 0 <= n <= 7");
  }
  return enumerate_graph_classes(n, GraphClass::kAll)[n];
}

std::string_view GraphClassName(GraphClass c) {
  switch (c) {
    case GraphClass::kAll:
      return "all";
    case GraphClass::kTriangleFree:
      return "triangle-free";
    case GraphClass::kAtMostOneCycle:
      return "at-most-one-cycle";
  }
  return "unknown";
}

GraphClass ParseGraphClass(std::string_view name) {
  for (GraphClass c : {GraphClass::kAll, GraphClass::kTriangleFree, GraphClass::kAtMostOneCycle}) {
    if (GraphClassName(c) == name) return c;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown graph class \"" + std::string(name) + "\"");
}

// Every graph in a hereditary class arises from a smaller member by adding
// one vertex, so extending each representative by every neighbourhood and
// canonicalizing reaches each isomorphism class.
std::vector<std::vector<Graph>> enumerate_graph_classes(int max_n, GraphClass cls) {
  const int cap = cls == GraphClass::kAll ? kMaxClassOrderAll : kMaxClassOrderFiltered;
  if (max_n < 0 || max_n > cap) {
    Fail(ErrorCode::kOutOfRange,
         "class enumeration limited to n <= " + std::to_string(cap) + " for this class");
  }
  std::vector<std::vector<Graph>> levels(1, std::vector<Graph>{Graph()});
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::uint64_t> codes;
    for (const Graph& base : levels.back()) {
      std::vector<std::uint64_t> rows(base.rows().begin(), base.rows().end());
      rows.push_back(0);
      for (std::uint64_t nbrs = 0; nbrs < Bit(n - 1); ++nbrs) {
        if (!Admits(cls, base, nbrs)) continue;
        for (int v = 0; v < n - 1; ++v) {
          rows[v] = base.row(v) | (((nbrs >> v) & 1U) << (n - 1));
        }
        rows[n - 1] = nbrs;
        Graph g = Graph::FromAdjacency(rows);
        if (InClass(cls, g)) codes.push_back(canonical_code(g));
      }
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Graph> level;
    level.reserve(codes.size());
    for (std::uint64_t c : codes) level.push_back(graph_from_code(n, c));
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace pairdom
