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


#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pairdom/error.hpp"
#include "pairdom/families.hpp"
#include "pairdom/graph.hpp"
#include "streams.hpp"

using namespace pairdom;

namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

Graph RandomGraph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("build_graph") {
  const Graph k2(2, {{0, 1}});
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.degree(0) == 1);
  CHECK(k2.degree(1) == 1);

  const Graph c5 = make_cycle(5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  const Graph dup(3, {{0, 1}, {0, 1}});
  CHECK(dup.size() == 1);
  CHECK(dup.degree(2) == 0);
  CHECK(dup.has_isolated_vertex());

  const Graph reversed(3, {{1, 0}});
  CHECK(reversed == Graph(3, {{0, 1}}));

  CHECK(CodeOf([] { Graph(2, {{0, 0}}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Graph(2, {{0, 2}}); }) == ErrorCode::kOutOfRange);
  CHECK(CodeOf([] { Graph(2, {{-1, 0}}); }) == ErrorCode::kOutOfRange);
  CHECK(CodeOf([] { Graph(kMaxOrder + 1, {}); }) == ErrorCode::kOutOfRange);
  CHECK(CodeOf([] { Graph::FromAdjacency({0b10, 0b00}); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Graph::FromAdjacency({0b01}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("vertex sets") {
  const VertexSet a = VertexSet::Of(5, {0, 2});
  CHECK(a.ToString() == "{0,2}");
  CHECK(a.size() == 2);
  CHECK(a.with(4).elements() == std::vector<int>{0, 2, 4});
  CHECK(a.without(0).front() == 2);
  CHECK(a.complement() == VertexSet::Of(5, {1, 3, 4}));
  CHECK((a | VertexSet::Of(5, {1})) == VertexSet::Of(5, {0, 1, 2}));
  CHECK((a & VertexSet::Of(5, {2, 3})) == VertexSet::Of(5, {2}));
  CHECK((a - VertexSet::Of(5, {2})) == VertexSet::Of(5, {0}));
  CHECK(VertexSet::Of(5, {0}) < VertexSet::Of(5, {0, 1}));
  CHECK(VertexSet::Of(5, {0, 1}) < VertexSet::Of(5, {0, 2}));
  CHECK(VertexSet::Of(5, {0, 2}) < VertexSet::Of(5, {1}));
  CHECK_FALSE(VertexSet::Of(5, {1}) < VertexSet::Of(5, {0, 4}));
  CHECK(CodeOf([] { VertexSet::Of(3, {3}); }) == ErrorCode::kOutOfRange);
  CHECK(CodeOf([] { (void)(VertexSet::Of(3, {0}) | VertexSet::Of(4, {0})); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("lexicographic order agrees with sorted element lists") {
  std::vector<VertexSet> sets;
  for (std::uint64_t b = 0; b < 64; ++b) sets.emplace_back(6, b);
  for (const auto& x : sets) {
    for (const auto& y : sets) CHECK((x < y) == (x.elements() < y.elements()));
  }
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(make_cycle(5), 0) == VertexSet::Of(5, {1, 4}));
  CHECK(neighborhood(make_complete(2), 0) == VertexSet::Of(2, {1}));
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(neighborhood(star, 0) == VertexSet::Of(4, {1, 2, 3}));
  CHECK(CodeOf([&] { neighborhood(star, 4); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("distance layers") {
  CHECK(distance_layer(make_cycle(5), 0, 2) == VertexSet::Of(5, {2, 3}));
  CHECK(distance_layer(make_complete(2), 0, 2).empty());
  CHECK(distance_layer(make_path(4), 0, 3) == VertexSet::Of(4, {3}));
  CHECK(distance_layer(make_path(4), 0, 0) == VertexSet::Of(4, {0}));
}

TEST_CASE("girth") {
  CHECK(girth(make_cycle(5)) == 5);
  CHECK_FALSE(girth(parse_family_spec("mK2:3")).has_value());
  CHECK(girth(make_subdivided_star(2, 1)) == 3);
  CHECK(girth(make_subdivided_star(0, 2)) == 3);
  CHECK(girth(parse_graph6("Fs\\zw")).has_value());
}

TEST_CASE("components") {
  const auto two = components(parse_family_spec("mK2:2"));
  CHECK(two.count == 2);
  CHECK(two.assignment == std::vector<int>{0, 0, 1, 1});
  CHECK(components(make_cycle(5)).count == 1);
  const auto none = components(Graph());
  CHECK(none.count == 0);
  CHECK_FALSE(is_connected(Graph()));
  CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("graph6 decoding") {
  CHECK(parse_graph6("A_") == make_complete(2));
  CHECK(parse_graph6("D??") == Graph(5, {}));
  CHECK(parse_graph6("?") == Graph());
  CHECK(parse_graph6("@") == Graph(1, {}));
  CHECK(parse_graph6("Dhc") == make_cycle(5));
  CHECK(parse_graph6("A_\r\n") == make_complete(2));
  CHECK(CodeOf([] { parse_graph6(""); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { parse_graph6("D?"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { parse_graph6("D???"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { parse_graph6("A "); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { parse_graph6("~??~"); }) == ErrorCode::kParse);
}

TEST_CASE("graph6 encoding matches the reference encoder") {
  CHECK(encode_graph6(make_complete(2)) == "A_");
  CHECK(encode_graph6(Graph(1, {})) == "@");
  CHECK(encode_graph6(Graph(5, {})) == "D??");
  for (const Graph& g : streams::AllGraphs(6)) {
    CHECK(encode_graph6(g) == oracle::Graph6(oracle::FromGraph(g)));
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = RandomGraph(rng, std::uniform_int_distribution(0, kMaxOrder)(rng), 0.3);
    const std::string line = encode_graph6(g);
    CHECK(line == oracle::Graph6(oracle::FromGraph(g)));
    CHECK(parse_graph6(line) == g);
  }
}

TEST_CASE("edge lists") {
  std::istringstream in("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n\n2 1\n0 1\n");
  const auto graphs = parse_edge_lists(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == make_cycle(5));
  CHECK(graphs[1] == make_complete(2));
  std::istringstream round(format_edge_list(make_cycle(5)));
  CHECK(parse_edge_lists(round).front() == make_cycle(5));
  std::istringstream bad("3 2\n0 1\n");
  CHECK(CodeOf([&] { parse_edge_lists(bad); }) == ErrorCode::kParse);
}

TEST_CASE("degree sum equals twice the edge count") {
  for (const Graph& g : streams::AllGraphs(7)) {
    int sum = 0;
    for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("distance layers partition the reachable vertices") {
  for (const Graph& g : streams::AllGraphs(6)) {
    for (int v = 0; v < g.order(); ++v) {
      VertexSet seen = VertexSet::Empty(g.order());
      for (int i = 0; i < g.order(); ++i) {
        const VertexSet layer = distance_layer(g, v, i);
        CHECK_FALSE(layer.intersects(seen));
        seen = seen | layer;
      }
      CHECK(seen == components(g).members()[components(g).assignment[v]]);
      CHECK(distance_layer(g, v, 1) == neighborhood(g, v));
    }
  }
}

TEST_CASE("girth against explicit cycle enumeration") {
  for (const Graph& g : streams::AllGraphs(8)) {
    const auto m = oracle::FromGraph(g);
    const auto expected = oracle::Girth(m);
    REQUIRE(girth(g) == expected);
    const int c = components(g).count;
    CHECK(expected.has_value() == (g.size() > g.order() - c));
  }
}

TEST_CASE("component count against union-find") {
  for (const Graph& g : streams::AllGraphs(7)) {
    CHECK(components(g).count == oracle::ComponentCount(oracle::FromGraph(g)));
  }
}

TEST_CASE("relabelling preserves every invariant") {
  std::mt19937 rng(11);
  for (const Graph& g : streams::AllGraphs(6)) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    CHECK(h.size() == g.size());
    CHECK(girth(h) == girth(g));
    CHECK(components(h).count == components(g).count);
    for (int v = 0; v < g.order(); ++v) CHECK(h.degree(perm[v]) == g.degree(v));
  }
}

TEST_CASE("disjoint union adds components and edges") {
  const Graph a = make_cycle(5);
  const Graph b = make_path(3);
  const Graph u = disjoint_union(a, b);
  CHECK(u.order() == 8);
  CHECK(u.size() == a.size() + b.size());
  CHECK(components(u).count == 2);
  CHECK(induced_subgraph(u, VertexSet::Of(8, {5, 6, 7})) == b);
}
