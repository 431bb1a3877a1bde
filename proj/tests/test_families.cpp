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

#include <numeric>

#include "oracles.hpp"
#include "pairdom/error.hpp"
#include "pairdom/families.hpp"
#include "streams.hpp"

using namespace pairdom;
using Kind = FamilyLabel::Kind;

namespace {

// Every family member with at most max_n vertices, in recognition precedence.
std::vector<std::pair<FamilyLabel, Graph>> FamilyMembers(int max_n) {
  std::vector<std::pair<FamilyLabel, Graph>> out;
  out.emplace_back(FamilyLabel::C3(), make_cycle(3));
  out.emplace_back(FamilyLabel::C5(), make_cycle(5));
  for (int m = 1; 2 * m <= max_n; ++m) {
    out.emplace_back(FamilyLabel::MK2(m), make_union({{make_complete(2), m}}));
  }
  for (int t = 0; 1 + 2 * t <= max_n; ++t) {
    for (int d = 0; 1 + 2 * t + 2 * d <= max_n; ++d) {
      if (t + d > 0) out.emplace_back(FamilyLabel::SubdividedStarDelta(t, d), make_subdivided_star(t, d));
    }
  }
  for (int a = 0; 2 * a + 5 <= max_n; ++a) {
    for (int b = 1; 2 * a + 5 * b <= max_n; ++b) {
      out.emplace_back(FamilyLabel::MK2PlusMC5(a, b),
                       make_union({{make_complete(2), a}, {make_cycle(5), b}}));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("subdivided star construction") {
  CHECK(make_subdivided_star(1, 0) == make_path(3));
  const Graph s21 = make_subdivided_star(2, 1);
  CHECK(s21.order() == 7);
  CHECK(girth(s21) == 3);
  CHECK(oracle::Cycles(oracle::FromGraph(s21)).size() == 1);
  const Graph s30 = make_subdivided_star(3, 0);
  CHECK(s30.order() == 7);
  CHECK(s30.degree(0) == 3);
  CHECK_THROWS_AS(make_subdivided_star(0, 0), Error);
  CHECK_THROWS_AS(make_subdivided_star(-1, 2), Error);
  CHECK(make_subdivided_star(0, 1) == make_cycle(3));
}

TEST_CASE("unions and family specs") {
  const Graph three = make_union({{make_complete(2), 3}});
  CHECK(three.order() == 6);
  CHECK(three.size() == 3);
  const Graph mixed = make_union({{make_complete(2), 1}, {make_cycle(5), 1}});
  CHECK(mixed.order() == 7);
  CHECK(components(mixed).count == 2);
  CHECK(make_union({}).order() == 0);

  CHECK(parse_family_spec("mK2:3") == three);
  CHECK(parse_family_spec("C5") == make_cycle(5));
  CHECK(parse_family_spec("star:t=3,d=1") == make_subdivided_star(3, 1));
  CHECK(parse_family_spec("union:K2*1+C5*1") == mixed);
  CHECK(parse_family_spec("union:").order() == 0);
  CHECK(parse_family_spec("P4") == make_path(4));
  CHECK(parse_family_spec("star:t=1") == make_path(3));
  CHECK(parse_family_spec("K4") == make_complete(4));
  for (std::string bad : {"", "mK2:0", "mK2:x", "star:d=1", "star:t=1,q=2", "C2", "union:K2*", "Q5", "star:t=0,d=0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_family_spec(bad), Error);
  }
}

TEST_CASE("classification of named graphs") {
  const ClassFlags c5 = classify(make_cycle(5));
  CHECK(c5.connected);
  CHECK_FALSE(c5.bipartite);
  CHECK(c5.unicyclic);
  CHECK(c5.cactus);
  CHECK(c5.c3_free);
  CHECK(c5.girth == 5);

  const ClassFlags star = classify(make_subdivided_star(2, 1));
  CHECK(star.unicyclic);
  CHECK(star.cactus);
  CHECK_FALSE(star.c3_free);
  CHECK(star.girth == 3);

  const ClassFlags two = classify(parse_family_spec("mK2:2"));
  CHECK_FALSE(two.connected);
  CHECK(two.bipartite);
  CHECK_FALSE(two.unicyclic);
  CHECK_FALSE(two.cactus);
  CHECK_FALSE(two.girth.has_value());
  CHECK(is_componentwise_c3_free_cactus(parse_family_spec("mK2:2")));
  CHECK_FALSE(is_componentwise_c3_free_cactus(Graph()));
  CHECK_FALSE(is_componentwise_c3_free_cactus(make_subdivided_star(1, 1)));
}

TEST_CASE("class flags against cycle enumeration") {
  for (const Graph& g : streams::AllGraphs(7)) {
    const auto m = oracle::FromGraph(g);
    const ClassFlags f = classify(g);
    const auto cycles = oracle::Cycles(m);
    const bool connected = oracle::ComponentCount(m) == 1;
    CHECK(f.connected == connected);
    CHECK(f.bipartite == oracle::Bipartite(m));
    CHECK(f.unicyclic == (connected && cycles.size() == 1));
    CHECK(f.unicyclic == (connected && g.size() == g.order()));
    CHECK(f.cactus == oracle::Cactus(m));
    CHECK(f.girth == oracle::Girth(m));
    CHECK(f.c3_free == (f.girth != 3));
  }
}

TEST_CASE("unicyclic iff connected with one cycle, n = 8") {
  for (const Graph& g : streams::AllGraphs(8)) {
    if (g.order() != 8) continue;
    const auto m = oracle::FromGraph(g);
    const bool connected = oracle::ComponentCount(m) == 1;
    CHECK(classify(g).unicyclic == (connected && oracle::Cycles(m).size() == 1));
  }
}

TEST_CASE("family recognition") {
  CHECK(recognize_family(parse_family_spec("mK2:4")) == FamilyLabel::MK2(4));
  CHECK(recognize_family(make_subdivided_star(3, 2)) == FamilyLabel::SubdividedStarDelta(3, 2));
  CHECK(recognize_family(parse_family_spec("union:K2*2+C5*1")) == FamilyLabel::MK2PlusMC5(2, 1));
  CHECK(recognize_family(make_cycle(3)) == FamilyLabel::C3());
  CHECK(recognize_family(make_cycle(5)) == FamilyLabel::C5());
  CHECK(recognize_family(make_path(4)).kind == Kind::kNone);
  CHECK(recognize_family(Graph()).kind == Kind::kNone);
  CHECK(FamilyLabel::MK2(3).ToString() == "mK2(3)");
  CHECK(FamilyLabel::SubdividedStarDelta(3, 1).ToString() == "K1,t*^D(t=3,D=1)");
  CHECK(FamilyLabel::MK2PlusMC5(2, 1).ToString() == "mK2+mC5(2,1)");
}

TEST_CASE("family recognition against isomorphism to constructed members") {
  const auto members = FamilyMembers(7);
  for (const Graph& g : streams::AllGraphs(7)) {
    const auto m = oracle::FromGraph(g);
    FamilyLabel expected;
    for (const auto& [label, h] : members) {
      if (h.order() == g.order() && h.size() == g.size() && oracle::Isomorphic(m, oracle::FromGraph(h))) {
        expected = label;
        break;
      }
    }
    CAPTURE(encode_graph6(g));
    CHECK(recognize_family(g) == expected);
  }
}

TEST_CASE("recognition is invariant under relabelling") {
  for (const auto& [label, h] : FamilyMembers(12)) {
    std::vector<int> perm(h.order());
    for (int v = 0; v < h.order(); ++v) perm[v] = (v * 5 + 3) % h.order();
    if (std::gcd(5, h.order()) != 1) std::iota(perm.rbegin(), perm.rend(), 0);
    CHECK(recognize_family(relabel(h, perm)) == recognize_family(h));
  }
}
