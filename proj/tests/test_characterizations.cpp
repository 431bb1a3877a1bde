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

#include "oracles.hpp"
#include "pairdom/characterizations.hpp"
#include "pairdom/enumerate.hpp"
#include "pairdom/error.hpp"
#include "pairdom/families.hpp"
#include "streams.hpp"

using namespace pairdom;
using Kind = FamilyLabel::Kind;

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

const Graph kK23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});

bool OracleEquality(const Graph& g) {
  const auto r = oracle::ComputeInvariants(oracle::FromGraph(g));
  return *r.upper_gamma_pr == 2 * r.upper_gamma;
}

}  // namespace

TEST_CASE("brute-force decision") {
  CHECK(decide_equality_bruteforce(make_complete(2)).equality_holds);
  CHECK(decide_equality_bruteforce(make_cycle(5)).equality_holds);
  const Decision p4 = decide_equality_bruteforce(make_path(4));
  CHECK_FALSE(p4.equality_holds);
  CHECK(p4.method == Method::kBruteForce);
  const auto& r = std::get<InvariantReport>(p4.evidence);
  CHECK(r.upper_gamma == 2);
  CHECK(*r.upper_gamma_pr == 2);
  CHECK(CodeOf([] { decide_equality_bruteforce(Graph(3, {{0, 1}})); }) == ErrorCode::kUndefined);
  CHECK(CodeOf([] { decide_equality_bruteforce(make_path(21)); }) == ErrorCode::kGuardExceeded);
}

TEST_CASE("fast-path decisions and precedence") {
  const auto bip = decide_equality_fastpath(kK23);
  REQUIRE(bip);
  CHECK(bip->method == Method::kBipartite);
  CHECK_FALSE(bip->equality_holds);

  const auto star = decide_equality_fastpath(make_subdivided_star(4, 1));
  REQUIRE(star);
  CHECK(star->method == Method::kUnicyclic);
  CHECK(star->equality_holds);

  const auto cactus = decide_equality_fastpath(parse_family_spec("union:K2*2+C5*1"));
  REQUIRE(cactus);
  CHECK(cactus->method == Method::kC3FreeCactus);
  CHECK(cactus->equality_holds);
  CHECK(std::get<FamilyLabel>(cactus->evidence) == FamilyLabel::MK2PlusMC5(2, 1));

  const auto tree = decide_equality_fastpath(make_path(4));
  REQUIRE(tree);
  CHECK(tree->method == Method::kGirth6);
  CHECK_FALSE(tree->equality_holds);

  CHECK(applicable_fastpaths(make_path(4)) ==
        std::vector<Method>{Method::kGirth6, Method::kC3FreeCactus, Method::kBipartite});
  CHECK_FALSE(decide_equality_fastpath(make_complete(4)).has_value());
  CHECK_FALSE(decide_equality_fastpath(Graph()).has_value());
  CHECK_FALSE(decide_equality_fastpath(Graph(3, {{0, 1}})).has_value());
  CHECK(MethodName(Method::kC3FreeCactus) == "thm-c3free-cactus");
}

TEST_CASE("fast paths agree with the oracle wherever they apply") {
  int applicable = 0;
  for (const Graph& g : streams::AllGraphs(7)) {
    const auto fast = decide_equality_fastpath(g);
    if (!fast) continue;
    ++applicable;
    CAPTURE(encode_graph6(g));
    CHECK(fast->equality_holds == OracleEquality(g));
    CHECK(fast->equality_holds == decide_equality_bruteforce(g).equality_holds);
  }
  CHECK(applicable > 100);
}

TEST_CASE("equality satisfiers per class match the named families") {
  for (const Graph& g : streams::AllGraphs(7)) {
    if (g.order() == 0 || g.has_isolated_vertex()) continue;
    const ClassFlags f = classify(g);
    const bool eq = OracleEquality(g);
    const FamilyLabel label = recognize_family(g);
    CAPTURE(encode_graph6(g));
    if (f.connected && f.bipartite) CHECK(eq == (label == FamilyLabel::MK2(1)));
    if (f.unicyclic) {
      CHECK(eq == (label.kind == Kind::kC3 || label.kind == Kind::kC5 ||
                   (label.kind == Kind::kSubdividedStarDelta && label.delta == 1)));
    }
    if (!f.girth || *f.girth >= 6) CHECK(eq == (label.kind == Kind::kMK2));
    if (is_componentwise_c3_free_cactus(g)) {
      CHECK(eq == (label.kind == Kind::kMK2 || label.kind == Kind::kC5 ||
                   label.kind == Kind::kMK2PlusMC5));
    }
  }
}

TEST_CASE("independent gamma set check") {
  CHECK(check_independent_gamma_set(make_cycle(5)).outcome == Outcome::kHolds);
  CHECK(check_independent_gamma_set(make_complete(2)).outcome == Outcome::kHolds);
  CHECK(check_independent_gamma_set(parse_family_spec("mK2:2")).outcome == Outcome::kHolds);
  CHECK(check_independent_gamma_set(make_path(4)).outcome == Outcome::kNotApplicable);
}

TEST_CASE("unicyclic gamma bound check") {
  for (int n : {3, 4, 5}) CHECK(check_unicyclic_gamma_bound(make_cycle(n)).outcome == Outcome::kHolds);
  CHECK(CodeOf([] { check_unicyclic_gamma_bound(make_path(4)); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("structural checks") {
  CHECK(check_structural_lemma(make_cycle(5), StructuralLemma::kTwoNeighbors).outcome ==
        Outcome::kHolds);
  CHECK(check_structural_lemma(make_complete(2), StructuralLemma::kOutsideIndependent).outcome ==
        Outcome::kHolds);
  CHECK(check_structural_lemma(parse_family_spec("union:C5*2"), StructuralLemma::kMaxDegree)
            .outcome == Outcome::kHolds);
  CHECK(check_structural_lemma(make_cycle(3), StructuralLemma::kLeaf).outcome ==
        Outcome::kNotApplicable);
  CHECK(check_structural_lemma(make_path(4), StructuralLemma::kLeaf).outcome ==
        Outcome::kNotApplicable);
  CHECK(StructuralLemmaId(StructuralLemma::kOutsideIndependent) == "struct-outside-indep");
}

TEST_CASE("verdict serialization") {
  Verdict v;
  v.check_id = "pr-at-most-twice-gamma";
  v.graph6 = "Dhc";
  v.outcome = Outcome::kHolds;
  CHECK(v.ToJson() == nlohmann::json{{"check_id", "pr-at-most-twice-gamma"}, {"graph6", "Dhc"},
                                     {"holds", true}});
  v.outcome = Outcome::kFails;
  v.witness = nlohmann::json{{"x", 1}};
  CHECK(v.ToJson()["holds"] == false);
  CHECK(v.ToJson()["witness"]["x"] == 1);
  v.outcome = Outcome::kNotApplicable;
  v.witness.reset();
  v.note = "outside the class";
  const auto j = v.ToJson();
  CHECK(j["holds"].is_null());
  CHECK(j["status"] == "not-applicable");
  CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("hunt over small streams") {
  const HuntReport empty = hunt_c3free_counterexamples({});
  CHECK(empty.scanned == 0);
  CHECK(empty.satisfiers == 0);
  CHECK(empty.satisfier_list.empty());

  const std::vector<Graph> c5{make_cycle(5)};
  const HuntReport one = hunt_c3free_counterexamples(c5);
  CHECK(one.satisfiers == 1);
  CHECK(one.of_form == 1);
  CHECK(one.exceptions.empty());
  CHECK(one.satisfier_list.front().family == FamilyLabel::C5());

  const auto& all = streams::AllGraphs(6);
  const HuntReport r = hunt_c3free_counterexamples(all);
  CHECK(r.scanned == static_cast<long long>(all.size()));
  std::vector<std::string> found;
  for (const auto& rec : r.satisfier_list) {
    found.push_back(encode_graph6(canonical_form(parse_graph6(rec.graph6))));
  }
  for (const char* spec : {"mK2:1", "mK2:2", "mK2:3", "C5"}) {
    const std::string g6 = encode_graph6(canonical_form(parse_family_spec(spec)));
    CHECK(std::find(found.begin(), found.end(), g6) != found.end());
  }
  CHECK(found.size() == 4);
  CHECK(r.satisfiers == r.cactus_satisfiers + r.non_cactus_satisfiers);
  CHECK(r.cactus_not_of_form == 0);
  CHECK(r.ToJson()["note"].get<std::string>().find("evidence") != std::string::npos);

  const std::vector<Graph> triangle{make_cycle(3)};
  const HuntReport t = hunt_c3free_counterexamples(triangle);
  CHECK(t.scanned == 1);
  CHECK(t.c3_free == 0);
}
