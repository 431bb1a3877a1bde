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

#include "pairdom/characterizations.hpp"

#include <stdexcept>

#include "pairdom/checks.hpp"
#include "pairdom/error.hpp"

namespace pairdom {

using Kind = FamilyLabel::Kind;

std::string_view MethodName(Method m) {
  switch (m) {
    case Method::kBruteForce:
      return "brute-force";
    case Method::kBipartite:
      return "thm-bipartite";
    case Method::kUnicyclic:
      return "thm-unicyclic";
    case Method::kGirth6:
      return "thm-girth6";
    case Method::kC3FreeCactus:
      return "thm-c3free-cactus";
  }
  return "unknown";
}

std::string_view OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kHolds:
      return "holds";
    case Outcome::kFails:
      return "fails";
    case Outcome::kNotApplicable:
      return "not-applicable";
    case Outcome::kSkipped:
      return "skipped";
  }
  return "unknown";
}

nlohmann::json Verdict::ToJson() const {
  nlohmann::json j;
  j["check_id"] = check_id;
  j["graph6"] = graph6;
  switch (outcome) {
    case Outcome::kHolds:
      j["holds"] = true;
      break;
    case Outcome::kFails:
      j["holds"] = false;
      break;
    default:
      j["holds"] = nullptr;
      j["status"] = std::string(OutcomeName(outcome));
      break;
  }
  if (witness) j["witness"] = *witness;
  if (!note.empty()) j["note"] = note;
  return j;
}

// ---------------------------------------------------------------------------
// Deciders

Decision decide_equality_bruteforce(const Graph& g) {
  if (g.has_isolated_vertex()) {
    Fail(ErrorCode::kUndefined, "paired domination is undefined with isolated vertices");
  }
  if (g.order() > kMaxPairedOrder) {
    Fail(ErrorCode::kGuardExceeded, "brute-force decision limited to n <= 20");
  }
  InvariantReport r = invariants(g);
  Decision d;
  d.equality_holds = *r.upper_gamma_pr == 2 * r.upper_gamma;
  d.method = Method::kBruteForce;
  d.evidence = r;
  return d;
}

std::vector<Method> applicable_fastpaths(const Graph& g) {
  std::vector<Method> out;
  if (g.order() == 0) return out;
  const ClassFlags flags = classify(g);
  const bool no_isolated = !g.has_isolated_vertex();
  if (no_isolated && (!flags.girth || *flags.girth >= 6)) out.push_back(Method::kGirth6);
  if (no_isolated && is_componentwise_c3_free_cactus(g)) out.push_back(Method::kC3FreeCactus);
  if (flags.unicyclic) out.push_back(Method::kUnicyclic);
  if (flags.connected && flags.bipartite && g.order() >= 2) out.push_back(Method::kBipartite);
  return out;
}

bool fastpath_decision(Method m, const FamilyLabel& family) {
  switch (m) {
    case Method::kGirth6:
      return family.kind == Kind::kMK2;
    case Method::kC3FreeCactus:
      return family.kind == Kind::kMK2 || family.kind == Kind::kC5 ||
             family.kind == Kind::kMK2PlusMC5;
    case Method::kUnicyclic:
      return family.kind == Kind::kC3 || family.kind == Kind::kC5 ||
             (family.kind == Kind::kSubdividedStarDelta && family.delta == 1);
    case Method::kBipartite:
      return family.kind == Kind::kMK2 && family.m == 1;
    case Method::kBruteForce:
      break;
  }
  throw std::logic_error("fastpath_decision: brute force has no family rule");
}

std::optional<Decision> decide_equality_fastpath(const Graph& g) {
  const std::vector<Method> methods = applicable_fastpaths(g);
  if (methods.empty()) return std::nullopt;
  const FamilyLabel family = recognize_family(g);
  const bool first = fastpath_decision(methods.front(), family);
  for (Method m : methods) {
    if (fastpath_decision(m, family) != first) {
      throw std::logic_error("characterizations disagree on " + encode_graph6(g));
    }
  }
  Decision d;
  d.equality_holds = first;
  d.method = methods.front();
  d.evidence = family;
  return d;
}

// ---------------------------------------------------------------------------
// Single-graph verifiers

Verdict check_independent_gamma_set(const Graph& g) {
  GraphContext ctx(g);
  return run_check("independent-gamma-set", ctx);
}

Verdict check_unicyclic_gamma_bound(const Graph& g) {
  if (!classify(g).unicyclic) {
    Fail(ErrorCode::kInvalidArgument, "graph is not connected unicyclic");
  }
  GraphContext ctx(g);
  return run_check("unicyclic-gamma-bound", ctx);
}

std::string_view StructuralLemmaId(StructuralLemma which) {
  switch (which) {
    case StructuralLemma::kLeaf:
      return "struct-leaf";
    case StructuralLemma::kTwoNeighbors:
      return "struct-two-nbrs";
    case StructuralLemma::kPartners:
      return "struct-partners";
    case StructuralLemma::kNoCommon:
      return "struct-no-common";
    case StructuralLemma::kMaxDegree:
      return "struct-maxdeg";
    case StructuralLemma::kOneSide:
      return "struct-one-side";
    case StructuralLemma::kOutsideIndependent:
      return "struct-outside-indep";
  }
  return "unknown";
}

Verdict check_structural_lemma(const Graph& g, StructuralLemma which) {
  GraphContext ctx(g);
  return run_check(StructuralLemmaId(which), ctx);
}

// ---------------------------------------------------------------------------
// Hunt

void HuntReport::Add(const HuntReport& other) {
  scanned += other.scanned;
  c3_free += other.c3_free;
  considered += other.considered;
  skipped += other.skipped;
  satisfiers += other.satisfiers;
  of_form += other.of_form;
  cactus_satisfiers += other.cactus_satisfiers;
  cactus_not_of_form += other.cactus_not_of_form;
  non_cactus_satisfiers += other.non_cactus_satisfiers;
  satisfier_list.insert(satisfier_list.end(), other.satisfier_list.begin(),
                        other.satisfier_list.end());
  exceptions.insert(exceptions.end(), other.exceptions.begin(), other.exceptions.end());
}

namespace {

nlohmann::json RecordJson(const HuntRecord& r) {
  return {{"graph6", r.graph6},         {"n", r.order},
          {"upper_gamma", r.upper_gamma}, {"upper_gamma_pr", r.upper_gamma_pr},
          {"cactus", r.cactus},         {"of_form", r.of_form},
          {"family", r.family.ToString()}};
}

}  // namespace

nlohmann::json HuntReport::ToJson() const {
  nlohmann::json sat = nlohmann::json::array();
  for (const auto& r : satisfier_list) sat.push_back(RecordJson(r));
  nlohmann::json exc = nlohmann::json::array();
  for (const auto& r : exceptions) exc.push_back(RecordJson(r));
  return {{"scanned", scanned},
          {"c3_free", c3_free},
          {"considered", considered},
          {"skipped", skipped},
          {"satisfiers", satisfiers},
          {"of_form", of_form},
          {"cactus_satisfiers", cactus_satisfiers},
          {"cactus_not_of_form", cactus_not_of_form},
          {"non_cactus_satisfiers", non_cactus_satisfiers},
          {"satisfier_list", sat},
          {"exceptions", exc},
          {"note",
           "evidence only: satisfiers outside m1K2+m2C5 are listed verbatim and not "
           "interpreted"}};
}

HuntReport hunt_one(const Graph& g) {
  HuntReport out;
  out.scanned = 1;
  const auto gir = girth(g);
  if (gir && *gir == 3) return out;
  out.c3_free = 1;
  if (g.order() == 0 || g.has_isolated_vertex()) return out;
  out.considered = 1;
  if (g.order() > kMaxPairedOrder) {
    out.skipped = 1;
    return out;
  }
  const InvariantReport r = invariants(g);
  if (*r.upper_gamma_pr != 2 * r.upper_gamma) return out;

  HuntRecord rec;
  rec.graph6 = encode_graph6(g);
  rec.order = g.order();
  rec.upper_gamma = r.upper_gamma;
  rec.upper_gamma_pr = *r.upper_gamma_pr;
  rec.cactus = every_component(g, [](const Graph& c) { return is_cactus(c); });
  rec.family = recognize_family(g);
  rec.of_form = fastpath_decision(Method::kC3FreeCactus, rec.family);

  out.satisfiers = 1;
  if (rec.of_form) out.of_form = 1;
  if (rec.cactus) {
    out.cactus_satisfiers = 1;
    if (!rec.of_form) out.cactus_not_of_form = 1;
  } else {
    out.non_cactus_satisfiers = 1;
  }
  out.satisfier_list.push_back(rec);
  if (!rec.of_form) out.exceptions.push_back(rec);
  return out;
}

HuntReport hunt_c3free_counterexamples(std::span<const Graph> stream) {
  HuntReport total;
  for (const Graph& g : stream) total.Add(hunt_one(g));
  return total;
}

}  // namespace pairdom
