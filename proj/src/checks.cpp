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

#include "pairdom/checks.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "pairdom/error.hpp"
#include "pairdom/matching.hpp"
#include "pairdom/reference.hpp"

namespace pairdom {

using Kind = FamilyLabel::Kind;
using nlohmann::json;

// ---------------------------------------------------------------------------
// GraphContext

GraphContext::GraphContext(Graph g) : graph_(std::move(g)), graph6_(encode_graph6(graph_)) {}

const ClassFlags& GraphContext::flags() {
  if (!flags_) flags_ = classify(graph_);
  return *flags_;
}

const FamilyLabel& GraphContext::family() {
  if (!family_) family_ = recognize_family(graph_);
  return *family_;
}

bool GraphContext::componentwise_c3_free_cactus() {
  if (!cactus_) cactus_ = is_componentwise_c3_free_cactus(graph_);
  return *cactus_;
}

const DominationProfile& GraphContext::profile() {
  if (!profile_) {
    if (!solvable()) {
      Fail(ErrorCode::kGuardExceeded, "exhaustive solver limited to n <= 20");
    }
    profile_ = domination_profile(graph_);
  }
  return *profile_;
}

bool GraphContext::equality_holds() {
  const auto& r = profile().report;
  if (!r.paired_defined()) Fail(ErrorCode::kUndefined, "paired invariants undefined");
  return *r.upper_gamma_pr == 2 * r.upper_gamma;
}

namespace {

// ---------------------------------------------------------------------------
// Verdict helpers

struct Eval {
  Verdict v;

  Verdict Holds() && {
    v.outcome = Outcome::kHolds;
    return std::move(v);
  }
  Verdict Fails(json witness) && {
    v.outcome = Outcome::kFails;
    v.witness = std::move(witness);
    return std::move(v);
  }
  Verdict NotApplicable(std::string note) && {
    v.outcome = Outcome::kNotApplicable;
    v.note = std::move(note);
    return std::move(v);
  }
  Verdict Skipped(std::string note) && {
    v.outcome = Outcome::kSkipped;
    v.note = std::move(note);
    return std::move(v);
  }
};

json SetJson(const VertexSet& s) { return s.elements(); }
json SetJson(std::uint64_t bits, int n) { return VertexSet(n, bits).elements(); }

json MatchingJson(const Matching& m) {
  json out = json::array();
  for (const auto& [u, v] : m.pairs) out.push_back({u, v});
  return out;
}

std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

bool NoIsolated(GraphContext& ctx) {
  return ctx.graph().order() >= 1 && !ctx.graph().has_isolated_vertex();
}

bool ConnectedAtLeast3(GraphContext& ctx) {
  return ctx.graph().order() >= 3 && ctx.flags().connected;
}

int DegreeIn(const Graph& g, int v, std::uint64_t s) { return std::popcount(g.row(v) & s); }

using CheckFn = std::function<Verdict(GraphContext&, Eval)>;

// ---------------------------------------------------------------------------
// Bounds relating Γ_pr to the order

Verdict PrEqualsN(GraphContext& ctx, Eval e) {
  if (!NoIsolated(ctx)) return std::move(e).NotApplicable("needs n >= 1 and no isolated vertex");
  const int n = ctx.graph().order();
  const int pr = *ctx.profile().report.upper_gamma_pr;
  const bool is_mk2 = ctx.family().kind == Kind::kMK2;
  if ((pr == n) == is_mk2) return std::move(e).Holds();
  return std::move(e).Fails(
      {{"n", n}, {"upper_gamma_pr", pr}, {"family", ctx.family().ToString()}});
}

Verdict PrAtMostNMinus1(GraphContext& ctx, Eval e) {
  if (!ConnectedAtLeast3(ctx)) return std::move(e).NotApplicable("needs connected, n >= 3");
  const int n = ctx.graph().order();
  const int pr = *ctx.profile().report.upper_gamma_pr;
  if (pr <= n - 1) return std::move(e).Holds();
  return std::move(e).Fails({{"n", n}, {"upper_gamma_pr", pr},
                             {"witness_set", SetJson(*ctx.profile().report.upper_gamma_pr_witness)}});
}

Verdict PrEqualsNMinus1(GraphContext& ctx, Eval e) {
  if (!ConnectedAtLeast3(ctx)) return std::move(e).NotApplicable("needs connected, n >= 3");
  const int n = ctx.graph().order();
  const int pr = *ctx.profile().report.upper_gamma_pr;
  const Kind k = ctx.family().kind;
  const bool in_family = k == Kind::kC3 || k == Kind::kC5 || k == Kind::kSubdividedStarDelta;
  if ((pr == n - 1) == in_family) return std::move(e).Holds();
  return std::move(e).Fails(
      {{"n", n}, {"upper_gamma_pr", pr}, {"family", ctx.family().ToString()}});
}

// ---------------------------------------------------------------------------
// Necessary conditions for minimal paired dominating sets

Verdict EpnPairRemoval(GraphContext& ctx, Eval e) {
  if (!ConnectedAtLeast3(ctx)) return std::move(e).NotApplicable("needs connected, n >= 3");
  const Graph& g = ctx.graph();
  const int n = g.order();
  for (const auto& s : *ctx.profile().minimal_paired) {
    const auto members = s.elements();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const int u = members[i];
        const int v = members[j];
        const std::uint64_t rest = s.bits() & ~Bit(u) & ~Bit(v);
        const bool dominates_pair = (g.row(u) & rest) != 0 && (g.row(v) & rest) != 0;
        if (!dominates_pair || !detail::HasPerfectMatching(g.rows(), rest)) continue;
        if (epn_pair(g, u, v, s).empty()) {
          return std::move(e).Fails({{"S", SetJson(s)}, {"u", u}, {"v", v},
                                     {"rest", SetJson(rest, n)}});
        }
      }
    }
  }
  return std::move(e).Holds();
}

Verdict EpnMatchedPair(GraphContext& ctx, Eval e) {
  if (!ConnectedAtLeast3(ctx)) return std::move(e).NotApplicable("needs connected, n >= 3");
  const Graph& g = ctx.graph();
  for (const auto& s : *ctx.profile().minimal_paired) {
    for (const auto& m : all_perfect_matchings(g, s)) {
      for (const auto& [u, v] : m.pairs) {
        if (DegreeIn(g, u, s.bits()) < 2 || DegreeIn(g, v, s.bits()) < 2) continue;
        if (epn_pair(g, u, v, s).empty()) {
          return std::move(e).Fails(
              {{"S", SetJson(s)}, {"matching", MatchingJson(m)}, {"u", u}, {"v", v}});
        }
      }
    }
  }
  return std::move(e).Holds();
}

Verdict MdsInsidePds(GraphContext& ctx, Eval e) {
  if (ctx.graph().has_isolated_vertex()) return std::move(e).NotApplicable("isolated vertex");
  const auto& prof = ctx.profile();
  for (const auto& p : *prof.minimal_paired) {
    const bool found = std::any_of(
        prof.minimal_dominating.begin(), prof.minimal_dominating.end(),
        [&](const VertexSet& d) { return d.is_subset_of(p) && 2 * d.size() >= p.size(); });
    if (!found) return std::move(e).Fails({{"P", SetJson(p)}});
  }
  return std::move(e).Holds();
}

Verdict PrAtMostTwiceGamma(GraphContext& ctx, Eval e) {
  if (ctx.graph().has_isolated_vertex()) return std::move(e).NotApplicable("isolated vertex");
  const auto& r = ctx.profile().report;
  if (*r.upper_gamma_pr <= 2 * r.upper_gamma) return std::move(e).Holds();
  return std::move(e).Fails({{"upper_gamma", r.upper_gamma},
                             {"upper_gamma_pr", *r.upper_gamma_pr},
                             {"witness_set", SetJson(*r.upper_gamma_pr_witness)}});
}

Verdict GammaAtLeastAlpha(GraphContext& ctx, Eval e) {
  const int alpha = independence_number(ctx.graph());
  const int upper = ctx.profile().report.upper_gamma;
  if (upper >= alpha) return std::move(e).Holds();
  return std::move(e).Fails({{"alpha", alpha}, {"upper_gamma", upper}});
}

// ---------------------------------------------------------------------------
// Graphs with Γ_pr = 2Γ

Verdict IndependentGammaSet(GraphContext& ctx, Eval e) {
  if (!NoIsolated(ctx)) return std::move(e).NotApplicable("needs n >= 1 and no isolated vertex");
  if (!ctx.equality_holds()) return std::move(e).NotApplicable("Γ_pr != 2Γ");
  const Graph& g = ctx.graph();
  const auto& prof = ctx.profile();
  const int upper = prof.report.upper_gamma;
  for (const auto& p : prof.upper_paired_sets()) {
    const bool found = std::any_of(
        prof.minimal_dominating.begin(), prof.minimal_dominating.end(),
        [&](const VertexSet& d) {
          return d.size() == upper && d.is_subset_of(p) && is_independent(g, d);
        });
    if (!found) return std::move(e).Fails({{"P", SetJson(p)}, {"upper_gamma", upper}});
  }
  return std::move(e).Holds();
}

Verdict UnicyclicGammaBound(GraphContext& ctx, Eval e) {
  if (!ctx.flags().unicyclic) return std::move(e).NotApplicable("not connected unicyclic");
  const int n = ctx.graph().order();
  const int bound = n % 2 == 0 ? n / 2 : (n - 1) / 2;
  const int upper = ctx.profile().report.upper_gamma;
  if (upper >= bound) return std::move(e).Holds();
  return std::move(e).Fails({{"n", n}, {"upper_gamma", upper}, {"bound", bound}});
}

Verdict CharacterizationCheck(GraphContext& ctx, Eval e, Method m) {
  const auto methods = applicable_fastpaths(ctx.graph());
  if (std::find(methods.begin(), methods.end(), m) == methods.end()) {
    return std::move(e).NotApplicable("graph outside the class");
  }
  const bool predicted = fastpath_decision(m, ctx.family());
  const bool actual = ctx.equality_holds();
  if (predicted == actual) return std::move(e).Holds();
  const auto& r = ctx.profile().report;
  return std::move(e).Fails({{"family", ctx.family().ToString()},
                             {"predicted_equality", predicted},
                             {"upper_gamma", r.upper_gamma},
                             {"upper_gamma_pr", *r.upper_gamma_pr}});
}

// ---------------------------------------------------------------------------
// Structure of Γ_pr-sets in C3-free cactus graphs

// Calls visit(P, matching) for every Γ_pr-set and each of its perfect
// matchings; stops at the first witness returned.
std::optional<json> ForEachPrSet(GraphContext& ctx, bool with_matchings,
                                 const std::function<std::optional<json>(
                                     const VertexSet&, const Matching*)>& visit) {
  for (const auto& p : ctx.profile().upper_paired_sets()) {
    if (!with_matchings) {
      if (auto w = visit(p, nullptr)) return w;
      continue;
    }
    for (const auto& m : all_perfect_matchings(ctx.graph(), p)) {
      if (auto w = visit(p, &m)) {
        (*w)["P"] = SetJson(p);
        (*w)["matching"] = MatchingJson(m);
        return w;
      }
    }
  }
  return std::nullopt;
}

Verdict Structural(GraphContext& ctx, Eval e, StructuralLemma which) {
  if (!NoIsolated(ctx) || !ctx.componentwise_c3_free_cactus()) {
    return std::move(e).NotApplicable("not a C3-free cactus without isolated vertices");
  }
  if (!ctx.equality_holds()) return std::move(e).NotApplicable("Γ_pr != 2Γ");
  const Graph& g = ctx.graph();
  const int n = g.order();
  const std::uint64_t full = VertexSet::Full(n).bits();

  std::optional<json> witness;
  switch (which) {
    case StructuralLemma::kLeaf:
      witness = ForEachPrSet(ctx, true, [&](const VertexSet& p, const Matching* m) {
        for (const auto& [a, b] : m->pairs) {
          if (DegreeIn(g, a, p.bits()) != 1 && DegreeIn(g, b, p.bits()) != 1) {
            return std::optional<json>(json{{"pair", {a, b}}});
          }
        }
        return std::optional<json>();
      });
      break;
    case StructuralLemma::kTwoNeighbors:
      witness = ForEachPrSet(ctx, false, [&](const VertexSet& p, const Matching*) {
        for (std::uint64_t b = full & ~p.bits(); b != 0; b &= b - 1) {
          const int x = std::countr_zero(b);
          if (DegreeIn(g, x, p.bits()) != 2) {
            return std::optional<json>(json{{"P", SetJson(p)}, {"x", x},
                                            {"neighbors_in_P", SetJson(g.row(x) & p.bits(), n)}});
          }
        }
        return std::optional<json>();
      });
      break;
    case StructuralLemma::kPartners:
      // Outside vertices with other than two neighbours in P are the
      // two-neighbour check's concern.
      witness = ForEachPrSet(ctx, true, [&](const VertexSet& p, const Matching* m) {
        for (std::uint64_t b = full & ~p.bits(); b != 0; b &= b - 1) {
          const int x = std::countr_zero(b);
          const std::uint64_t nb = g.row(x) & p.bits();
          if (std::popcount(nb) != 2) continue;
          const int u = std::countr_zero(nb);
          const int v = std::countr_zero(nb & (nb - 1));
          const int pu = m->partner(u);
          const int pv = m->partner(v);
          if (!g.adjacent(pu, pv)) {
            return std::optional<json>(json{{"x", x}, {"neighbors", {u, v}}, {"partners", {pu, pv}}});
          }
        }
        return std::optional<json>();
      });
      break;
    case StructuralLemma::kNoCommon:
      witness = ForEachPrSet(ctx, false, [&](const VertexSet& p, const Matching*) {
        const std::uint64_t outside = full & ~p.bits();
        for (std::uint64_t b = outside; b != 0; b &= b - 1) {
          const int x1 = std::countr_zero(b);
          for (std::uint64_t c = b & (b - 1); c != 0; c &= c - 1) {
            const int x2 = std::countr_zero(c);
            const std::uint64_t common = g.row(x1) & g.row(x2) & p.bits();
            if (common != 0) {
              return std::optional<json>(json{{"P", SetJson(p)}, {"x1", x1}, {"x2", x2},
                                              {"common", SetJson(common, n)}});
            }
          }
        }
        return std::optional<json>();
      });
      break;
    case StructuralLemma::kMaxDegree:
      witness = ForEachPrSet(ctx, false, [&](const VertexSet& p, const Matching*) {
        for (int v : p.elements()) {
          if (DegreeIn(g, v, p.bits()) > 2) {
            return std::optional<json>(
                json{{"P", SetJson(p)}, {"v", v}, {"degree_in_P", DegreeIn(g, v, p.bits())}});
          }
        }
        return std::optional<json>();
      });
      break;
    case StructuralLemma::kOneSide:
      witness = ForEachPrSet(ctx, true, [&](const VertexSet& p, const Matching* m) {
        const std::uint64_t outside = full & ~p.bits();
        for (const auto& [a, b] : m->pairs) {
          if ((g.row(a) & outside) != 0 && (g.row(b) & outside) != 0) {
            return std::optional<json>(json{{"pair", {a, b}}});
          }
        }
        return std::optional<json>();
      });
      break;
    case StructuralLemma::kOutsideIndependent:
      witness = ForEachPrSet(ctx, false, [&](const VertexSet& p, const Matching*) {
        const std::uint64_t outside = full & ~p.bits();
        for (std::uint64_t b = outside; b != 0; b &= b - 1) {
          const int x = std::countr_zero(b);
          if (g.row(x) & outside) {
            return std::optional<json>(
                json{{"P", SetJson(p)}, {"x1", x}, {"x2", std::countr_zero(g.row(x) & outside)}});
          }
        }
        return std::optional<json>();
      });
      break;
  }
  if (witness) return std::move(e).Fails(std::move(*witness));
  return std::move(e).Holds();
}

// ---------------------------------------------------------------------------
// Oracle agreement

Verdict FastpathAgrees(GraphContext& ctx, Eval e) {
  const auto methods = applicable_fastpaths(ctx.graph());
  if (methods.empty()) return std::move(e).NotApplicable("no characterized class applies");
  const bool brute = ctx.equality_holds();
  for (Method m : methods) {
    const bool fast = fastpath_decision(m, ctx.family());
    if (fast != brute) {
      return std::move(e).Fails({{"method", std::string(MethodName(m))},
                                 {"fastpath", fast},
                                 {"bruteforce", brute},
                                 {"family", ctx.family().ToString()}});
    }
  }
  return std::move(e).Holds();
}

Verdict MindomCriterion(GraphContext& ctx, Eval e) {
  const Graph& g = ctx.graph();
  if (g.order() > reference::kMaxReferenceOrder) return std::move(e).Skipped("oracle limited to n <= 7");
  const std::uint64_t full = VertexSet::Full(g.order()).bits();
  for (std::uint64_t d = 0;; ++d) {
    const VertexSet set(g.order(), d);
    const bool fast = is_minimal_dominating(g, set);
    const bool literal = reference::is_minimal_dominating(g, set);
    if (fast != literal) {
      return std::move(e).Fails({{"D", SetJson(set)}, {"criterion", fast}, {"literal", literal}});
    }
    if (d == full) break;
  }
  return std::move(e).Holds();
}

Verdict MatchingOracle(GraphContext& ctx, Eval e) {
  const Graph& g = ctx.graph();
  if (g.order() > reference::kMaxReferenceOrder) return std::move(e).Skipped("oracle limited to n <= 7");
  const std::uint64_t full = VertexSet::Full(g.order()).bits();
  for (std::uint64_t s = 0;; ++s) {
    const VertexSet set(g.order(), s);
    const bool has = has_perfect_matching(g, set);
    const auto all = all_perfect_matchings(g, set);
    const long long count = reference::count_perfect_matchings(g, set);
    const auto first = find_perfect_matching(g, set);
    const bool first_ok = first ? (!all.empty() && *first == all.front()) : all.empty();
    if (has != (count > 0) || static_cast<long long>(all.size()) != count || !first_ok) {
      return std::move(e).Fails({{"S", SetJson(set)},
                                 {"has_perfect_matching", has},
                                 {"enumerated", all.size()},
                                 {"oracle_count", count}});
    }
    if (s == full) break;
  }
  return std::move(e).Holds();
}

Verdict PdsEnumerationOracle(GraphContext& ctx, Eval e) {
  const Graph& g = ctx.graph();
  if (g.order() > reference::kMaxReferenceOrder) return std::move(e).Skipped("oracle limited to n <= 7");
  if (g.has_isolated_vertex()) return std::move(e).NotApplicable("isolated vertex");
  const auto& listed = *ctx.profile().minimal_paired;
  const std::uint64_t full = VertexSet::Full(g.order()).bits();
  for (std::uint64_t s = 0;; ++s) {
    const VertexSet set(g.order(), s);
    const bool literal = is_minimal_paired_dominating(g, set);
    const bool in_list = std::binary_search(listed.begin(), listed.end(), set);
    if (literal != in_list) {
      return std::move(e).Fails({{"P", SetJson(set)}, {"literal", literal}, {"enumerated", in_list}});
    }
    if (s == full) break;
  }
  return std::move(e).Holds();
}

std::string_view StructuralSummary(StructuralLemma which) {
  switch (which) {
    case StructuralLemma::kLeaf:
      return "C3-free cactus: each matched pair of a Γ_pr-set has a leaf of G[P]";
    case StructuralLemma::kTwoNeighbors:
      return "C3-free cactus: each vertex outside a Γ_pr-set has two neighbours in it";
    case StructuralLemma::kPartners:
      return "C3-free cactus: partners of an outside vertex's two neighbours are adjacent";
    case StructuralLemma::kNoCommon:
      return "C3-free cactus: outside vertices share no neighbour in a Γ_pr-set";
    case StructuralLemma::kMaxDegree:
      return "C3-free cactus: Δ(G[P]) <= 2 for each Γ_pr-set P";
    case StructuralLemma::kOneSide:
      return "C3-free cactus: at most one endpoint of a matched pair sees V \\ P";
    case StructuralLemma::kOutsideIndependent:
      return "C3-free cactus: V \\ P is independent for each Γ_pr-set P";
  }
  return "";
}

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& Registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> v = {
        {{"pr-equals-n", "Γ_pr = n exactly for mK2"}, PrEqualsN},
        {{"pr-at-most-n-minus-1", "connected, n >= 3: Γ_pr <= n-1"}, PrAtMostNMinus1},
        {{"pr-equals-n-minus-1", "connected, n >= 3: Γ_pr = n-1 exactly for C3, C5, K1,t*^D"},
         PrEqualsNMinus1},
        {{"epn-pair-removal", "removable pair of a minimal PDS has an external private neighbour"},
         EpnPairRemoval},
        {{"epn-matched-pair", "matched pair of degree >= 2 has an external private neighbour"},
         EpnMatchedPair},
        {{"mds-inside-pds", "each minimal PDS P holds a minimal dominating set of size >= |P|/2"},
         MdsInsidePds},
        {{"pr-at-most-twice-gamma", "Γ_pr <= 2Γ"}, PrAtMostTwiceGamma},
        {{"gamma-at-least-alpha", "Γ >= α"}, GammaAtLeastAlpha},
        {{"independent-gamma-set", "Γ_pr = 2Γ: each Γ_pr-set holds an independent Γ-set"},
         IndependentGammaSet},
        {{"unicyclic-gamma-bound", "unicyclic: Γ >= floor(n/2)"}, UnicyclicGammaBound},
        {{"thm-bipartite", "connected bipartite: Γ_pr = 2Γ iff K2"},
         [](GraphContext& c, Eval e) { return CharacterizationCheck(c, std::move(e), Method::kBipartite); }},
        {{"thm-unicyclic", "connected unicyclic: Γ_pr = 2Γ iff C3, C5, K1,t*^1"},
         [](GraphContext& c, Eval e) { return CharacterizationCheck(c, std::move(e), Method::kUnicyclic); }},
        {{"thm-girth6", "girth >= 6: Γ_pr = 2Γ iff mK2"},
         [](GraphContext& c, Eval e) { return CharacterizationCheck(c, std::move(e), Method::kGirth6); }},
        {{"thm-c3free-cactus", "C3-free cactus components: Γ_pr = 2Γ iff m1K2 + m2C5"},
         [](GraphContext& c, Eval e) {
           return CharacterizationCheck(c, std::move(e), Method::kC3FreeCactus);
         }},
    };
    for (StructuralLemma which : kAllStructuralLemmas) {
      v.push_back({{StructuralLemmaId(which), StructuralSummary(which)},
                   [which](GraphContext& c, Eval e) { return Structural(c, std::move(e), which); }});
    }
    v.push_back({{"fastpath-agrees", "class characterizations agree with brute force"},
                 FastpathAgrees});
    v.push_back({{"mindom-criterion", "private-neighbour minimality equals the subset definition"},
                 MindomCriterion});
    v.push_back({{"matching-oracle", "perfect matching search equals edge-subset enumeration"},
                 MatchingOracle});
    v.push_back({{"pds-enumeration-oracle", "enumerated minimal PDSs equal the subset definition"},
                 PdsEnumerationOracle});
    return v;
  }();
  return entries;
}

}  // namespace

std::span<const CheckInfo> all_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : Registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_known_check(std::string_view id) {
  const auto& reg = Registry();
  return std::any_of(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.id == id; });
}

Verdict run_check(std::string_view id, GraphContext& ctx) {
  const auto& reg = Registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == reg.end()) Fail(ErrorCode::kInvalidArgument, "unknown check \"" + std::string(id) + "\"");
  Eval e;
  e.v.check_id = std::string(id);
  e.v.graph6 = ctx.graph6();
  try {
    return it->fn(ctx, std::move(e));
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kGuardExceeded) throw;
    Eval skipped;
    skipped.v.check_id = std::string(id);
    skipped.v.graph6 = ctx.graph6();
    return std::move(skipped).Skipped(err.what());
  }
}

}  // namespace pairdom
