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

#include "pairdom/domination.hpp"

#include <algorithm>

#include "pairdom/error.hpp"
#include "pairdom/matching.hpp"

namespace pairdom {

namespace {

std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

void CheckBelongs(const Graph& g, const VertexSet& s) {
  if (s.order() != g.order()) {
    Fail(ErrorCode::kInvalidArgument, "vertex set does not belong to this graph");
  }
}

void CheckMember(const VertexSet& s, int v) {
  if (!s.contains(v)) {
    Fail(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " is not in the set");
  }
}

std::uint64_t FullMask(int n) { return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)); }

bool MinimalDominatingMask(std::span<const std::uint64_t> rows, std::uint64_t d,
                           std::uint64_t full) noexcept {
  std::uint64_t once = 0;
  std::uint64_t twice = 0;
  for (std::uint64_t b = d; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    const std::uint64_t closed = rows[v] | Bit(v);
    twice |= once & closed;
    once |= closed;
  }
  if (once != full) return false;
  const std::uint64_t exactly_once = once & ~twice;
  for (std::uint64_t b = d; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    if (((rows[v] | Bit(v)) & exactly_once) == 0) return false;
  }
  return true;
}

void SortLex(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
}

int AlphaOf(std::span<const std::uint64_t> rows, std::uint64_t s) {
  if (s == 0) return 0;
  const int v = std::countr_zero(s);
  const std::uint64_t rest = s & ~Bit(v);
  if ((rows[v] & s) == 0) return 1 + AlphaOf(rows, rest);
  int take = 1 + AlphaOf(rows, rest & ~rows[v]);
  int skip = AlphaOf(rows, rest);
  return std::max(take, skip);
}

}  // namespace

namespace detail {

bool Dominates(std::span<const std::uint64_t> rows, std::uint64_t d) noexcept {
  std::uint64_t covered = d;
  for (std::uint64_t b = d; b != 0; b &= b - 1) covered |= rows[std::countr_zero(b)];
  return covered == FullMask(static_cast<int>(rows.size()));
}

}  // namespace detail

bool is_dominating(const Graph& g, const VertexSet& d) {
  CheckBelongs(g, d);
  return detail::Dominates(g.rows(), d.bits());
}

VertexSet private_neighborhood(const Graph& g, int v, const VertexSet& s) {
  CheckBelongs(g, s);
  CheckMember(s, v);
  std::uint64_t out = 0;
  for (int u = 0; u < g.order(); ++u) {
    if ((g.row(u) & s.bits()) == Bit(v)) out |= Bit(u);
  }
  return VertexSet(g.order(), out);
}

VertexSet external_private_neighborhood(const Graph& g, int v, const VertexSet& s) {
  return private_neighborhood(g, v, s) - s;
}

VertexSet epn_pair(const Graph& g, int u, int v, const VertexSet& s) {
  CheckBelongs(g, s);
  CheckMember(s, u);
  CheckMember(s, v);
  if (u == v) Fail(ErrorCode::kInvalidArgument, "epn_pair needs two distinct vertices");
  const std::uint64_t allowed = Bit(u) | Bit(v);
  const std::uint64_t candidates = (g.row(u) | g.row(v)) & ~s.bits();
  std::uint64_t out = 0;
  for (std::uint64_t b = candidates; b != 0; b &= b - 1) {
    const int w = std::countr_zero(b);
    if ((g.row(w) & s.bits() & ~allowed) == 0) out |= Bit(w);
  }
  return VertexSet(g.order(), out);
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  CheckBelongs(g, d);
  return MinimalDominatingMask(g.rows(), d.bits(), FullMask(g.order()));
}

bool is_paired_dominating(const Graph& g, const VertexSet& p) {
  CheckBelongs(g, p);
  return detail::Dominates(g.rows(), p.bits()) &&
         detail::HasPerfectMatching(g.rows(), p.bits());
}

bool is_minimal_paired_dominating(const Graph& g, const VertexSet& p) {
  if (!is_paired_dominating(g, p)) return false;
  const std::uint64_t whole = p.bits();
  if (whole == 0) return true;
  // Proper submasks of P, largest first.
  for (std::uint64_t sub = (whole - 1) & whole;; sub = (sub - 1) & whole) {
    if (std::popcount(sub) % 2 == 0 && detail::Dominates(g.rows(), sub) &&
        detail::HasPerfectMatching(g.rows(), sub)) {
      return false;
    }
    if (sub == 0) break;
  }
  return true;
}

std::vector<VertexSet> enumerate_minimal_dominating_sets(const Graph& g) {
  const int n = g.order();
  if (n > kMaxDominationOrder) {
    Fail(ErrorCode::kGuardExceeded, "minimal dominating set enumeration limited to n <= 24");
  }
  const std::uint64_t full = FullMask(n);
  std::vector<VertexSet> out;
  for (std::uint64_t d = 0; d <= full; ++d) {
    if (MinimalDominatingMask(g.rows(), d, full)) out.emplace_back(n, d);
    if (d == full) break;
  }
  SortLex(out);
  return out;
}

std::vector<VertexSet> enumerate_minimal_paired_dominating_sets(const Graph& g) {
  const int n = g.order();
  if (n > kMaxPairedOrder) {
    Fail(ErrorCode::kGuardExceeded,
         "minimal paired dominating set enumeration limited to n <= 20");
  }
  if (g.has_isolated_vertex()) {
    Fail(ErrorCode::kUndefined, "paired domination is undefined with isolated vertices");
  }
  const std::size_t count = std::size_t{1} << n;
  auto rows = g.rows();

  // matchable[S]: G[S] has a perfect matching. Every mask referenced on the
  // right-hand side is smaller than S.
  std::vector<std::uint8_t> matchable(count, 0);
  matchable[0] = 1;
  for (std::size_t s = 1; s < count; ++s) {
    if (std::popcount(s) % 2 != 0) continue;
    const int u = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    for (std::uint64_t b = rows[u] & rest; b != 0; b &= b - 1) {
      if (matchable[rest & ~(b & -b)]) {
        matchable[s] = 1;
        break;
      }
    }
  }

  // below[S]: some subset of S (S included) is paired dominating.
  std::vector<std::uint8_t> paired(count, 0);
  for (std::size_t s = 0; s < count; ++s) {
    paired[s] = matchable[s] && detail::Dominates(rows, s);
  }
  std::vector<std::uint8_t> below = paired;
  for (int i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < count; ++s) {
      if ((s >> i) & 1U) below[s] |= below[s ^ Bit(i)];
    }
  }

  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < count; ++s) {
    if (!paired[s]) continue;
    bool minimal = true;
    for (std::uint64_t b = s; b != 0 && minimal; b &= b - 1) {
      if (below[s & ~(b & -b)]) minimal = false;
    }
    if (minimal) out.emplace_back(n, s);
  }
  SortLex(out);
  return out;
}

std::vector<VertexSet> DominationProfile::upper_gamma_sets() const {
  std::vector<VertexSet> out;
  for (const auto& s : minimal_dominating) {
    if (s.size() == report.upper_gamma) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> DominationProfile::upper_paired_sets() const {
  std::vector<VertexSet> out;
  if (!minimal_paired) return out;
  for (const auto& s : *minimal_paired) {
    if (s.size() == *report.upper_gamma_pr) out.push_back(s);
  }
  return out;
}

DominationProfile domination_profile(const Graph& g) {
  DominationProfile profile;
  profile.minimal_dominating = enumerate_minimal_dominating_sets(g);
  InvariantReport& r = profile.report;

  // Lists are sorted, so the first set of extreme size is the least witness.
  const auto& doms = profile.minimal_dominating;
  r.gamma = doms.front().size();
  r.upper_gamma = doms.front().size();
  for (const auto& s : doms) {
    r.gamma = std::min(r.gamma, s.size());
    r.upper_gamma = std::max(r.upper_gamma, s.size());
  }
  r.gamma_witness = *std::find_if(doms.begin(), doms.end(),
                                  [&](const VertexSet& s) { return s.size() == r.gamma; });
  r.upper_gamma_witness = *std::find_if(
      doms.begin(), doms.end(), [&](const VertexSet& s) { return s.size() == r.upper_gamma; });

  if (!g.has_isolated_vertex()) {
    profile.minimal_paired = enumerate_minimal_paired_dominating_sets(g);
    const auto& pds = *profile.minimal_paired;
    int lo = pds.front().size();
    int hi = lo;
    for (const auto& s : pds) {
      lo = std::min(lo, s.size());
      hi = std::max(hi, s.size());
    }
    r.gamma_pr = lo;
    r.upper_gamma_pr = hi;
    r.gamma_pr_witness =
        *std::find_if(pds.begin(), pds.end(), [&](const VertexSet& s) { return s.size() == lo; });
    r.upper_gamma_pr_witness =
        *std::find_if(pds.begin(), pds.end(), [&](const VertexSet& s) { return s.size() == hi; });
  }
  return profile;
}

InvariantReport invariants(const Graph& g) { return domination_profile(g).report; }

int independence_number(const Graph& g) {
  if (g.order() > kMaxDominationOrder) {
    Fail(ErrorCode::kGuardExceeded, "independence number limited to n <= 24");
  }
  return AlphaOf(g.rows(), FullMask(g.order()));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  CheckBelongs(g, s);
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    if (g.row(std::countr_zero(b)) & s.bits()) return false;
  }
  return true;
}

}  // namespace pairdom
