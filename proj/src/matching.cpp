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

#include "pairdom/matching.hpp"

#include "pairdom/error.hpp"

namespace pairdom {

namespace {

void CheckBelongs(const Graph& g, const VertexSet& s) {
  if (s.order() != g.order()) {
    Fail(ErrorCode::kInvalidArgument, "vertex set does not belong to this graph");
  }
}

// Depth-first search; `visit` returns false to stop the search early.
template <typename Visit>
bool Search(std::span<const std::uint64_t> rows, std::uint64_t rest,
            std::vector<Edge>& stack, Visit& visit) {
  if (rest == 0) return visit(stack);
  const int u = std::countr_zero(rest);
  const std::uint64_t without_u = rest & (rest - 1);
  for (std::uint64_t b = rows[u] & without_u; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    stack.emplace_back(u, v);
    bool go_on = Search(rows, without_u & ~(std::uint64_t{1} << v), stack, visit);
    stack.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

int Matching::partner(int v) const {
  for (const auto& [a, b] : pairs) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return -1;
}

namespace detail {

bool HasPerfectMatching(std::span<const std::uint64_t> rows, std::uint64_t s) noexcept {
  if (s == 0) return true;
  if (std::popcount(s) % 2 != 0) return false;
  const int u = std::countr_zero(s);
  const std::uint64_t rest = s & (s - 1);
  for (std::uint64_t b = rows[u] & rest; b != 0; b &= b - 1) {
    if (HasPerfectMatching(rows, rest & ~(b & -b))) return true;
  }
  return false;
}

}  // namespace detail

bool has_perfect_matching(const Graph& g, const VertexSet& s) {
  CheckBelongs(g, s);
  return detail::HasPerfectMatching(g.rows(), s.bits());
}

std::optional<Matching> find_perfect_matching(const Graph& g, const VertexSet& s) {
  CheckBelongs(g, s);
  if (s.size() % 2 != 0) return std::nullopt;
  std::optional<Matching> found;
  std::vector<Edge> stack;
  auto take_first = [&](const std::vector<Edge>& pairs) {
    found = Matching{pairs};
    return false;
  };
  Search(g.rows(), s.bits(), stack, take_first);
  return found;
}

std::vector<Matching> all_perfect_matchings(const Graph& g, const VertexSet& s) {
  CheckBelongs(g, s);
  if (s.size() > kMaxMatchingEnumeration) {
    Fail(ErrorCode::kGuardExceeded, "matching enumeration limited to 20 vertices");
  }
  std::vector<Matching> out;
  if (s.size() % 2 != 0) return out;
  std::vector<Edge> stack;
  auto collect = [&](const std::vector<Edge>& pairs) {
    out.push_back(Matching{pairs});
    return true;
  };
  Search(g.rows(), s.bits(), stack, collect);
  // The search visits matchings in lexicographic order already.
  return out;
}

}  // namespace pairdom
