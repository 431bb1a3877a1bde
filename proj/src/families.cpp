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

#include "pairdom/families.hpp"

#include <algorithm>
#include <charconv>

#include "pairdom/error.hpp"

namespace pairdom {

namespace {

std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

// ---------------------------------------------------------------------------
// Biconnected blocks (Hopcroft-Tarjan with an edge stack).

struct BlockCensus {
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<Edge> stack;
  int timer = 0;
  bool all_blocks_ok = true;
};

void CloseBlock(BlockCensus& st, int u, int w) {
  std::uint64_t verts = 0;
  int edges = 0;
  while (!st.stack.empty()) {
    Edge e = st.stack.back();
    st.stack.pop_back();
    verts |= Bit(e.first) | Bit(e.second);
    ++edges;
    if (e == Edge{u, w}) break;
  }
  const int vertices = std::popcount(verts);
  // A biconnected block is a cycle exactly when it has as many edges as
  // vertices.
  if (edges != 1 && edges != vertices) st.all_blocks_ok = false;
}

void BlockDfs(const Graph& g, BlockCensus& st, int u, int parent) {
  st.disc[u] = st.low[u] = st.timer++;
  for (std::uint64_t b = g.row(u); b != 0; b &= b - 1) {
    const int w = std::countr_zero(b);
    if (st.disc[w] < 0) {
      st.stack.emplace_back(u, w);
      BlockDfs(g, st, w, u);
      st.low[u] = std::min(st.low[u], st.low[w]);
      if (st.low[w] >= st.disc[u]) CloseBlock(st, u, w);
    } else if (w != parent && st.disc[w] < st.disc[u]) {
      st.stack.emplace_back(u, w);
      st.low[u] = std::min(st.low[u], st.disc[w]);
    }
  }
}

bool IsBipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (std::uint64_t b = g.row(u); b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool AllDegreesEqual(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v) {
    if (std::popcount(g.row(v)) != d) return false;
  }
  return true;
}

bool IsCycleGraph(const Graph& g, int length) {
  return g.order() == length && AllDegreesEqual(g, 2) && is_connected(g);
}

// Tries `centre` as the hub of a subdivided star with triangles.
std::optional<FamilyLabel> StarAround(const Graph& g, int centre) {
  int legs = 0;
  int triangle_ends = 0;
  for (std::uint64_t b = g.row(centre); b != 0; b &= b - 1) {
    const int u = std::countr_zero(b);
    if (std::popcount(g.row(u)) != 2) return std::nullopt;
    const int w = std::countr_zero(g.row(u) & ~Bit(centre));
    if ((g.row(centre) >> w) & 1U) {
      if (g.row(w) != (Bit(centre) | Bit(u))) return std::nullopt;
      ++triangle_ends;
    } else {
      if (g.row(w) != Bit(u)) return std::nullopt;
      ++legs;
    }
  }
  const int triangles = triangle_ends / 2;
  if (legs + triangles == 0) return std::nullopt;
  if (1 + 2 * legs + 2 * triangles != g.order()) return std::nullopt;
  return FamilyLabel::SubdividedStarDelta(legs, triangles);
}

int ParseInt(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    Fail(ErrorCode::kParse, "family spec: bad " + std::string(what) + " \"" +
                                std::string(text) + "\"");
  }
  return value;
}

Graph NamedGraph(std::string_view name) {
  if (name.size() < 2) Fail(ErrorCode::kParse, "family spec: unknown graph \"" + std::string(name) + "\"");
  const int size = ParseInt(name.substr(1), "graph size");
  switch (name[0]) {
    case 'K':
      return make_complete(size);
    case 'C':
      return make_cycle(size);
    case 'P':
      return make_path(size);
    default:
      Fail(ErrorCode::kParse, "family spec: unknown graph \"" + std::string(name) + "\"");
  }
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FamilyLabel

FamilyLabel FamilyLabel::MK2(int m) {
  if (m < 1) Fail(ErrorCode::kInvalidArgument, "mK2 needs m >= 1");
  FamilyLabel l{Kind::kMK2};
  l.m = m;
  return l;
}

FamilyLabel FamilyLabel::SubdividedStarDelta(int t, int delta) {
  if (t < 0 || delta < 0 || t + delta == 0) {
    Fail(ErrorCode::kInvalidArgument, "subdivided star needs t + delta >= 1");
  }
  FamilyLabel l{Kind::kSubdividedStarDelta};
  l.t = t;
  l.delta = delta;
  return l;
}

FamilyLabel FamilyLabel::MK2PlusMC5(int m_k2, int m_c5) {
  if (m_k2 < 0 || m_c5 < 0 || m_k2 + m_c5 < 1) {
    Fail(ErrorCode::kInvalidArgument, "mK2 + mC5 needs at least one component");
  }
  FamilyLabel l{Kind::kMK2PlusMC5};
  l.m_k2 = m_k2;
  l.m_c5 = m_c5;
  return l;
}

std::string FamilyLabel::ToString() const {
  switch (kind) {
    case Kind::kNone:
      return "none";
    case Kind::kMK2:
      return "mK2(" + std::to_string(m) + ")";
    case Kind::kC3:
      return "C3";
    case Kind::kC5:
      return "C5";
    case Kind::kSubdividedStarDelta:
      return "K1,t*^D(t=" + std::to_string(t) + ",D=" + std::to_string(delta) + ")";
    case Kind::kMK2PlusMC5:
      return "mK2+mC5(" + std::to_string(m_k2) + "," + std::to_string(m_c5) + ")";
  }
  return "none";
}

// ---------------------------------------------------------------------------
// Generators

Graph make_subdivided_star(int t, int delta) {
  if (t < 0 || delta < 0) Fail(ErrorCode::kInvalidArgument, "negative star parameter");
  if (t == 0 && delta == 0) {
    Fail(ErrorCode::kInvalidArgument, "subdivided star needs t >= 1 or delta >= 1");
  }
  const int n = 1 + 2 * t + 2 * delta;
  if (n > kMaxOrder) Fail(ErrorCode::kOutOfRange, "subdivided star exceeds 62 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) {
    edges.emplace_back(0, 1 + 2 * i);
    edges.emplace_back(1 + 2 * i, 2 + 2 * i);
  }
  for (int j = 0; j < delta; ++j) {
    const int p = 1 + 2 * t + 2 * j;
    edges.emplace_back(0, p);
    edges.emplace_back(p, p + 1);
    edges.emplace_back(0, p + 1);
  }
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) Fail(ErrorCode::kInvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph make_path(int n) {
  if (n < 1) Fail(ErrorCode::kInvalidArgument, "a path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  if (n < 1) Fail(ErrorCode::kInvalidArgument, "a complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph make_union(const std::vector<std::pair<Graph, int>>& parts) {
  int total = 0;
  for (const auto& [g, count] : parts) {
    if (count < 0) Fail(ErrorCode::kInvalidArgument, "negative multiplicity");
    total += g.order() * count;
    if (total > kMaxOrder) Fail(ErrorCode::kOutOfRange, "union exceeds 62 vertices");
  }
  Graph out;
  for (const auto& [g, count] : parts) {
    for (int i = 0; i < count; ++i) out = disjoint_union(out, g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Class flags

bool is_cactus(const Graph& g) {
  if (!is_connected(g)) return false;
  BlockCensus st;
  st.disc.assign(g.order(), -1);
  st.low.assign(g.order(), 0);
  BlockDfs(g, st, 0, -1);
  return st.all_blocks_ok;
}

ClassFlags classify(const Graph& g) {
  ClassFlags f;
  f.connected = is_connected(g);
  f.bipartite = IsBipartite(g);
  f.girth = girth(g);
  f.c3_free = !(f.girth && *f.girth == 3);
  f.unicyclic = f.connected && g.size() == g.order();
  f.cactus = f.connected && is_cactus(g);
  return f;
}

bool is_componentwise_c3_free_cactus(const Graph& g) {
  if (g.order() == 0) return false;
  auto flags = classify(g);
  if (!flags.c3_free) return false;
  return every_component(g, [](const Graph& c) { return is_cactus(c); });
}

FamilyLabel recognize_family(const Graph& g) {
  const int n = g.order();
  if (n == 3 && g.size() == 3) return FamilyLabel::C3();
  if (IsCycleGraph(g, 5)) return FamilyLabel::C5();
  if (n >= 2 && AllDegreesEqual(g, 1)) return FamilyLabel::MK2(n / 2);

  if (n >= 3 && is_connected(g)) {
    for (int c = 0; c < n; ++c) {
      if (auto label = StarAround(g, c)) return *label;
    }
  }

  if (n >= 2) {
    int k2 = 0;
    int c5 = 0;
    bool ok = true;
    for (const auto& members : components(g).members()) {
      Graph part = induced_subgraph(g, members);
      if (part.order() == 2 && part.size() == 1) {
        ++k2;
      } else if (IsCycleGraph(part, 5)) {
        ++c5;
      } else {
        ok = false;
        break;
      }
    }
    if (ok) return FamilyLabel::MK2PlusMC5(k2, c5);
  }
  return FamilyLabel::None();
}

// ---------------------------------------------------------------------------
// Family specs

Graph parse_family_spec(std::string_view spec) {
  if (spec.empty()) Fail(ErrorCode::kParse, "family spec: empty");

  if (spec.starts_with("mK2:")) {
    const int m = ParseInt(spec.substr(4), "multiplicity");
    if (m < 1) Fail(ErrorCode::kParse, "family spec: mK2 needs m >= 1");
    return make_union({{make_complete(2), m}});
  }

  if (spec.starts_with("star:")) {
    int t = -1;
    int d = 0;
    for (auto item : Split(spec.substr(5), ',')) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos) Fail(ErrorCode::kParse, "family spec: expected key=value");
      auto key = item.substr(0, eq);
      int value = ParseInt(item.substr(eq + 1), "star parameter");
      if (key == "t") {
        t = value;
      } else if (key == "d") {
        d = value;
      } else {
        Fail(ErrorCode::kParse, "family spec: unknown star key \"" + std::string(key) + "\"");
      }
    }
    if (t < 0) Fail(ErrorCode::kParse, "family spec: star needs t=<count>");
    return make_subdivided_star(t, d);
  }

  if (spec.starts_with("union:")) {
    std::vector<std::pair<Graph, int>> parts;
    if (spec.size() == 6) return make_union(parts);
    for (auto item : Split(spec.substr(6), '+')) {
      auto star = item.find('*');
      if (star == std::string_view::npos) {
        parts.emplace_back(NamedGraph(item), 1);
      } else {
        parts.emplace_back(NamedGraph(item.substr(0, star)),
                           ParseInt(item.substr(star + 1), "multiplicity"));
      }
    }
    return make_union(parts);
  }

  return NamedGraph(spec);
}

}  // namespace pairdom
