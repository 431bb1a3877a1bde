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

// graph6 short form and the plain edge-list format.

#include <istream>
#include <sstream>

#include "pairdom/error.hpp"
#include "pairdom/graph.hpp"

namespace pairdom {

namespace {

constexpr int kBias = 63;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                        s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = Trim(line);
  if (line.empty()) Fail(ErrorCode::kParse, "graph6: empty line");
  const int header = static_cast<unsigned char>(line[0]);
  if (header == 126) Fail(ErrorCode::kParse, "graph6: order above 62 is not supported");
  if (header < kBias || header > 126) {
    Fail(ErrorCode::kParse, "graph6: malformed header byte");
  }
  const int n = header - kBias;
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (line.size() - 1 < byte_count) Fail(ErrorCode::kParse, "graph6: truncated payload");
  if (line.size() - 1 > byte_count) Fail(ErrorCode::kParse, "graph6: trailing bytes");

  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(line[1 + k / 6]);
      if (byte < kBias || byte > 126) Fail(ErrorCode::kParse, "graph6: malformed payload byte");
      if (((byte - kBias) >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  for (std::size_t b = k / 6; b < byte_count; ++b) {
    const int byte = static_cast<unsigned char>(line[1 + b]);
    if (byte < kBias || byte > 126) Fail(ErrorCode::kParse, "graph6: malformed payload byte");
  }
  return Graph::FromAdjacency(std::move(rows));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.row(i) >> j) & 1);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> parse_edge_lists(std::istream& in) {
  std::vector<Graph> out;
  long long n = 0;
  long long m = 0;
  while (in >> n) {
    if (!(in >> m)) Fail(ErrorCode::kParse, "edge list: header needs \"n m\"");
    if (n < 0 || n > kMaxOrder) Fail(ErrorCode::kParse, "edge list: order out of range");
    if (m < 0) Fail(ErrorCode::kParse, "edge list: negative edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
      int u = 0;
      int v = 0;
      if (!(in >> u >> v)) Fail(ErrorCode::kParse, "edge list: truncated edge lines");
      edges.emplace_back(u, v);
    }
    out.emplace_back(static_cast<int>(n), edges);
  }
  if (!in.eof()) Fail(ErrorCode::kParse, "edge list: unexpected token");
  return out;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace pairdom
