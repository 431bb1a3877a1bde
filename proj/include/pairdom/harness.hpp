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


#ifndef PAIRDOM_HARNESS_HPP
#define PAIRDOM_HARNESS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pairdom/characterizations.hpp"
#include "pairdom/graph.hpp"

namespace pairdom {

enum class Command { kInvariants, kClassify, kDecide, kVerify, kHunt };
enum class DecideMode { kFastpath, kBrute, kBoth };
enum class OutputFormat { kJson, kText };

std::string_view CommandName(Command c);
std::string_view DecideModeName(DecideMode m);

// Source syntax:
//   PATH          graph6 or edge-list file, detected from its first line
//   g6:PATH       graph6 file, one graph per line
//   edges:PATH    edge-list file
//   -             graph6 on standard input
//   enum:N        one graph per isomorphism class, N <= 7
//   labeled:N     every labeled graph, N <= 7
//   family:SPEC   a named family, e.g. family:star:t=3,d=1; a bare SPEC that
//                 is not a file is tried as a family too
struct RunConfig {
  Command command = Command::kVerify;
  std::string source;
  // Check ids for kVerify; "all" expands to the full registry.
  std::vector<std::string> checks;
  DecideMode decide_mode = DecideMode::kBoth;
  int jobs = 1;
  OutputFormat format = OutputFormat::kJson;
  // Report destination; empty leaves writing to the caller.
  std::string output;

  nlohmann::json ToJson() const;
  static RunConfig FromJson(const nlohmann::json& j);
};

struct CheckTotals {
  long long scanned = 0;
  long long holds = 0;
  long long fails = 0;
  long long na = 0;
  long long skipped = 0;

  void Count(Outcome o);
};

struct InputError {
  long long line = 0;
  std::string message;
};

struct RunReport {
  RunConfig config;
  long long graphs = 0;
  // In check order; filled for kVerify and for kDecide with kBoth.
  std::vector<std::pair<std::string, CheckTotals>> totals;
  std::vector<Verdict> failures;
  std::vector<InputError> input_errors;
  // Per-graph records for kInvariants, kClassify and kDecide.
  std::vector<nlohmann::json> results;
  std::optional<HuntReport> hunt;
  double elapsed_ms = 0;

  // 1 when any check failed, 0 otherwise.
  int exit_code() const;
  nlohmann::json ToJson(bool with_elapsed = true) const;
  std::string ToText() const;
  std::string Render() const;
};

using LineSink = std::function<void(const std::string&)>;

// Runs the configured command over the source. Failing verdicts are passed
// to on_failure as JSON lines in input order. Throws Error on a bad config or
// unreadable input.
RunReport run(const RunConfig& config, const LineSink& on_failure = {});

// Graph6 lines for a generation request: a family spec, or one of
// "all:N", "triangle-free:N", "at-most-one-cycle:N", "enum:N", "labeled:N",
// optionally prefixed "connected-" to keep connected graphs only.
void generate(const std::string& what, const LineSink& emit);

}  // namespace pairdom

#endif  // PAIRDOM_HARNESS_HPP
