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


// Command-line front end over the pairdom C interface.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairdom/pairdom.h"

namespace {

constexpr int kUsageError = 2;

struct Common {
  std::string source;
  int jobs = 1;
  std::string output;
  std::string format = "json";
};

void AddCommon(CLI::App* cmd, Common& c) {
  cmd->add_option("source", c.source,
                  "graph6 or edge-list file, '-', enum:N, labeled:N, or a family spec")
      ->required();
  cmd->add_option("-j,--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));
  cmd->add_option("-o,--output", c.output, "write the report here instead of stdout");
  cmd->add_option("-f,--format", c.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
}

void ToStderr(const char* line, void*) { std::fprintf(stderr, "%s\n", line); }

void ToStdout(const char* line, void*) { std::fprintf(stdout, "%s\n", line); }

int ReportError(pd_status status) {
  std::fprintf(stderr, "pairdom: %s: %s\n", pd_status_name(status), pd_last_error());
  return kUsageError;
}

int Run(const std::string& command, const Common& c, nlohmann::json extra) {
  nlohmann::json config = {{"command", command}, {"source", c.source}, {"jobs", c.jobs},
                           {"format", c.format}, {"output", c.output}};
  config.update(extra);
  char* report = nullptr;
  int exit_code = 0;
  const pd_status status =
      pd_run(config.dump().c_str(), ToStderr, nullptr, c.output.empty() ? &report : nullptr,
             &exit_code);
  if (status != PD_OK) return ReportError(status);
  if (report != nullptr) {
    std::fputs(report, stdout);
    pd_string_free(report);
  }
  return exit_code;
}

std::vector<std::string> SplitChecks(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t comma = item.find(',', start);
      const std::string id = item.substr(start, comma - start);
      if (!id.empty()) out.push_back(id);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact upper (paired) domination solver and verification harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pd_version());

  Common common;

  auto* invariants = app.add_subcommand("invariants", "γ, Γ, γ_pr, Γ_pr with witnesses");
  AddCommon(invariants, common);

  auto* classify = app.add_subcommand("classify", "class flags and family label");
  AddCommon(classify, common);

  auto* decide = app.add_subcommand("decide", "decide Γ_pr = 2Γ");
  AddCommon(decide, common);
  bool fastpath = false;
  bool brute = false;
  bool both = false;
  auto* mode = decide->add_option_group("mode");
  mode->add_flag("--fastpath", fastpath, "class characterizations only");
  mode->add_flag("--brute", brute, "exhaustive solver only");
  mode->add_flag("--both", both, "both, reporting disagreements as failures (default)");
  mode->require_option(0, 1);

  auto* verify = app.add_subcommand("verify", "run checks over a graph stream");
  AddCommon(verify, common);
  std::vector<std::string> checks;
  verify->add_option("-c,--checks", checks, "comma-separated check ids, or 'all'")->required();

  auto* hunt = app.add_subcommand("hunt", "search C3-free graphs for Γ_pr = 2Γ outside m1K2+m2C5");
  AddCommon(hunt, common);

  auto* gen = app.add_subcommand("gen", "print graph6 for a family spec or a graph class");
  std::string spec;
  std::string all_range;
  bool triangle_free = false;
  bool one_cycle = false;
  bool connected = false;
  gen->add_option("spec", spec, "family spec, e.g. C5, mK2:3, star:t=3,d=1, union:K2*2+C5*1");
  gen->add_option("--all", all_range, "every isomorphism class of order N or M-N");
  gen->add_flag("--triangle-free", triangle_free, "with --all: triangle-free graphs only");
  gen->add_flag("--at-most-one-cycle", one_cycle, "with --all: graphs with at most one cycle");
  gen->add_flag("--connected", connected, "with --all: connected graphs only");

  auto* list = app.add_subcommand("checks", "list the registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (invariants->parsed()) return Run("invariants", common, nlohmann::json::object());
  if (classify->parsed()) return Run("classify", common, nlohmann::json::object());
  if (decide->parsed()) {
    const char* m = fastpath ? "fastpath" : brute ? "brute" : "both";
    return Run("decide", common, {{"decide_mode", m}});
  }
  if (verify->parsed()) return Run("verify", common, {{"checks", SplitChecks(checks)}});
  if (hunt->parsed()) return Run("hunt", common, nlohmann::json::object());
  if (list->parsed()) {
    char* json = nullptr;
    const pd_status status = pd_list_checks(&json);
    if (status != PD_OK) return ReportError(status);
    for (const auto& item : nlohmann::json::parse(json)) {
      std::printf("%-24s %s\n", item["id"].get<std::string>().c_str(),
                  item["summary"].get<std::string>().c_str());
    }
    pd_string_free(json);
    return 0;
  }
  if (gen->parsed()) {
    std::string what;
    if (!all_range.empty()) {
      if (!spec.empty() || (triangle_free && one_cycle)) {
        std::fprintf(stderr, "pairdom: gen takes either a spec or --all with one class\n");
        return kUsageError;
      }
      what = triangle_free ? "triangle-free:" : one_cycle ? "at-most-one-cycle:" : "all:";
      what = (connected ? "connected-" : "") + what + all_range;
    } else if (spec.empty() || triangle_free || one_cycle || connected) {
      std::fprintf(stderr, "pairdom: gen needs a family spec, or --all N with class flags\n");
      return kUsageError;
    } else {
      what = spec;
    }
    const pd_status status = pd_generate(what.c_str(), ToStdout, nullptr);
    return status == PD_OK ? 0 : ReportError(status);
  }
  return kUsageError;
}
