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

#include <filesystem>
#include <fstream>

#include "pairdom/error.hpp"
#include "pairdom/families.hpp"
#include "pairdom/harness.hpp"

using namespace pairdom;
namespace fs = std::filesystem;

namespace {

fs::path TempFile(const std::string& name, const std::string& contents) {
  const fs::path dir = fs::temp_directory_path() / "pairdom-harness-test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << contents;
  return p;
}

RunConfig Config(Command c, std::string source, std::vector<std::string> checks = {}) {
  RunConfig cfg;
  cfg.command = c;
  cfg.source = std::move(source);
  cfg.checks = std::move(checks);
  return cfg;
}

const CheckTotals& Totals(const RunReport& r, const std::string& id) {
  for (const auto& [name, t] : r.totals) {
    if (name == id) return t;
  }
  FAIL("no totals for " << id);
  return r.totals.front().second;
}

}  // namespace

TEST_CASE("invariants of a family") {
  const RunReport r = run(Config(Command::kInvariants, "C5"));
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0]["upper_gamma"] == 2);
  CHECK(r.results[0]["upper_gamma_pr"] == 4);
  CHECK(r.results[0]["gamma"] == 2);
  CHECK(r.exit_code() == 0);

  const RunReport iso = run(Config(Command::kInvariants, TempFile("iso.g6", "B?\n").string()));
  REQUIRE(iso.results.size() == 1);
  CHECK(iso.results[0]["gamma_pr"].is_null());
}

TEST_CASE("classify and decide") {
  const RunReport c = run(Config(Command::kClassify, "family:star:t=3,d=1"));
  REQUIRE(c.results.size() == 1);
  CHECK(c.results[0]["unicyclic"] == true);
  CHECK(c.results[0]["girth"] == 3);

  RunConfig cfg = Config(Command::kDecide, "union:K2*2+C5*1");
  const RunReport d = run(cfg);
  REQUIRE(d.results.size() == 1);
  CHECK(d.results[0]["agree"] == true);
  CHECK(d.results[0]["fastpath"]["method"] == "thm-c3free-cactus");
  CHECK(Totals(d, "fastpath-agrees").holds == 1);

  cfg.decide_mode = DecideMode::kBrute;
  cfg.source = "P4";
  const RunReport b = run(cfg);
  CHECK(b.totals.empty());
  CHECK(b.results[0]["brute"]["holds"] == false);
  CHECK_FALSE(b.results[0].contains("fastpath"));
}

TEST_CASE("verify over an enumerated source") {
  const RunReport r = run(Config(Command::kVerify, "enum:7", {"thm-unicyclic"}));
  CHECK(r.graphs == 1044);
  const CheckTotals& t = Totals(r, "thm-unicyclic");
  CHECK(t.fails == 0);
  CHECK(t.holds == 33);  // connected unicyclic graphs on 7 vertices
  CHECK(t.scanned == t.holds + t.fails + t.na + t.skipped);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("sources") {
  const RunReport labeled = run(Config(Command::kVerify, "labeled:4", {"pr-at-most-twice-gamma"}));
  CHECK(labeled.graphs == 64);
  const auto edges = TempFile("graphs.txt", "3 2\n0 1\n1 2\n\n2 1\n0 1\n");
  const RunReport e = run(Config(Command::kClassify, edges.string()));
  CHECK(e.graphs == 2);
  const RunReport e2 = run(Config(Command::kClassify, "edges:" + edges.string()));
  CHECK(e2.graphs == 2);
  CHECK_THROWS_AS(run(Config(Command::kClassify, "no/such/file")), Error);
  CHECK_THROWS_AS(run(Config(Command::kClassify, "")), Error);
  CHECK_THROWS_AS(run(Config(Command::kClassify, "labeled:8")), Error);
}

TEST_CASE("empty input") {
  const RunReport r = run(Config(Command::kHunt, TempFile("empty.g6", "").string()));
  CHECK(r.graphs == 0);
  REQUIRE(r.hunt);
  CHECK(r.hunt->scanned == 0);
  CHECK(r.hunt->satisfiers == 0);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("malformed lines are reported and skipped") {
  const auto p = TempFile("bad.g6", ">>graph6<<Dhc\n\nnot graph6!\nA_\n");
  std::vector<std::string> lines;
  const RunReport r = run(Config(Command::kVerify, "g6:" + p.string(), {"pr-at-most-twice-gamma"}),
                          [&](const std::string& l) { lines.push_back(l); });
  CHECK(r.graphs == 3);
  REQUIRE(r.input_errors.size() == 1);
  CHECK(r.input_errors[0].line == 3);
  const CheckTotals& t = Totals(r, "pr-at-most-twice-gamma");
  CHECK(t.scanned == 3);
  CHECK(t.skipped == 1);
  CHECK(t.holds == 2);
  CHECK(lines.empty());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("reports do not depend on the number of workers") {
  RunConfig cfg = Config(Command::kVerify, "enum:6", {"all"});
  const RunReport one = run(cfg);
  cfg.jobs = 4;
  const RunReport four = run(cfg);
  auto a = one.ToJson(false);
  auto b = four.ToJson(false);
  CHECK(a["config"]["jobs"] == 1);
  a["config"].erase("jobs");
  b["config"].erase("jobs");
  CHECK(a == b);
  for (const auto& [id, t] : one.totals) {
    CAPTURE(id);
    CHECK(t.scanned == 156);
    CHECK(t.scanned == t.holds + t.fails + t.na + t.skipped);
    CHECK(t.fails == 0);
  }

  RunConfig hunt = Config(Command::kHunt, "enum:7");
  const RunReport h1 = run(hunt);
  hunt.jobs = 3;
  const RunReport h3 = run(hunt);
  CHECK(h1.hunt->ToJson() == h3.hunt->ToJson());
  CHECK(h1.hunt->satisfiers == 1);  // K2 + C5
}

TEST_CASE("exit code reflects failures") {
  RunReport r;
  CHECK(r.exit_code() == 0);
  r.failures.push_back(Verdict{});
  CHECK(r.exit_code() == 1);
  RunReport h;
  h.hunt.emplace();
  h.hunt->cactus_not_of_form = 1;
  CHECK(h.exit_code() == 1);
}

TEST_CASE("config round trip and validation") {
  RunConfig cfg = Config(Command::kDecide, "enum:5");
  cfg.decide_mode = DecideMode::kFastpath;
  cfg.jobs = 3;
  cfg.format = OutputFormat::kText;
  const RunConfig back = RunConfig::FromJson(cfg.ToJson());
  CHECK(back.ToJson() == cfg.ToJson());
  using nlohmann::json;
  CHECK_THROWS_AS(RunConfig::FromJson(json{{"command", "verify"}}), Error);
  CHECK_THROWS_AS(RunConfig::FromJson(json{{"command", "fly"}, {"source", "C5"}}), Error);
  CHECK_THROWS_AS(
      RunConfig::FromJson(json{{"command", "verify"}, {"source", "C5"}, {"jobs", 0}}), Error);
  CHECK_THROWS_AS(
      RunConfig::FromJson(json{{"command", "verify"}, {"source", "C5"}, {"extra", 1}}), Error);
  CHECK_THROWS_AS(RunConfig::FromJson(json::array()), Error);
  CHECK_THROWS_AS(run(Config(Command::kVerify, "C5", {"no-such-check"})), Error);
  CHECK_THROWS_AS(run(Config(Command::kVerify, "C5")), Error);
}

TEST_CASE("report output and rendering") {
  RunConfig cfg = Config(Command::kVerify, "C5", {"thm-unicyclic"});
  const fs::path out = fs::temp_directory_path() / "pairdom-harness-test" / "report.json";
  cfg.output = out.string();
  run(cfg);
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["totals"]["thm-unicyclic"]["holds"] == 1);
  CHECK(j.contains("elapsed_ms"));
  cfg.output.clear();
  cfg.format = OutputFormat::kText;
  const std::string text = run(cfg).Render();
  CHECK(text.find("thm-unicyclic") != std::string::npos);
}

TEST_CASE("generation") {
  std::vector<std::string> lines;
  auto collect = [&](const std::string& l) { lines.push_back(l); };
  generate("all:4", collect);
  CHECK(lines.size() == 11);
  lines.clear();
  generate("connected-all:1-4", collect);
  CHECK(lines.size() == 1 + 1 + 2 + 6);
  lines.clear();
  generate("triangle-free:5", collect);
  CHECK(lines.size() == 14);
  lines.clear();
  generate("star:t=2,d=1", collect);
  REQUIRE(lines.size() == 1);
  CHECK(parse_graph6(lines[0]).order() == make_subdivided_star(2, 1).order());
  CHECK_THROWS_AS(generate("connected-C5", collect), Error);
  CHECK_THROWS_AS(generate("all:10", collect), Error);
}
