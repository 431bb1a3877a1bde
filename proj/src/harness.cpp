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


#include "pairdom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "pairdom/checks.hpp"
#include "pairdom/enumerate.hpp"
#include "pairdom/error.hpp"
#include "pairdom/families.hpp"

namespace pairdom {

using nlohmann::json;

namespace {

constexpr std::string_view kAgreementCheck = "fastpath-agrees";

template <typename E>
E ParseName(std::string_view name, std::initializer_list<E> options,
            std::string_view (*to_name)(E), std::string_view what) {
  for (E e : options) {
    if (to_name(e) == name) return e;
  }
  Fail(ErrorCode::kInvalidArgument,
       "unknown " + std::string(what) + " \"" + std::string(name) + "\"");
}

std::string_view FormatName(OutputFormat f) { return f == OutputFormat::kJson ? "json" : "text"; }

int ParseOrder(std::string_view text) {
  int n = -1;
  try {
    std::size_t used = 0;
    n = std::stoi(std::string(text), &used);
    if (used != text.size()) n = -1;
  } catch (const std::exception&) {
    n = -1;
  }
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "bad order \"" + std::string(text) + "\"");
  return n;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// ---------------------------------------------------------------------------
// Sources

struct Item {
  long long line = 0;
  std::optional<Graph> graph;
  std::string error;
};

class Source {
 public:
  virtual ~Source() = default;
  virtual bool Next(Item& item) = 0;
};

class Graph6Source : public Source {
 public:
  explicit Graph6Source(std::istream& in) : in_(&in) {}
  explicit Graph6Source(const std::string& path) : file_(std::make_unique<std::ifstream>(path)) {
    if (!*file_) Fail(ErrorCode::kIo, "cannot open \"" + path + "\"");
    in_ = file_.get();
  }

  bool Next(Item& item) override {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_no_;
      std::string_view body = line;
      if (StartsWith(body, ">>graph6<<")) body.remove_prefix(10);
      if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      item = Item{line_no_, std::nullopt, {}};
      try {
        item.graph = parse_graph6(body);
      } catch (const Error& e) {
        item.error = e.what();
      }
      return true;
    }
    if (in_->bad()) Fail(ErrorCode::kIo, "read error");
    return false;
  }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_ = nullptr;
  long long line_no_ = 0;
};

class ListSource : public Source {
 public:
  explicit ListSource(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}

  bool Next(Item& item) override {
    if (next_ >= graphs_.size()) return false;
    item = Item{static_cast<long long>(next_ + 1), std::move(graphs_[next_]), {}};
    ++next_;
    return true;
  }

 private:
  std::vector<Graph> graphs_;
  std::size_t next_ = 0;
};

class LabeledSource : public Source {
 public:
  explicit LabeledSource(int n) : n_(n), count_(std::uint64_t{1} << (n * (n - 1) / 2)) {
    if (n > kMaxLabeledOrder) Fail(ErrorCode::kOutOfRange, "labeled enumeration limited to n <= 7");
  }

  bool Next(Item& item) override {
    if (code_ >= count_) return false;
    item = Item{static_cast<long long>(code_ + 1), graph_from_code(n_, code_), {}};
    ++code_;
    return true;
  }

 private:
  int n_;
  std::uint64_t count_;
  std::uint64_t code_ = 0;
};

std::vector<Graph> ReadEdgeLists(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open \"" + path + "\"");
  return parse_edge_lists(in);
}

bool LooksLikeEdgeList(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open \"" + path + "\"");
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (StartsWith(line, ">>graph6<<")) return false;
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1).find_first_of(" \t") != std::string::npos;
  }
  return false;
}

std::unique_ptr<Source> OpenSource(const std::string& spec) {
  if (spec.empty()) Fail(ErrorCode::kInvalidArgument, "no input source");
  if (spec == "-") return std::make_unique<Graph6Source>(std::cin);
  if (StartsWith(spec, "g6:")) return std::make_unique<Graph6Source>(spec.substr(3));
  if (StartsWith(spec, "edges:")) return std::make_unique<ListSource>(ReadEdgeLists(spec.substr(6)));
  if (StartsWith(spec, "enum:")) {
    return std::make_unique<ListSource>(enumerate_labeled_graphs(ParseOrder(spec.substr(5)), true));
  }
  if (StartsWith(spec, "labeled:")) {
    return std::make_unique<LabeledSource>(ParseOrder(spec.substr(8)));
  }
  if (StartsWith(spec, "family:")) {
    return std::make_unique<ListSource>(std::vector<Graph>{parse_family_spec(spec.substr(7))});
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    if (LooksLikeEdgeList(spec)) return std::make_unique<ListSource>(ReadEdgeLists(spec));
    return std::make_unique<Graph6Source>(spec);
  }
  try {
    return std::make_unique<ListSource>(std::vector<Graph>{parse_family_spec(spec)});
  } catch (const Error&) {
    Fail(ErrorCode::kIo, "\"" + spec + "\" is neither a readable file nor a family spec");
  }
}

// ---------------------------------------------------------------------------
// Per-graph work

struct ItemResult {
  std::vector<Verdict> verdicts;
  json record;
  HuntReport hunt;
};

json SetJson(const VertexSet& s) { return s.elements(); }

json InvariantsJson(const Graph& g) {
  json j = {{"graph6", encode_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
  InvariantReport r;
  try {
    r = invariants(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGuardExceeded) throw;
    j["status"] = "skipped";
    j["note"] = e.what();
    return j;
  }
  j["gamma"] = r.gamma;
  j["upper_gamma"] = r.upper_gamma;
  j["gamma_witness"] = SetJson(r.gamma_witness);
  j["upper_gamma_witness"] = SetJson(r.upper_gamma_witness);
  if (r.paired_defined()) {
    j["gamma_pr"] = *r.gamma_pr;
    j["upper_gamma_pr"] = *r.upper_gamma_pr;
    j["gamma_pr_witness"] = SetJson(*r.gamma_pr_witness);
    j["upper_gamma_pr_witness"] = SetJson(*r.upper_gamma_pr_witness);
  } else {
    j["gamma_pr"] = nullptr;
    j["upper_gamma_pr"] = nullptr;
    j["note"] = "paired domination undefined: isolated vertex";
  }
  return j;
}

json ClassifyJson(const Graph& g) {
  const ClassFlags f = classify(g);
  json j = {{"graph6", encode_graph6(g)},
            {"n", g.order()},
            {"m", g.size()},
            {"connected", f.connected},
            {"bipartite", f.bipartite},
            {"unicyclic", f.unicyclic},
            {"cactus", f.cactus},
            {"c3_free", f.c3_free},
            {"componentwise_c3_free_cactus", is_componentwise_c3_free_cactus(g)},
            {"family", recognize_family(g).ToString()}};
  j["girth"] = f.girth ? json(*f.girth) : json(nullptr);
  return j;
}

json DecisionJson(const Decision& d) {
  json j = {{"holds", d.equality_holds}, {"method", std::string(MethodName(d.method))}};
  if (const auto* fam = std::get_if<FamilyLabel>(&d.evidence)) {
    j["family"] = fam->ToString();
  } else {
    const auto& r = std::get<InvariantReport>(d.evidence);
    j["upper_gamma"] = r.upper_gamma;
    j["upper_gamma_pr"] = *r.upper_gamma_pr;
  }
  return j;
}

void Decide(const Graph& g, DecideMode mode, ItemResult& out) {
  out.record = {{"graph6", encode_graph6(g)}, {"n", g.order()}};
  std::optional<Decision> fast;
  if (mode != DecideMode::kBrute) {
    fast = decide_equality_fastpath(g);
    out.record["fastpath"] = fast ? DecisionJson(*fast) : json{{"status", "not-applicable"}};
  }
  std::optional<Decision> brute;
  std::string brute_status;
  if (mode != DecideMode::kFastpath) {
    try {
      brute = decide_equality_bruteforce(g);
      out.record["brute"] = DecisionJson(*brute);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUndefined && e.code() != ErrorCode::kGuardExceeded) throw;
      brute_status = e.code() == ErrorCode::kUndefined ? "undefined" : "skipped";
      out.record["brute"] = {{"status", brute_status}, {"note", e.what()}};
    }
  }
  if (mode != DecideMode::kBoth) return;

  Verdict v;
  v.check_id = std::string(kAgreementCheck);
  v.graph6 = out.record["graph6"];
  if (!fast) {
    v.outcome = Outcome::kNotApplicable;
    v.note = "no characterized class applies";
  } else if (!brute) {
    v.outcome = brute_status == "skipped" ? Outcome::kSkipped : Outcome::kNotApplicable;
    v.note = "brute force " + brute_status;
  } else if (fast->equality_holds == brute->equality_holds) {
    v.outcome = Outcome::kHolds;
  } else {
    v.outcome = Outcome::kFails;
    v.witness = json{{"fastpath", DecisionJson(*fast)}, {"brute", DecisionJson(*brute)}};
  }
  out.record["agree"] = v.outcome == Outcome::kHolds   ? json(true)
                        : v.outcome == Outcome::kFails ? json(false)
                                                       : json(nullptr);
  out.verdicts.push_back(std::move(v));
}

ItemResult Process(const RunConfig& cfg, const std::vector<std::string>& checks, const Graph& g) {
  ItemResult out;
  switch (cfg.command) {
    case Command::kInvariants:
      out.record = InvariantsJson(g);
      break;
    case Command::kClassify:
      out.record = ClassifyJson(g);
      break;
    case Command::kDecide:
      Decide(g, cfg.decide_mode, out);
      break;
    case Command::kVerify: {
      GraphContext ctx(g);
      for (const auto& id : checks) {
        try {
          out.verdicts.push_back(run_check(id, ctx));
        } catch (const Error& e) {
          Verdict v;
          v.check_id = id;
          v.graph6 = ctx.graph6();
          v.outcome = Outcome::kSkipped;
          v.note = e.what();
          out.verdicts.push_back(std::move(v));
        }
      }
      break;
    }
    case Command::kHunt:
      out.hunt = hunt_one(g);
      break;
  }
  return out;
}

std::vector<std::string> ResolveChecks(const RunConfig& cfg) {
  if (cfg.command == Command::kDecide && cfg.decide_mode == DecideMode::kBoth) {
    return {std::string(kAgreementCheck)};
  }
  if (cfg.command != Command::kVerify) return {};
  std::vector<std::string> out;
  for (const auto& id : cfg.checks) {
    if (id == "all") {
      for (const auto& info : all_checks()) out.emplace_back(info.id);
    } else if (is_known_check(id)) {
      out.push_back(id);
    } else {
      Fail(ErrorCode::kInvalidArgument, "unknown check \"" + id + "\"");
    }
  }
  // Keep first occurrences only.
  std::vector<std::string> unique;
  for (auto& id : out) {
    if (std::find(unique.begin(), unique.end(), id) == unique.end()) unique.push_back(id);
  }
  if (unique.empty()) Fail(ErrorCode::kInvalidArgument, "verify needs at least one check");
  return unique;
}

json TotalsJson(const CheckTotals& t) {
  return {{"scanned", t.scanned}, {"holds", t.holds}, {"fails", t.fails},
          {"na", t.na},           {"skipped", t.skipped}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Config and report

std::string_view CommandName(Command c) {
  switch (c) {
    case Command::kInvariants:
      return "invariants";
    case Command::kClassify:
      return "classify";
    case Command::kDecide:
      return "decide";
    case Command::kVerify:
      return "verify";
    case Command::kHunt:
      return "hunt";
  }
  return "unknown";
}

std::string_view DecideModeName(DecideMode m) {
  switch (m) {
    case DecideMode::kFastpath:
      return "fastpath";
    case DecideMode::kBrute:
      return "brute";
    case DecideMode::kBoth:
      return "both";
  }
  return "unknown";
}

json RunConfig::ToJson() const {
  return {{"command", std::string(CommandName(command))},
          {"source", source},
          {"checks", checks},
          {"decide_mode", std::string(DecideModeName(decide_mode))},
          {"jobs", jobs},
          {"format", std::string(FormatName(format))},
          {"output", output}};
}

RunConfig RunConfig::FromJson(const json& j) {
  if (!j.is_object()) Fail(ErrorCode::kInvalidArgument, "config must be a JSON object");
  static const std::vector<std::string> kKeys = {"command", "source", "checks", "decide_mode",
                                                 "jobs",    "format", "output"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      Fail(ErrorCode::kInvalidArgument, "unknown config key \"" + key + "\"");
    }
  }
  RunConfig c;
  try {
    c.command = ParseName<Command>(j.at("command").get<std::string>(),
                                   {Command::kInvariants, Command::kClassify, Command::kDecide,
                                    Command::kVerify, Command::kHunt},
                                   CommandName, "command");
    c.source = j.at("source").get<std::string>();
    if (j.contains("checks")) c.checks = j["checks"].get<std::vector<std::string>>();
    if (j.contains("decide_mode")) {
      c.decide_mode = ParseName<DecideMode>(
          j["decide_mode"].get<std::string>(),
          {DecideMode::kFastpath, DecideMode::kBrute, DecideMode::kBoth}, DecideModeName,
          "decide mode");
    }
    if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
    if (j.contains("format")) {
      c.format = ParseName<OutputFormat>(j["format"].get<std::string>(),
                                         {OutputFormat::kJson, OutputFormat::kText}, FormatName,
                                         "format");
    }
    if (j.contains("output")) c.output = j["output"].get<std::string>();
  } catch (const json::exception& e) {
    Fail(ErrorCode::kInvalidArgument, std::string("bad config: ") + e.what());
  }
  if (c.jobs < 1 || c.jobs > 256) Fail(ErrorCode::kInvalidArgument, "jobs must be in 1..256");
  return c;
}

void CheckTotals::Count(Outcome o) {
  ++scanned;
  switch (o) {
    case Outcome::kHolds:
      ++holds;
      break;
    case Outcome::kFails:
      ++fails;
      break;
    case Outcome::kNotApplicable:
      ++na;
      break;
    case Outcome::kSkipped:
      ++skipped;
      break;
  }
}

int RunReport::exit_code() const {
  if (!failures.empty()) return 1;
  if (hunt && hunt->cactus_not_of_form > 0) return 1;
  return 0;
}

json RunReport::ToJson(bool with_elapsed) const {
  json j;
  j["config"] = config.ToJson();
  j["graphs"] = graphs;
  json totals_json = json::object();
  for (const auto& [id, t] : totals) totals_json[id] = TotalsJson(t);
  j["totals"] = totals_json;
  json fails = json::array();
  for (const auto& v : failures) fails.push_back(v.ToJson());
  j["failures"] = fails;
  json errors = json::array();
  for (const auto& e : input_errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  j["input_errors"] = errors;
  if (config.command == Command::kInvariants || config.command == Command::kClassify ||
      config.command == Command::kDecide) {
    j["results"] = results;
  }
  if (hunt) j["hunt"] = hunt->ToJson();
  if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string RunReport::ToText() const {
  std::ostringstream os;
  os << CommandName(config.command) << " " << config.source << ": " << graphs << " graphs\n";
  for (const auto& e : input_errors) os << "line " << e.line << ": " << e.message << "\n";
  for (const auto& r : results) {
    os << r["graph6"].get<std::string>();
    for (const auto& [key, value] : r.items()) {
      if (key != "graph6") os << " " << key << "=" << value.dump();
    }
    os << "\n";
  }
  if (!totals.empty()) {
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %10s %10s %8s %10s %8s\n", "check", "scanned", "holds",
                  "fails", "na", "skipped");
    os << line;
    for (const auto& [id, t] : totals) {
      std::snprintf(line, sizeof line, "%-28s %10lld %10lld %8lld %10lld %8lld\n", id.c_str(),
                    t.scanned, t.holds, t.fails, t.na, t.skipped);
      os << line;
    }
  }
  for (const auto& v : failures) os << "FAIL " << v.ToJson().dump() << "\n";
  if (hunt) {
    os << "scanned " << hunt->scanned << ", c3-free " << hunt->c3_free << ", considered "
       << hunt->considered << ", skipped " << hunt->skipped << "\n"
       << "satisfiers " << hunt->satisfiers << " (of form m1K2+m2C5: " << hunt->of_form
       << ", cactus: " << hunt->cactus_satisfiers
       << ", cactus not of form: " << hunt->cactus_not_of_form
       << ", non-cactus: " << hunt->non_cactus_satisfiers << ")\n";
    for (const auto& r : hunt->exceptions) {
      os << "exception " << r.graph6 << " n=" << r.order << " Γ=" << r.upper_gamma
         << " Γpr=" << r.upper_gamma_pr << (r.cactus ? " cactus" : " non-cactus") << "\n";
    }
    os << "non-cactus satisfiers are evidence only\n";
  }
  os << "elapsed " << static_cast<long long>(elapsed_ms) << " ms\n";
  return os.str();
}

std::string RunReport::Render() const {
  return config.format == OutputFormat::kJson ? ToJson().dump(2) + "\n" : ToText();
}

// ---------------------------------------------------------------------------
// Driver

RunReport run(const RunConfig& config, const LineSink& on_failure) {
  const auto start = std::chrono::steady_clock::now();
  if (config.jobs < 1) Fail(ErrorCode::kInvalidArgument, "jobs must be positive");
  RunReport report;
  report.config = config;
  const std::vector<std::string> checks = ResolveChecks(config);
  for (const auto& id : checks) report.totals.emplace_back(id, CheckTotals{});
  if (config.command == Command::kHunt) report.hunt.emplace();

  std::unique_ptr<Source> source = OpenSource(config.source);
  const std::size_t batch_size = 64 * static_cast<std::size_t>(config.jobs);
  std::vector<Item> batch;
  std::vector<ItemResult> results;
  std::vector<std::string> errors;

  const auto emit = [&](const json& line) {
    if (on_failure) on_failure(line.dump());
  };

  for (bool more = true; more;) {
    batch.clear();
    Item item;
    while (batch.size() < batch_size && (more = source->Next(item))) batch.push_back(std::move(item));
    if (batch.empty()) break;

    results.assign(batch.size(), ItemResult{});
    errors.assign(batch.size(), std::string());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) {
        if (!batch[i].graph) continue;
        try {
          results[i] = Process(config, checks, *batch[i].graph);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    };
    const int workers = std::min<int>(config.jobs, static_cast<int>(batch.size()));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    // Collect in input order.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++report.graphs;
      const std::string message = !batch[i].graph ? batch[i].error : errors[i];
      if (!message.empty()) {
        report.input_errors.push_back({batch[i].line, message});
        for (auto& [id, t] : report.totals) t.Count(Outcome::kSkipped);
        if (report.hunt) {
          ++report.hunt->scanned;
          ++report.hunt->skipped;
        }
        continue;
      }
      ItemResult& r = results[i];
      for (std::size_t c = 0; c < r.verdicts.size(); ++c) {
        Verdict& v = r.verdicts[c];
        report.totals[c].second.Count(v.outcome);
        if (v.outcome == Outcome::kFails) {
          emit(v.ToJson());
          report.failures.push_back(std::move(v));
        }
      }
      if (!r.record.is_null() && config.command != Command::kVerify) {
        report.results.push_back(std::move(r.record));
      }
      if (report.hunt) {
        for (const auto& rec : r.hunt.exceptions) {
          emit({{"kind", "hunt-exception"}, {"graph6", rec.graph6}, {"cactus", rec.cactus},
                {"upper_gamma", rec.upper_gamma}, {"upper_gamma_pr", rec.upper_gamma_pr}});
        }
        report.hunt->Add(r.hunt);
      }
    }
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!config.output.empty()) {
    std::ofstream out(config.output);
    if (!out) Fail(ErrorCode::kIo, "cannot write \"" + config.output + "\"");
    out << report.Render();
    if (!out) Fail(ErrorCode::kIo, "write to \"" + config.output + "\" failed");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generation

void generate(const std::string& what, const LineSink& emit) {
  std::string_view spec = what;
  bool connected_only = false;
  if (StartsWith(spec, "connected-")) {
    connected_only = true;
    spec.remove_prefix(10);
  }
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const auto emit_graph = [&](const Graph& g) {
    if (!connected_only || is_connected(g)) emit(encode_graph6(g));
  };

  if (colon != std::string_view::npos && (head == "enum" || head == "labeled")) {
    const int n = ParseOrder(spec.substr(colon + 1));
    if (head == "labeled") {
      for_each_labeled_graph(n, emit_graph);
    } else {
      for (const Graph& g : enumerate_labeled_graphs(n, true)) emit_graph(g);
    }
    return;
  }
  if (colon != std::string_view::npos &&
      (head == "all" || head == "triangle-free" || head == "at-most-one-cycle")) {
    // N or a range M-N.
    const std::string_view range = spec.substr(colon + 1);
    const auto dash = range.find('-');
    const int lo = ParseOrder(range.substr(0, dash));
    const int hi = dash == std::string_view::npos ? lo : ParseOrder(range.substr(dash + 1));
    if (hi < lo) Fail(ErrorCode::kInvalidArgument, "empty order range");
    const auto levels = enumerate_graph_classes(hi, ParseGraphClass(head));
    for (int n = lo; n <= hi; ++n) {
      for (const Graph& g : levels[n]) emit_graph(g);
    }
    return;
  }
  if (connected_only) Fail(ErrorCode::kInvalidArgument, "connected- applies to class streams only");
  emit(encode_graph6(parse_family_spec(spec)));
}

}  // namespace pairdom
