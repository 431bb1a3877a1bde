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


#include "pairdom/pairdom.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "pairdom/characterizations.hpp"
#include "pairdom/checks.hpp"
#include "pairdom/domination.hpp"
#include "pairdom/error.hpp"
#include "pairdom/families.hpp"
#include "pairdom/graph.hpp"
#include "pairdom/harness.hpp"

struct pd_graph {
  pairdom::Graph graph;
};

namespace {

thread_local std::string last_error;

pd_status Record(pd_status status, const char* what) {
  last_error = what;
  return status;
}

template <typename F>
pd_status Guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return PD_OK;
  } catch (const pairdom::Error& e) {
    return Record(static_cast<pd_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Record(PD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Record(PD_ERR_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) pairdom::Fail(pairdom::ErrorCode::kInvalidArgument, what);
}

}  // namespace

extern "C" {

const char* pd_version(void) { return "0.1.0"; }

const char* pd_last_error(void) { return last_error.c_str(); }

const char* pd_status_name(pd_status status) {
  switch (status) {
    case PD_OK:
      return "ok";
    case PD_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PD_ERR_OUT_OF_RANGE:
      return "out of range";
    case PD_ERR_PARSE:
      return "parse error";
    case PD_ERR_GUARD_EXCEEDED:
      return "size guard exceeded";
    case PD_ERR_UNDEFINED:
      return "undefined";
    case PD_ERR_IO:
      return "i/o error";
    case PD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

pd_status pd_graph_build(int n, const int* edges, size_t m, pd_graph** out) {
  return Guarded([&] {
    Require(out != nullptr, "null output");
    Require(m == 0 || edges != nullptr, "null edge array");
    if (n < 0 || n > pairdom::kMaxOrder) {
      pairdom::Fail(pairdom::ErrorCode::kOutOfRange, "order out of range");
    }
    std::vector<pairdom::Edge> list;
    for (size_t i = 0; i < m; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new pd_graph{pairdom::Graph(n, list)};
  });
}

pd_status pd_graph_from_graph6(const char* line, pd_graph** out) {
  return Guarded([&] {
    Require(line != nullptr && out != nullptr, "null argument");
    *out = new pd_graph{pairdom::parse_graph6(line)};
  });
}

pd_status pd_graph_from_family(const char* spec, pd_graph** out) {
  return Guarded([&] {
    Require(spec != nullptr && out != nullptr, "null argument");
    *out = new pd_graph{pairdom::parse_family_spec(spec)};
  });
}

void pd_graph_free(pd_graph* g) { delete g; }

int pd_graph_order(const pd_graph* g) { return g == nullptr ? -1 : g->graph.order(); }

int pd_graph_size(const pd_graph* g) { return g == nullptr ? -1 : g->graph.size(); }

pd_status pd_graph_to_graph6(const pd_graph* g, char** out) {
  return Guarded([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = Dup(pairdom::encode_graph6(g->graph));
  });
}

void pd_string_free(char* s) { std::free(s); }

pd_status pd_graph_invariants(const pd_graph* g, pd_invariants* out) {
  return Guarded([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const pairdom::InvariantReport r = pairdom::invariants(g->graph);
    out->gamma = r.gamma;
    out->upper_gamma = r.upper_gamma;
    out->gamma_pr = r.gamma_pr.value_or(-1);
    out->upper_gamma_pr = r.upper_gamma_pr.value_or(-1);
  });
}

pd_status pd_graph_classify(const pd_graph* g, pd_class_flags* out) {
  return Guarded([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const pairdom::ClassFlags f = pairdom::classify(g->graph);
    out->connected = f.connected;
    out->bipartite = f.bipartite;
    out->unicyclic = f.unicyclic;
    out->cactus = f.cactus;
    out->c3_free = f.c3_free;
    out->girth = f.girth.value_or(-1);
  });
}

pd_status pd_graph_family(const pd_graph* g, char** out) {
  return Guarded([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = Dup(pairdom::recognize_family(g->graph).ToString());
  });
}

pd_status pd_decide(const pd_graph* g, pd_decide_mode mode, int* applicable, int* holds,
                    char** method) {
  return Guarded([&] {
    Require(g != nullptr && applicable != nullptr && holds != nullptr, "null argument");
    std::optional<pairdom::Decision> d;
    if (mode == PD_DECIDE_FASTPATH) {
      d = pairdom::decide_equality_fastpath(g->graph);
    } else {
      Require(mode == PD_DECIDE_BRUTE, "unknown decide mode");
      d = pairdom::decide_equality_bruteforce(g->graph);
    }
    *applicable = d.has_value();
    if (!d) return;
    *holds = d->equality_holds;
    if (method != nullptr) *method = Dup(std::string(pairdom::MethodName(d->method)));
  });
}

pd_status pd_check(const pd_graph* g, const char* check_id, char** verdict_json) {
  return Guarded([&] {
    Require(g != nullptr && check_id != nullptr && verdict_json != nullptr, "null argument");
    pairdom::GraphContext ctx(g->graph);
    *verdict_json = Dup(pairdom::run_check(check_id, ctx).ToJson().dump());
  });
}

pd_status pd_list_checks(char** json) {
  return Guarded([&] {
    Require(json != nullptr, "null argument");
    nlohmann::json list = nlohmann::json::array();
    for (const auto& info : pairdom::all_checks()) {
      list.push_back({{"id", std::string(info.id)}, {"summary", std::string(info.summary)}});
    }
    *json = Dup(list.dump());
  });
}

pd_status pd_run(const char* config_json, pd_line_sink sink, void* user, char** report,
                 int* exit_code) {
  return Guarded([&] {
    Require(config_json != nullptr, "null config");
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      pairdom::Fail(pairdom::ErrorCode::kParse, std::string("config is not JSON: ") + e.what());
    }
    const pairdom::RunConfig config = pairdom::RunConfig::FromJson(parsed);
    pairdom::LineSink forward;
    if (sink != nullptr) forward = [&](const std::string& line) { sink(line.c_str(), user); };
    const pairdom::RunReport r = pairdom::run(config, forward);
    if (report != nullptr) *report = Dup(r.Render());
    if (exit_code != nullptr) *exit_code = r.exit_code();
  });
}

pd_status pd_generate(const char* what, pd_line_sink sink, void* user) {
  return Guarded([&] {
    Require(what != nullptr && sink != nullptr, "null argument");
    pairdom::generate(what, [&](const std::string& line) { sink(line.c_str(), user); });
  });
}

}  // extern "C"
