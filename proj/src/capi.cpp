#include "taskswap/ts.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "taskswap/cost.hpp"
#include "taskswap/oracle.hpp"
#include "taskswap/planner.hpp"
#include "taskswap/serialize.hpp"
#include "taskswap/topology.hpp"

struct ts_graph {
  taskswap::TaskSwapGraph graph;
};

namespace {

thread_local std::string g_last_error;

int code_of(const taskswap::Error& e) { return static_cast<int>(e.code()); }

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TS_OK;
  } catch (const taskswap::Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TS_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

taskswap::Permutation make_perm(const int* data, int n, const char* what) {
  if (!data || n < 1) {
    throw taskswap::ValidationError(std::string(what) +
                                    ": null or empty assignment");
  }
  return taskswap::Permutation(std::vector<int>(data, data + n));
}

void require_graph_size(const ts_graph* g, int n) {
  if (n != g->graph.size()) {
    throw taskswap::ValidationError(
        "assignment size " + std::to_string(n) + " differs from graph size " +
        std::to_string(g->graph.size()));
  }
}

}  // namespace

extern "C" {

int ts_graph_create(const char* topology_json, ts_graph** out) {
  return guarded([&] {
    if (!topology_json || !out) {
      throw taskswap::ValidationError("null argument to ts_graph_create");
    }
    auto spec = taskswap::parse_topology(topology_json);
    *out = new ts_graph{taskswap::TaskSwapGraph(spec)};
  });
}

void ts_graph_free(ts_graph* g) { delete g; }

int ts_graph_size(const ts_graph* g) { return g ? g->graph.size() : 0; }

int ts_plan(const ts_graph* g, const int* source, const int* target, int n,
            int emit_states, char** json_out) {
  return guarded([&] {
    if (!g || !json_out) throw taskswap::ValidationError("null argument to ts_plan");
    require_graph_size(g, n);
    const auto src = make_perm(source, n, "source");
    const auto tgt = make_perm(target, n, "target");
    const auto plan = taskswap::plan(g->graph, src, tgt);
    if (emit_states) {
      const auto states = taskswap::plan_states(src, plan);
      *json_out = dup_string(taskswap::plan_to_json(plan, &states));
    } else {
      *json_out = dup_string(taskswap::plan_to_json(plan));
    }
  });
}

int ts_verify(const ts_graph* g, const int* source, const int* target, int n,
              const char* plan_json, char** json_out) {
  return guarded([&] {
    if (!g || !plan_json || !json_out) {
      throw taskswap::ValidationError("null argument to ts_verify");
    }
    require_graph_size(g, n);
    const auto src = make_perm(source, n, "source");
    const auto tgt = make_perm(target, n, "target");
    const auto plan = taskswap::plan_from_json(plan_json);
    const auto res = taskswap::verify_plan(g->graph, src, tgt, plan);
    nlohmann::json j;
    if (res.ok) {
      j["verdict"] = "OK";
    } else {
      j["verdict"] = "FAIL";
      j["step"] = res.failed_step;
      j["reason"] = res.reason == taskswap::VerifyResult::Reason::non_edge
                        ? "non-edge"
                        : "endpoint-mismatch";
    }
    *json_out = dup_string(j.dump());
  });
}

int ts_oracle(const ts_graph* g, const int* source, const int* target, int n,
              int cap, char** json_out) {
  return guarded([&] {
    if (!g || !json_out) {
      throw taskswap::ValidationError("null argument to ts_oracle");
    }
    require_graph_size(g, n);
    const auto src = make_perm(source, n, "source");
    const auto tgt = make_perm(target, n, "target");
    if (cap <= 0) cap = taskswap::kDefaultOracleCap;
    const auto plan =
        taskswap::shortest_plan(g->graph.generating_set(), src, tgt, cap);
    nlohmann::json j;
    j["distance"] = plan.length();
    j["plan"] = nlohmann::json::parse(taskswap::plan_to_json(plan));
    *json_out = dup_string(j.dump());
  });
}

int ts_diameter(const char* family, int n, int k, int cap, char** json_out) {
  return guarded([&] {
    if (!family || !json_out) {
      throw taskswap::ValidationError("null argument to ts_diameter");
    }
    const auto fam = taskswap::family_from_name(family);
    if (cap <= 0) cap = taskswap::kDefaultOracleCap;
    const auto res = taskswap::cayley_diameter(fam, n, k, cap);
    nlohmann::json j;
    j["family"] = taskswap::family_name(fam);
    j["n"] = n;
    if (fam == taskswap::CayleyFamily::GST) j["k"] = k;
    j["computed"] = res.diameter;
    j["reachable_states"] = res.reachable_states;
    const auto expected = taskswap::expected_diameter(fam, n, k);
    if (expected) {
      j["expected"] = *expected;
      j["match"] = *expected == res.diameter;
    } else {
      j["expected"] = nullptr;
      j["expected_note"] = "no known closed form";
    }
    if (fam == taskswap::CayleyFamily::HC) {
      // the published table indexes HC by generator count, not letters
      j["generator_count"] = n / 2;
      j["note"] =
          "HC indexed by letters n; the table's HC_m with 2^m states and "
          "diameter m corresponds to m = floor(n/2) generators";
    }
    *json_out = dup_string(j.dump());
  });
}

int ts_benefit(double h1, double h2, double f, char** json_out) {
  return guarded([&] {
    if (!json_out) throw taskswap::ValidationError("null argument to ts_benefit");
    taskswap::CostParams params;
    params.h1 = h1;
    params.h2 = h2;
    *json_out =
        dup_string(taskswap::benefit_report_to_json(taskswap::benefit_report(params, f)));
  });
}

const char* ts_last_error(void) { return g_last_error.c_str(); }

void ts_string_free(char* s) { delete[] s; }

}  // extern "C"
