// taskswap: plan, verify, and survey adjacent task swap sequences on
// distributed agent networks. All domain work goes through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taskswap/ts.h"

namespace {

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{TS_ERR_PARSE, "cannot open file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_assignment(const std::string& text, const std::string& what) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CliError{TS_ERR_PARSE, what + ": invalid JSON: " + e.what()};
  }
  if (!j.is_array()) throw CliError{TS_ERR_PARSE, what + ": expected an array"};
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw CliError{TS_ERR_PARSE, what + ": expected integer entries"};
    }
    out.push_back(v.get<int>());
  }
  return out;
}

void require_permutation(const std::vector<int>& v, const std::string& what) {
  const int n = static_cast<int>(v.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : v) {
    if (x < 1 || x > n || seen[x]) {
      throw CliError{TS_ERR_VALIDATION,
                     what + " is not a permutation of {1.." + std::to_string(n) + "}"};
    }
    seen[x] = true;
  }
  if (n == 0) throw CliError{TS_ERR_VALIDATION, what + " is empty"};
}

struct StringOut {
  char* s = nullptr;
  ~StringOut() { ts_string_free(s); }
};

void check(int rc) {
  if (rc != TS_OK) throw CliError{rc, ts_last_error()};
}

struct GraphHandle {
  ts_graph* g = nullptr;
  ~GraphHandle() { ts_graph_free(g); }
};

// Topology parse done CLI-side only to learn n for the tiny-case shortcut;
// the library re-parses and fully validates on graph creation.
int topology_size(const std::string& topo_json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(topo_json);
  } catch (const nlohmann::json::exception& e) {
    throw CliError{TS_ERR_PARSE, std::string("topology: invalid JSON: ") + e.what()};
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
      !j.contains("n") || !j["n"].is_number_integer()) {
    throw CliError{TS_ERR_PARSE, "topology: need string \"kind\" and integer \"n\""};
  }
  const std::string kind = j["kind"].get<std::string>();
  for (const char* known :
       {"line", "star", "complete", "complete_bipartite", "ring", "tree"}) {
    if (kind == known) return j["n"].get<int>();
  }
  throw CliError{TS_ERR_PARSE, "unknown topology kind \"" + kind + "\""};
}

nlohmann::json tiny_plan(const std::vector<int>& src, const std::vector<int>& tgt,
                         bool emit_states) {
  // n <= 2: the empty plan or the single possible swap
  nlohmann::json out;
  out["swaps"] = nlohmann::json::array();
  nlohmann::json states = nlohmann::json::array();
  states.push_back(src);
  if (src != tgt) {
    out["swaps"].push_back({1, 2});
    states.push_back(tgt);
  }
  out["length"] = out["swaps"].size();
  if (emit_states) out["states"] = states;
  return out;
}

struct CommonArgs {
  std::string topology_file;
  std::string source_file;
  std::string target_file;
};

struct Loaded {
  int n = 0;
  std::string topo_json;
  std::vector<int> source;
  std::vector<int> target;
  bool tiny() const { return n <= 2; }
};

Loaded load_common(const CommonArgs& args) {
  Loaded l;
  l.topo_json = read_file(args.topology_file);
  l.n = topology_size(l.topo_json);
  if (l.n < 1) throw CliError{TS_ERR_VALIDATION, "topology: n must be >= 1"};
  l.source = parse_assignment(read_file(args.source_file), "source");
  l.target = parse_assignment(read_file(args.target_file), "target");
  if (static_cast<int>(l.source.size()) != l.n ||
      static_cast<int>(l.target.size()) != l.n) {
    throw CliError{TS_ERR_VALIDATION,
                   "assignment sizes must equal the topology size n=" +
                       std::to_string(l.n)};
  }
  require_permutation(l.source, "source");
  require_permutation(l.target, "target");
  return l;
}

GraphHandle make_graph(const std::string& topo_json) {
  GraphHandle h;
  check(ts_graph_create(topo_json.c_str(), &h.g));
  return h;
}

int run(int argc, char** argv) {
  CLI::App app{"adjacent task swap planning on distributed agent networks"};
  app.require_subcommand(1);

  CommonArgs common;
  bool emit_states = false;
  double cost_per_swap = 1.0;
  bool cost_given = false;
  double h1 = 0.0, h2 = 0.0;
  bool h_given = false;
  double f_direct = 0.0;
  std::string plan_file;
  std::string family;
  int fam_n = 0, fam_k = 0;
  int cap = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--topology", common.topology_file, "topology spec file")
        ->required();
    cmd->add_option("--source", common.source_file, "source assignment file")
        ->required();
    cmd->add_option("--target", common.target_file, "target assignment file")
        ->required();
  };

  auto* cmd_plan = app.add_subcommand("plan", "compute a minimum-length swap plan");
  add_common(cmd_plan);
  cmd_plan->add_flag("--emit-states", emit_states, "include the full trajectory");
  auto* plan_cost =
      cmd_plan->add_option("--cost-per-swap", cost_per_swap, "migration cost per swap");
  auto* plan_h1 = cmd_plan->add_option("--h1", h1, "running cost of the source assignment");
  auto* plan_h2 = cmd_plan->add_option("--h2", h2, "running cost of the target assignment");

  auto* cmd_verify = app.add_subcommand("verify", "check a plan step by step");
  add_common(cmd_verify);
  cmd_verify->add_option("--plan", plan_file, "plan file to verify")->required();

  auto* cmd_oracle =
      app.add_subcommand("oracle", "exact BFS distance and a witness plan");
  add_common(cmd_oracle);
  cmd_oracle->add_option("--cap", cap, "oracle size cap (default 7)");

  auto* cmd_diameter =
      app.add_subcommand("diameter", "Cayley graph diameter survey");
  cmd_diameter
      ->add_option("--family", family, "one of BS, ST, CT, GST, MBS, HC")
      ->required();
  cmd_diameter->add_option("--n", fam_n, "letter count")->required();
  cmd_diameter->add_option("--k", fam_k, "GST layer index");
  cmd_diameter->add_option("--cap", cap, "oracle size cap (default 7)");

  auto* cmd_benefit = app.add_subcommand("benefit", "reassignment benefit report");
  cmd_benefit->add_option("--h1", h1, "running cost of the source assignment")
      ->required();
  cmd_benefit->add_option("--h2", h2, "running cost of the target assignment")
      ->required();
  auto* ben_f = cmd_benefit->add_option("--f", f_direct, "migration cost");
  auto* ben_plan =
      cmd_benefit->add_option("--plan", plan_file, "plan file to cost instead of --f");
  cmd_benefit->add_option("--cost-per-swap", cost_per_swap,
                          "migration cost per swap (with --plan)");
  ben_f->excludes(ben_plan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : TS_ERR_PARSE;
  }

  cost_given = plan_cost->count() > 0;
  h_given = plan_h1->count() > 0 && plan_h2->count() > 0;

  if (cmd_plan->parsed()) {
    const Loaded l = load_common(common);
    nlohmann::json out;
    if (l.tiny()) {
      out = tiny_plan(l.source, l.target, emit_states);
    } else {
      GraphHandle g = make_graph(l.topo_json);
      StringOut s;
      check(ts_plan(g.g, l.source.data(), l.target.data(), l.n,
                    emit_states ? 1 : 0, &s.s));
      out = nlohmann::json::parse(s.s);
    }
    if (cost_given || h_given) {
      const double f = cost_per_swap * out["length"].get<double>();
      out["cost"]["cost_per_swap"] = cost_per_swap;
      out["cost"]["f"] = f;
      if (h_given) {
        StringOut b;
        check(ts_benefit(h1, h2, f, &b.s));
        out["cost"]["benefit"] = nlohmann::json::parse(b.s);
      }
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (cmd_verify->parsed()) {
    const Loaded l = load_common(common);
    const std::string plan_json = read_file(plan_file);
    nlohmann::json out;
    if (l.tiny()) {
      nlohmann::json pj;
      try {
        pj = nlohmann::json::parse(plan_json);
      } catch (const nlohmann::json::exception& e) {
        throw CliError{TS_ERR_PARSE, std::string("plan: invalid JSON: ") + e.what()};
      }
      if (!pj.is_object() || !pj.contains("swaps") || !pj["swaps"].is_array()) {
        throw CliError{TS_ERR_PARSE, "plan: expected an object with a \"swaps\" array"};
      }
      auto cur = l.source;
      out["verdict"] = "OK";
      int step = 0;
      for (const auto& e : pj["swaps"]) {
        ++step;
        const bool pair_ok = e.is_array() && e.size() == 2 &&
                             e[0].is_number_integer() && e[1].is_number_integer();
        if (!pair_ok || l.n < 2 ||
            std::min(e[0].get<int>(), e[1].get<int>()) != 1 ||
            std::max(e[0].get<int>(), e[1].get<int>()) != 2) {
          out["verdict"] = "FAIL";
          out["step"] = step;
          out["reason"] = "non-edge";
          break;
        }
        std::swap(cur[0], cur[1]);
      }
      if (out["verdict"] == "OK" && cur != l.target) {
        out["verdict"] = "FAIL";
        out["step"] = step + 1;
        out["reason"] = "endpoint-mismatch";
      }
    } else {
      GraphHandle g = make_graph(l.topo_json);
      StringOut s;
      check(ts_verify(g.g, l.source.data(), l.target.data(), l.n,
                      plan_json.c_str(), &s.s));
      out = nlohmann::json::parse(s.s);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (cmd_oracle->parsed()) {
    const Loaded l = load_common(common);
    nlohmann::json out;
    if (l.tiny()) {
      nlohmann::json plan = tiny_plan(l.source, l.target, false);
      out["distance"] = plan["length"];
      out["plan"] = plan;
    } else {
      GraphHandle g = make_graph(l.topo_json);
      StringOut s;
      check(ts_oracle(g.g, l.source.data(), l.target.data(), l.n, cap, &s.s));
      out = nlohmann::json::parse(s.s);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (cmd_diameter->parsed()) {
    StringOut s;
    check(ts_diameter(family.c_str(), fam_n, fam_k, cap, &s.s));
    std::cout << s.s << "\n";
    return 0;
  }

  if (cmd_benefit->parsed()) {
    double f = f_direct;
    if (ben_plan->count() > 0) {
      nlohmann::json pj;
      try {
        pj = nlohmann::json::parse(read_file(plan_file));
      } catch (const nlohmann::json::exception& e) {
        throw CliError{TS_ERR_PARSE, std::string("plan: invalid JSON: ") + e.what()};
      }
      if (!pj.is_object() || !pj.contains("swaps") || !pj["swaps"].is_array()) {
        throw CliError{TS_ERR_PARSE, "plan: expected an object with a \"swaps\" array"};
      }
      f = cost_per_swap * static_cast<double>(pj["swaps"].size());
    }
    StringOut s;
    check(ts_benefit(h1, h2, f, &s.s));
    std::cout << s.s << "\n";
    return 0;
  }

  return TS_ERR_INTERNAL;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return TS_ERR_INTERNAL;
  }
}
