#include "taskswap/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <json.hpp>

namespace taskswap {

std::string kind_name(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::line: return "line";
    case TopologyKind::star: return "star";
    case TopologyKind::complete: return "complete";
    case TopologyKind::complete_bipartite: return "complete_bipartite";
    case TopologyKind::ring: return "ring";
    case TopologyKind::tree: return "tree";
  }
  throw InternalError("unhandled topology kind");
}

TopologyKind kind_from_name(const std::string& name) {
  if (name == "line") return TopologyKind::line;
  if (name == "star") return TopologyKind::star;
  if (name == "complete") return TopologyKind::complete;
  if (name == "complete_bipartite") return TopologyKind::complete_bipartite;
  if (name == "ring") return TopologyKind::ring;
  if (name == "tree") return TopologyKind::tree;
  throw ParseError("unknown topology kind \"" + name + "\"");
}

namespace {

std::vector<std::pair<int, int>> topology_edges(const TopologySpec& s) {
  std::vector<std::pair<int, int>> e;
  switch (s.kind) {
    case TopologyKind::line:
      for (int i = 1; i < s.n; ++i) e.emplace_back(i, i + 1);
      break;
    case TopologyKind::star:
      for (int i = 2; i <= s.n; ++i) e.emplace_back(1, i);
      break;
    case TopologyKind::complete:
      for (int i = 1; i <= s.n; ++i)
        for (int j = i + 1; j <= s.n; ++j) e.emplace_back(i, j);
      break;
    case TopologyKind::complete_bipartite:
      for (int i = 1; i <= s.k; ++i)
        for (int j = s.k + 1; j <= s.n; ++j) e.emplace_back(i, j);
      break;
    case TopologyKind::ring:
      for (int i = 1; i < s.n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(1, s.n);
      break;
    case TopologyKind::tree:
      e = s.edges;
      break;
  }
  return e;
}

}  // namespace

TaskSwapGraph::TaskSwapGraph(TopologySpec spec) : spec_(std::move(spec)) {
  const int n = spec_.n;
  if (n < 3) {
    throw ValidationError("task swapping graph needs n >= 3, got " +
                          std::to_string(n));
  }
  if (spec_.kind == TopologyKind::complete_bipartite) {
    if (spec_.k < 1 || spec_.k >= n) {
      throw ValidationError("bipartite index k must satisfy 1 <= k < n, got k=" +
                            std::to_string(spec_.k));
    }
  } else if (spec_.k != 0) {
    throw ValidationError("field k is only meaningful for complete_bipartite");
  }
  if (spec_.kind != TopologyKind::tree && !spec_.edges.empty()) {
    throw ValidationError("explicit edges are only meaningful for tree");
  }
  if (spec_.kind == TopologyKind::tree &&
      spec_.edges.size() != static_cast<std::size_t>(n - 1)) {
    throw ValidationError("tree on n=" + std::to_string(n) + " needs exactly " +
                          std::to_string(n - 1) + " edges, got " +
                          std::to_string(spec_.edges.size()));
  }

  adj_.assign(n + 1, {});
  std::set<Transposition> gens;
  for (auto [a, b] : topology_edges(spec_)) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) {
      throw ValidationError("invalid edge (" + std::to_string(a) + " " +
                            std::to_string(b) + ") for n=" + std::to_string(n));
    }
    if (!gens.insert(Transposition(a, b)).second) {
      throw ValidationError("duplicate edge (" + std::to_string(a) + " " +
                            std::to_string(b) + ")");
    }
  }
  gens_.assign(gens.begin(), gens.end());
  for (const auto& t : gens_) {
    adj_[t.a].push_back(t.b);
    adj_[t.b].push_back(t.a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  // connectivity + structural tree detection (n-1 edges and connected)
  std::vector<int> dist0(n + 1, -1);
  std::deque<int> q{1};
  dist0[1] = 0;
  int reached = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : adj_[x]) {
      if (dist0[y] < 0) {
        dist0[y] = dist0[x] + 1;
        ++reached;
        q.push_back(y);
      }
    }
  }
  if (reached != n) {
    throw ValidationError("graph is disconnected (" + std::to_string(reached) +
                          " of " + std::to_string(n) + " agents reachable)");
  }
  tree_ = gens_.size() == static_cast<std::size_t>(n - 1);

  if (tree_) {
    tree_dist_.assign(n + 1, std::vector<int>(n + 1, -1));
    for (int s = 1; s <= n; ++s) {
      auto& d = tree_dist_[s];
      d[s] = 0;
      std::deque<int> bq{s};
      while (!bq.empty()) {
        int x = bq.front();
        bq.pop_front();
        for (int y : adj_[x]) {
          if (d[y] < 0) {
            d[y] = d[x] + 1;
            bq.push_back(y);
          }
        }
      }
    }
  }
}

bool TaskSwapGraph::is_edge(const Transposition& t) const {
  if (t.b > size()) {
    throw ValidationError("edge query (" + std::to_string(t.a) + " " +
                          std::to_string(t.b) + ") out of range for n=" +
                          std::to_string(size()));
  }
  return std::binary_search(adj_[t.a].begin(), adj_[t.a].end(), t.b);
}

int TaskSwapGraph::tree_distance(int i, int j) const {
  if (!tree_) {
    throw ValidationError("tree_distance requires a tree-shaped graph, got " +
                          kind_name(spec_.kind));
  }
  if (i < 1 || i > size() || j < 1 || j > size()) {
    throw ValidationError("tree_distance: agent ID out of range");
  }
  return tree_dist_[i][j];
}

TaskSwapGraph build_graph(const TopologySpec& spec) { return TaskSwapGraph(spec); }

TopologySpec parse_topology(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("topology: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("topology: expected a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("topology: missing string field \"kind\"");
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("topology: missing integer field \"n\"");
  }
  TopologySpec spec;
  spec.kind = kind_from_name(j["kind"].get<std::string>());
  spec.n = j["n"].get<int>();
  if (spec.kind == TopologyKind::complete_bipartite) {
    if (!j.contains("k") || !j["k"].is_number_integer()) {
      throw ParseError("topology: complete_bipartite requires integer field \"k\"");
    }
    spec.k = j["k"].get<int>();
  }
  if (spec.kind == TopologyKind::tree) {
    if (!j.contains("edges") || !j["edges"].is_array()) {
      throw ParseError("topology: tree requires array field \"edges\"");
    }
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("topology: each edge must be a pair [a,b] of integers");
      }
      spec.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return spec;
}

std::string topology_to_json(const TopologySpec& spec) {
  nlohmann::json j;
  j["kind"] = kind_name(spec.kind);
  j["n"] = spec.n;
  if (spec.kind == TopologyKind::complete_bipartite) j["k"] = spec.k;
  if (spec.kind == TopologyKind::tree) {
    auto edges = nlohmann::json::array();
    for (auto [a, b] : spec.edges) edges.push_back({a, b});
    j["edges"] = edges;
  }
  return j.dump();
}

}  // namespace taskswap
