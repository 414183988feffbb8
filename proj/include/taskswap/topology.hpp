#pragma once

#include <string>
#include <utility>
#include <vector>

#include "taskswap/permutation.hpp"

namespace taskswap {

enum class TopologyKind {
  line,
  star,
  complete,
  complete_bipartite,
  ring,
  tree,
};

std::string kind_name(TopologyKind kind);
TopologyKind kind_from_name(const std::string& name);  // throws ParseError

struct TopologySpec {
  TopologyKind kind;
  int n = 0;
  int k = 0;                                // complete_bipartite only
  std::vector<std::pair<int, int>> edges;   // tree only
};

// Labeled agent graph whose edge set is the planner's generating set.
// Labeling conventions: line 1..n left to right, star supervisor 1, ring
// clockwise 1..n, bipartite upper layer 1..k then lower layer k+1..n.
class TaskSwapGraph {
 public:
  explicit TaskSwapGraph(TopologySpec spec);

  const TopologySpec& spec() const { return spec_; }
  TopologyKind kind() const { return spec_.kind; }
  int size() const { return spec_.n; }
  int bipartite_index() const { return spec_.k; }

  const std::vector<Transposition>& generating_set() const { return gens_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  bool is_edge(const Transposition& t) const;
  bool is_tree() const { return tree_; }

  // Edge count of the unique tree path; throws ValidationError on non-trees.
  int tree_distance(int i, int j) const;

 private:
  TopologySpec spec_;
  std::vector<Transposition> gens_;
  std::vector<std::vector<int>> adj_;         // 1-based, adj_[0] unused
  std::vector<std::vector<int>> tree_dist_;   // filled only when tree_
  bool tree_ = false;
};

TaskSwapGraph build_graph(const TopologySpec& spec);

// Parses {"kind":...,"n":...} with optional "k" (complete_bipartite) and
// "edges" (tree). Unknown kinds and malformed documents raise ParseError;
// structurally invalid specs raise ValidationError.
TopologySpec parse_topology(const std::string& json_text);
std::string topology_to_json(const TopologySpec& spec);

}  // namespace taskswap
