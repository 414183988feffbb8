#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "taskswap/permutation.hpp"
#include "taskswap/planner.hpp"
#include "taskswap/topology.hpp"

namespace test_helpers {

inline taskswap::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return taskswap::Permutation(std::move(v));
}

inline taskswap::Permutation fold(const taskswap::Permutation& start,
                                  const std::vector<taskswap::Transposition>& swaps) {
  taskswap::Permutation p = start;
  for (const auto& t : swaps) p = taskswap::apply_swap(p, t);
  return p;
}

// random labeled tree: attach each vertex i >= 2 to a random earlier vertex
inline taskswap::TopologySpec random_tree(int n, std::mt19937& rng) {
  taskswap::TopologySpec spec;
  spec.kind = taskswap::TopologyKind::tree;
  spec.n = n;
  for (int i = 2; i <= n; ++i) {
    std::uniform_int_distribution<int> pick(1, i - 1);
    spec.edges.emplace_back(pick(rng), i);
  }
  return spec;
}

inline bool next_permutation_vec(std::vector<int>& v) {
  return std::next_permutation(v.begin(), v.end());
}

}  // namespace test_helpers
