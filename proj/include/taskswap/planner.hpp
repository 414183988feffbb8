#pragma once

#include <vector>

#include "taskswap/permutation.hpp"
#include "taskswap/topology.hpp"

namespace taskswap {

// Ordered adjacent swaps; applying them left to right maps the source
// assignment to the target assignment.
struct SwapPlan {
  std::vector<Transposition> swaps;

  std::size_t length() const { return swaps.size(); }

  friend bool operator==(const SwapPlan& l, const SwapPlan& r) {
    return l.swaps == r.swaps;
  }
};

// Signed per-element offsets of a circular permutation: d_i = j - i where
// p(j) = i. Component sum is always 0.
struct DisplacementVector {
  std::vector<long> d;

  int size() const { return static_cast<int>(d.size()); }
  friend bool operator==(const DisplacementVector& l, const DisplacementVector& r) {
    return l.d == r.d;
  }
};

// Topology dispatch. Plans are deterministic for fixed inputs.
SwapPlan plan(const TaskSwapGraph& g, const Permutation& source,
              const Permutation& target);

SwapPlan plan_line(const Permutation& source, const Permutation& target);
SwapPlan plan_star(const Permutation& source, const Permutation& target);
SwapPlan plan_complete(const Permutation& source, const Permutation& target);
SwapPlan plan_bipartite(const Permutation& source, const Permutation& target, int k);
SwapPlan plan_ring(const Permutation& source, const Permutation& target);
SwapPlan plan_tree(const TaskSwapGraph& g, const Permutation& source,
                   const Permutation& target);

// Factorization helpers (operate on the relative permutation / one cycle).
std::vector<Transposition> star_factorization(const Permutation& pi);
std::vector<Transposition> complete_factorization(const Permutation& pi);
std::vector<Transposition> bipartite_cycle_factorization(
    const std::vector<int>& cycle, int k, int n);

DisplacementVector displacement_vector(const Permutation& p);
DisplacementVector stabilize(DisplacementVector d);
long ring_inversion(const DisplacementVector& d);

// c(pi) - n + sum_i d(i, pi(i)) over the tree metric of g.
long tree_move_count(const TaskSwapGraph& g, const Permutation& pi);

struct VerifyResult {
  enum class Reason { none, non_edge, endpoint_mismatch };
  bool ok = true;
  // 1-based index of the first offending swap; length+1 when the fold
  // completes but misses the target.
  int failed_step = 0;
  Reason reason = Reason::none;
};

VerifyResult verify_plan(const TaskSwapGraph& g, const Permutation& source,
                         const Permutation& target, const SwapPlan& plan);

}  // namespace taskswap
