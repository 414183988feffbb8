#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "taskswap/permutation.hpp"
#include "taskswap/planner.hpp"

namespace taskswap {

// Cayley graph families surveyed by the diameter oracle:
//   BS  bubble-sort        gens {(i i+1)}
//   ST  star               gens {(1 i)}
//   CT  complete           gens, all pairs
//   GST generalized star   gens {(i j) : i <= k < j}
//   MBS modified bubble    gens BS + {(1 n)}
//   HC  hypercube-like     gens {(2i-1 2i)}, generates a proper subgroup
enum class CayleyFamily { BS, ST, CT, GST, MBS, HC };

CayleyFamily family_from_name(const std::string& name);  // throws ParseError
std::string family_name(CayleyFamily fam);

inline constexpr int kDefaultOracleCap = 7;

std::vector<Transposition> family_generators(CayleyFamily fam, int n, int k = 0);

// Exact BFS distances from identity to every permutation of {1..n}, indexed
// by factorial-number-system rank; -1 marks states outside the generated
// group. Throws CapExceededError when n exceeds the cap.
std::vector<std::int32_t> distances_from_identity(
    const std::vector<Transposition>& gens, int n, int cap = kDefaultOracleCap);

std::uint64_t permutation_rank(const Permutation& p);
Permutation permutation_unrank(std::uint64_t rank, int n);

long bfs_distance(const std::vector<Transposition>& gens, const Permutation& from,
                  const Permutation& to, int cap = kDefaultOracleCap);

// A witness shortest plan; ties broken by the lexicographically smallest
// generator at each step.
SwapPlan shortest_plan(const std::vector<Transposition>& gens,
                       const Permutation& from, const Permutation& to,
                       int cap = kDefaultOracleCap);

struct DiameterResult {
  long diameter = 0;
  std::uint64_t reachable_states = 0;
};

DiameterResult cayley_diameter(CayleyFamily fam, int n, int k = 0,
                               int cap = kDefaultOracleCap);

// Closed forms where known: BS n(n-1)/2, ST floor(3(n-1)/2), CT n-1,
// GST n-1+max(floor(k/2), floor((n-k)/2)), HC floor(n/2) (generator count;
// the published table indexes HC by generators, not letters), MBS unknown.
std::optional<long> expected_diameter(CayleyFamily fam, int n, int k = 0);

}  // namespace taskswap
