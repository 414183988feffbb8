#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "taskswap/errors.hpp"

namespace taskswap {

// An unordered pair of distinct agent IDs, stored normalized with a < b.
struct Transposition {
  int a;
  int b;

  Transposition(int x, int y);

  friend bool operator==(const Transposition& l, const Transposition& r) {
    return l.a == r.a && l.b == r.b;
  }
  friend bool operator!=(const Transposition& l, const Transposition& r) {
    return !(l == r);
  }
  friend bool operator<(const Transposition& l, const Transposition& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
};

// A bijection of {1..n}, stored in one-line notation: entry at position i is
// p(i). All interfaces are 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const;  // p(i), 1 <= i <= n
  const std::vector<int>& one_line() const { return map_; }
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const Permutation& l, const Permutation& r) {
    return l.map_ == r.map_;
  }
  friend bool operator!=(const Permutation& l, const Permutation& r) {
    return !(l == r);
  }

 private:
  std::vector<int> map_;
};

// Canonical form: each cycle rotated to start at its smallest element, cycles
// sorted by smallest element; fixed points listed separately.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;  // each of length >= 2
  std::vector<int> fixed_points;
  // c(p): number of cycles counting fixed points as length-1 cycles.
  int cycle_count_with_fixed() const {
    return static_cast<int>(cycles.size() + fixed_points.size());
  }
};

// compose(p, q)(i) = p(q(i)); q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Exchanges the values at positions t.a and t.b (right multiplication by t).
Permutation apply_swap(const Permutation& p, const Transposition& t);

CycleDecomposition disjoint_cycles(const Permutation& p);

// Rebuild a permutation of {1..n} from disjoint cycles (fixed points implied).
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

// |{(i, j) : i < j, p(i) > p(j)}|
long inversion_number(const Permutation& p);

}  // namespace taskswap
