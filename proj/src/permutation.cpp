#include "taskswap/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace taskswap {

Transposition::Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (x == y) {
    throw ValidationError("transposition endpoints must differ, got (" +
                          std::to_string(x) + " " + std::to_string(y) + ")");
  }
  if (a < 1) {
    throw ValidationError("transposition endpoints must be positive");
  }
}

Permutation::Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
  const int n = static_cast<int>(map_.size());
  if (n < 1) {
    throw ValidationError("permutation must have length >= 1");
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : map_) {
    if (v < 1 || v > n || seen[v]) {
      throw ValidationError("not a permutation of {1.." + std::to_string(n) +
                            "}: bad entry " + std::to_string(v));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) {
    throw ValidationError("identity requires n >= 1, got " + std::to_string(n));
  }
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) {
    throw ValidationError("permutation index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(size()));
  }
  return map_[i - 1];
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (map_[i] != i + 1) return false;
  }
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ' ';
    os << map_[i];
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw ValidationError("compose: size mismatch (" + std::to_string(p.size()) +
                          " vs " + std::to_string(q.size()) + ")");
  }
  std::vector<int> r(p.size());
  for (int i = 1; i <= p.size(); ++i) r[i - 1] = p(q(i));
  return Permutation(std::move(r));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> r(p.size());
  for (int i = 1; i <= p.size(); ++i) r[p(i) - 1] = i;
  return Permutation(std::move(r));
}

Permutation apply_swap(const Permutation& p, const Transposition& t) {
  if (t.b > p.size()) {
    throw ValidationError("swap (" + std::to_string(t.a) + " " +
                          std::to_string(t.b) + ") out of range for n=" +
                          std::to_string(p.size()));
  }
  std::vector<int> v = p.one_line();
  std::swap(v[t.a - 1], v[t.b - 1]);
  return Permutation(std::move(v));
}

CycleDecomposition disjoint_cycles(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition dec;
  std::vector<bool> seen(n + 1, false);
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    int x = s;
    while (!seen[x]) {
      seen[x] = true;
      cyc.push_back(x);
      x = p(x);
    }
    if (cyc.size() >= 2) {
      dec.cycles.push_back(std::move(cyc));
    } else {
      dec.fixed_points.push_back(s);
    }
  }
  // starting the scan at 1 already yields min-first rotation and min-sorted order
  return dec;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& c : cycles) {
    if (c.size() < 2) {
      throw ValidationError("from_cycles: cycles must have length >= 2");
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      int x = c[i];
      if (x < 1 || x > n || used[x]) {
        throw ValidationError("from_cycles: element " + std::to_string(x) +
                              " repeated or out of range");
      }
      used[x] = true;
      v[x - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(v));
}

long inversion_number(const Permutation& p) {
  long cnt = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) ++cnt;
    }
  }
  return cnt;
}

}  // namespace taskswap
