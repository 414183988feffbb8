#include "taskswap/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace taskswap {

namespace {

constexpr int kMaxRankable = 13;  // 13! overflows 32-bit state counts anyway

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void require_within_cap(int n, int cap) {
  if (n > cap) {
    throw CapExceededError("oracle cap is n <= " + std::to_string(cap) +
                           " (that is " + std::to_string(factorial(cap)) +
                           " states); got n = " + std::to_string(n) + " (" +
                           std::to_string(factorial(n)) + " states)");
  }
  if (cap > kMaxRankable) {
    throw CapExceededError("oracle cap cannot exceed " +
                           std::to_string(kMaxRankable));
  }
}

}  // namespace

std::string family_name(CayleyFamily fam) {
  switch (fam) {
    case CayleyFamily::BS: return "BS";
    case CayleyFamily::ST: return "ST";
    case CayleyFamily::CT: return "CT";
    case CayleyFamily::GST: return "GST";
    case CayleyFamily::MBS: return "MBS";
    case CayleyFamily::HC: return "HC";
  }
  throw InternalError("unhandled Cayley family");
}

CayleyFamily family_from_name(const std::string& name) {
  if (name == "BS") return CayleyFamily::BS;
  if (name == "ST") return CayleyFamily::ST;
  if (name == "CT") return CayleyFamily::CT;
  if (name == "GST") return CayleyFamily::GST;
  if (name == "MBS") return CayleyFamily::MBS;
  if (name == "HC") return CayleyFamily::HC;
  throw ParseError("unknown Cayley family \"" + name +
                   "\" (expected BS, ST, CT, GST, MBS, or HC)");
}

std::vector<Transposition> family_generators(CayleyFamily fam, int n, int k) {
  if (n < 2) {
    throw ValidationError("Cayley family generators need n >= 2");
  }
  std::vector<Transposition> g;
  switch (fam) {
    case CayleyFamily::BS:
      for (int i = 1; i < n; ++i) g.emplace_back(i, i + 1);
      break;
    case CayleyFamily::ST:
      for (int i = 2; i <= n; ++i) g.emplace_back(1, i);
      break;
    case CayleyFamily::CT:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.emplace_back(i, j);
      break;
    case CayleyFamily::GST:
      if (k < 1 || k >= n) {
        throw ValidationError("GST requires 1 <= k < n, got k=" +
                              std::to_string(k));
      }
      for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j) g.emplace_back(i, j);
      break;
    case CayleyFamily::MBS:
      for (int i = 1; i < n; ++i) g.emplace_back(i, i + 1);
      if (n >= 3) g.emplace_back(1, n);
      break;
    case CayleyFamily::HC:
      for (int i = 1; 2 * i <= n; ++i) g.emplace_back(2 * i - 1, 2 * i);
      break;
  }
  if (fam != CayleyFamily::GST && k != 0) {
    throw ValidationError("index k is only meaningful for the GST family");
  }
  return g;
}

std::uint64_t permutation_rank(const Permutation& p) {
  const int n = p.size();
  if (n > kMaxRankable) {
    throw CapExceededError("rank overflow: n > " + std::to_string(kMaxRankable));
  }
  // Lehmer code, O(n^2); n is small by construction
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (p(j) < p(i)) ++smaller;
    }
    rank = rank * static_cast<std::uint64_t>(n - i + 1) + smaller;
  }
  return rank;
}

Permutation permutation_unrank(std::uint64_t rank, int n) {
  std::vector<int> code(n);
  for (int i = n; i >= 1; --i) {
    code[i - 1] = static_cast<int>(rank % static_cast<std::uint64_t>(n - i + 1));
    rank /= static_cast<std::uint64_t>(n - i + 1);
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = pool[code[i]];
    pool.erase(pool.begin() + code[i]);
  }
  return Permutation(std::move(out));
}

std::vector<std::int32_t> distances_from_identity(
    const std::vector<Transposition>& gens, int n, int cap) {
  require_within_cap(n, cap);
  for (const auto& t : gens) {
    if (t.b > n) {
      throw ValidationError("generator (" + std::to_string(t.a) + " " +
                            std::to_string(t.b) + ") out of range for n=" +
                            std::to_string(n));
    }
  }
  const std::uint64_t total = factorial(n);
  std::vector<std::int32_t> dist(total, -1);
  std::deque<std::uint64_t> queue;
  const std::uint64_t start = permutation_rank(Permutation::identity(n));
  dist[start] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    const std::uint64_t r = queue.front();
    queue.pop_front();
    const Permutation p = permutation_unrank(r, n);
    for (const auto& t : gens) {
      const std::uint64_t c = permutation_rank(apply_swap(p, t));
      if (dist[c] < 0) {
        dist[c] = dist[r] + 1;
        queue.push_back(c);
      }
    }
  }
  return dist;
}

long bfs_distance(const std::vector<Transposition>& gens, const Permutation& from,
                  const Permutation& to, int cap) {
  if (from.size() != to.size()) {
    throw ValidationError("bfs_distance: size mismatch");
  }
  const Permutation sigma = compose(inverse(to), from);
  const auto dist = distances_from_identity(gens, from.size(), cap);
  const std::int32_t d = dist[permutation_rank(sigma)];
  if (d < 0) {
    throw UnreachableError(
        "target is unreachable: the generating set does not connect the two "
        "assignments");
  }
  return d;
}

SwapPlan shortest_plan(const std::vector<Transposition>& gens,
                       const Permutation& from, const Permutation& to, int cap) {
  if (from.size() != to.size()) {
    throw ValidationError("shortest_plan: size mismatch");
  }
  const int n = from.size();
  auto sorted_gens = gens;
  std::sort(sorted_gens.begin(), sorted_gens.end());
  const auto dist = distances_from_identity(sorted_gens, n, cap);
  Permutation sigma = compose(inverse(to), from);
  std::int32_t d = dist[permutation_rank(sigma)];
  if (d < 0) {
    throw UnreachableError(
        "target is unreachable: the generating set does not connect the two "
        "assignments");
  }
  // walk downhill toward identity, smallest generator first
  SwapPlan out;
  while (d > 0) {
    bool stepped = false;
    for (const auto& t : sorted_gens) {
      const Permutation cand = apply_swap(sigma, t);
      if (dist[permutation_rank(cand)] == d - 1) {
        sigma = cand;
        --d;
        out.swaps.push_back(t);
        stepped = true;
        break;
      }
    }
    if (!stepped) throw InternalError("BFS downhill walk stuck");
  }
  return out;
}

DiameterResult cayley_diameter(CayleyFamily fam, int n, int k, int cap) {
  const auto gens = family_generators(fam, n, k);
  const auto dist = distances_from_identity(gens, n, cap);
  DiameterResult res;
  for (std::int32_t d : dist) {
    if (d < 0) continue;
    ++res.reachable_states;
    res.diameter = std::max<long>(res.diameter, d);
  }
  return res;
}

std::optional<long> expected_diameter(CayleyFamily fam, int n, int k) {
  switch (fam) {
    case CayleyFamily::BS: return static_cast<long>(n) * (n - 1) / 2;
    case CayleyFamily::ST: return 3L * (n - 1) / 2;
    case CayleyFamily::CT: return n - 1L;
    case CayleyFamily::GST: return n - 1L + std::max(k / 2, (n - k) / 2);
    case CayleyFamily::MBS: return std::nullopt;  // no known closed form
    case CayleyFamily::HC: return n / 2L;         // one step per generator
  }
  throw InternalError("unhandled Cayley family");
}

}  // namespace taskswap
