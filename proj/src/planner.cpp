#include "taskswap/planner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace taskswap {

namespace {

std::vector<int> rotate_cycle(const std::vector<int>& c, std::size_t i) {
  std::vector<int> out(c.begin() + i, c.end());
  out.insert(out.end(), c.begin(), c.begin() + i);
  return out;
}

std::vector<int> min_first(const std::vector<int>& c) {
  auto it = std::min_element(c.begin(), c.end());
  return rotate_cycle(c, static_cast<std::size_t>(it - c.begin()));
}

// Factorization of a simple cycle (i1..ia j1..jb), i's <= k < j's:
// (i1 jb)...(i1 j2)(ia j1)...(i2 j1)(i1 j1)
std::vector<Transposition> simple_cycle_factor(const std::vector<int>& seq, int k) {
  std::size_t a = 0;
  while (a < seq.size() && seq[a] <= k) ++a;
  if (a == 0 || a == seq.size()) {
    throw InternalError("simple cycle must span both layers");
  }
  for (std::size_t i = a; i < seq.size(); ++i) {
    if (seq[i] <= k) throw InternalError("not a simple cycle segment");
  }
  const int i1 = seq[0];
  const int j1 = seq[a];
  std::vector<Transposition> out;
  for (std::size_t i = seq.size(); i-- > a + 1;) out.emplace_back(i1, seq[i]);
  for (std::size_t i = a; i-- > 1;) out.emplace_back(seq[i], j1);
  out.emplace_back(i1, j1);
  return out;
}

std::vector<std::vector<int>> split_segments(const std::vector<int>& c, int k) {
  std::vector<std::vector<int>> segs;
  std::size_t j = 0;
  while (j < c.size()) {
    std::size_t s = j;
    while (j < c.size() && c[j] <= k) ++j;
    while (j < c.size() && c[j] > k) ++j;
    segs.emplace_back(c.begin() + s, c.begin() + j);
  }
  return segs;
}

// A segment whose simple-cycle factorization leads with (ia j1), ia != i1:
// two or more upper-layer elements followed by exactly one lower-layer one.
bool leads_off_head(const std::vector<int>& seg, int k) {
  std::size_t a = 0;
  while (a < seg.size() && seg[a] <= k) ++a;
  return a >= 2 && seg.size() - a == 1;
}

std::vector<Transposition> internal_cycle_factor(const std::vector<int>& cyc,
                                                 int k) {
  const int t = k + 1;  // pivot in the lower layer
  auto c = min_first(cyc);
  std::vector<Transposition> out;
  out.emplace_back(c[0], t);
  for (std::size_t i = c.size(); i-- > 1;) out.emplace_back(c[i], t);
  out.emplace_back(c[0], t);
  return out;
}

std::vector<Transposition> external_cycle_factor(const std::vector<int>& cyc) {
  const int u = 1;  // pivot in the upper layer
  auto c = min_first(cyc);
  std::vector<Transposition> out;
  out.emplace_back(u, c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) out.emplace_back(u, c[i]);
  out.emplace_back(u, c.back());
  return out;
}

// Segment method for a mixed cycle. Rotation starts at the upper-layer run
// start that places an off-head segment last if one exists, tie-broken by
// smallest leading element; the rearrangement (v1 v2)(w1 w2) -> (w1 w2)(v2 w2)
// links consecutive segments, with a 3-swap patch when w1 != v1.
std::vector<Transposition> mixed_segment_factor(const std::vector<int>& cyc,
                                                int k) {
  const std::size_t m = cyc.size();
  std::size_t best_i = m;
  std::pair<int, int> best_key{std::numeric_limits<int>::max(), 0};
  for (std::size_t i = 0; i < m; ++i) {
    if (cyc[i] > k || cyc[(i + m - 1) % m] <= k) continue;
    auto segs = split_segments(rotate_cycle(cyc, i), k);
    std::pair<int, int> key{leads_off_head(segs.back(), k) ? 0 : 1, cyc[i]};
    if (key < best_key) {
      best_key = key;
      best_i = i;
    }
  }
  if (best_i == m) throw InternalError("mixed cycle has no upper-layer run start");
  auto c = rotate_cycle(cyc, best_i);
  auto segs = split_segments(c, k);

  std::vector<Transposition> out;
  for (std::size_t idx = 0; idx < segs.size(); ++idx) {
    auto fac = simple_cycle_factor(segs[idx], k);
    if (idx + 1 < segs.size()) {
      const int v1 = segs[idx][0];
      const int v2 = segs[idx + 1][0];
      const int w1 = fac[0].a;  // every factor pairs upper (a <= k) with lower
      const int w2 = fac[0].b;
      std::vector<Transposition> linked{fac[0]};
      linked.emplace_back(v2, w2);
      if (v1 != w1) {
        linked.emplace_back(v1, w2);
        linked.emplace_back(v2, w2);
      }
      linked.insert(linked.end(), fac.begin() + 1, fac.end());
      fac = std::move(linked);
    }
    out.insert(out.end(), fac.begin(), fac.end());
  }
  return out;
}

// Sorts the inverse of the cycle to identity, peeling one cross-layer pair
// (x, sigma(x)) per step while keeping the remainder mixed; the emitted swaps
// multiply back to the cycle in l-1 factors.
std::vector<Transposition> greedy_mixed_factor(const std::vector<int>& cyc, int k,
                                               int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    v[cyc[i] - 1] = cyc[(i + cyc.size() - 1) % cyc.size()];
  }
  Permutation sigma{std::move(v)};

  std::vector<Transposition> out;
  while (!sigma.is_identity()) {
    std::vector<int> support;
    for (int x = 1; x <= n; ++x) {
      if (sigma(x) != x) support.push_back(x);
    }
    int ni = 0;
    for (int x : support) {
      if (x <= k) ++ni;
    }
    const int ne = static_cast<int>(support.size()) - ni;

    bool found = false;
    Transposition best(1, 2);
    for (int x : support) {
      const int y = sigma(x);
      if ((x <= k) == (y <= k)) continue;
      const int ri = ni - (y <= k ? 1 : 0);
      const int re = ne - (y > k ? 1 : 0);
      if (support.size() != 2 && (ri < 1 || re < 1)) continue;
      Transposition t(x, y);
      if (!found || t < best) {
        best = t;
        found = true;
      }
    }
    if (!found) throw InternalError("mixed cycle factorization stuck");
    sigma = apply_swap(sigma, best);
    out.push_back(best);
  }
  return out;
}

// I (internal) and E (external), both min-first: I o E = (c1 e1) o (I++E).
std::vector<Transposition> merged_pair_factor(const std::vector<int>& in,
                                              const std::vector<int>& ex, int k) {
  std::vector<Transposition> out{Transposition(in[0], ex[0])};
  std::vector<int> joined = in;
  joined.insert(joined.end(), ex.begin(), ex.end());
  auto fac = simple_cycle_factor(joined, k);
  out.insert(out.end(), fac.begin(), fac.end());
  return out;
}

bool all_at_most(const std::vector<int>& c, int k) {
  return std::all_of(c.begin(), c.end(), [k](int x) { return x <= k; });
}
bool all_greater(const std::vector<int>& c, int k) {
  return std::all_of(c.begin(), c.end(), [k](int x) { return x > k; });
}

void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw ValidationError("source and target sizes differ (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
}

}  // namespace

SwapPlan plan_line(const Permutation& source, const Permutation& target) {
  require_same_size(source, target);
  std::vector<int> s = compose(inverse(target), source).one_line();
  const int n = static_cast<int>(s.size());
  SwapPlan out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (s[i] > s[i + 1]) {
        std::swap(s[i], s[i + 1]);
        out.swaps.emplace_back(i + 1, i + 2);
        changed = true;
      }
    }
  }
  return out;
}

std::vector<Transposition> star_factorization(const Permutation& pi) {
  auto dec = disjoint_cycles(pi);
  std::vector<Transposition> out;
  // the cycle containing 1, rotated to start at 1: (1 q2..qs) = (1 qs)...(1 q2)
  for (const auto& c : dec.cycles) {
    if (std::find(c.begin(), c.end(), 1) == c.end()) continue;
    auto r = min_first(c);  // starts with 1
    for (std::size_t i = r.size(); i-- > 1;) out.emplace_back(1, r[i]);
  }
  // remaining cycles in ascending smallest-element order:
  // (p1..pl) = (1 p1)(1 pl)(1 p_{l-1})...(1 p1)
  for (const auto& c : dec.cycles) {
    if (std::find(c.begin(), c.end(), 1) != c.end()) continue;
    auto r = min_first(c);
    out.emplace_back(1, r[0]);
    for (std::size_t i = r.size(); i-- > 0;) out.emplace_back(1, r[i]);
  }
  return out;
}

SwapPlan plan_star(const Permutation& source, const Permutation& target) {
  require_same_size(source, target);
  return SwapPlan{star_factorization(compose(inverse(source), target))};
}

std::vector<Transposition> complete_factorization(const Permutation& pi) {
  std::vector<Transposition> out;
  for (const auto& c : disjoint_cycles(pi).cycles) {
    auto r = min_first(c);  // (q1..ql) = (q1 ql)(q1 q_{l-1})...(q1 q2)
    for (std::size_t i = r.size(); i-- > 1;) out.emplace_back(r[0], r[i]);
  }
  return out;
}

SwapPlan plan_complete(const Permutation& source, const Permutation& target) {
  require_same_size(source, target);
  return SwapPlan{complete_factorization(compose(inverse(source), target))};
}

std::vector<Transposition> bipartite_cycle_factorization(
    const std::vector<int>& cycle, int k, int n) {
  if (cycle.size() < 2) {
    throw ValidationError("cycle must have length >= 2");
  }
  if (k < 1 || k >= n) {
    throw ValidationError("bipartite index k must satisfy 1 <= k < n");
  }
  for (int x : cycle) {
    if (x < 1 || x > n) {
      throw ValidationError("cycle element " + std::to_string(x) +
                            " out of range 1.." + std::to_string(n));
    }
  }
  if (all_at_most(cycle, k)) return internal_cycle_factor(cycle, k);
  if (all_greater(cycle, k)) return external_cycle_factor(cycle);
  return mixed_segment_factor(cycle, k);
}

SwapPlan plan_bipartite(const Permutation& source, const Permutation& target,
                        int k) {
  require_same_size(source, target);
  const int n = source.size();
  if (k < 1 || k >= n) {
    throw ValidationError("bipartite index k must satisfy 1 <= k < n, got k=" +
                          std::to_string(k));
  }
  const Permutation pi = compose(inverse(source), target);
  auto dec = disjoint_cycles(pi);

  std::vector<std::vector<int>> internal, external, mixed;
  for (const auto& c : dec.cycles) {
    auto r = min_first(c);
    if (all_at_most(r, k)) {
      internal.push_back(std::move(r));
    } else if (all_greater(r, k)) {
      external.push_back(std::move(r));
    } else {
      mixed.push_back(std::move(r));
    }
  }

  SwapPlan out;
  // pairing one internal with one external cycle saves two swaps per pair
  const std::size_t npair = std::min(internal.size(), external.size());
  for (std::size_t i = 0; i < npair; ++i) {
    auto fac = merged_pair_factor(internal[i], external[i], k);
    out.swaps.insert(out.swaps.end(), fac.begin(), fac.end());
  }
  for (std::size_t i = npair; i < internal.size(); ++i) {
    auto fac = internal_cycle_factor(internal[i], k);
    out.swaps.insert(out.swaps.end(), fac.begin(), fac.end());
  }
  for (std::size_t i = npair; i < external.size(); ++i) {
    auto fac = external_cycle_factor(external[i]);
    out.swaps.insert(out.swaps.end(), fac.begin(), fac.end());
  }
  for (const auto& c : mixed) {
    auto fac = mixed_segment_factor(c, k);
    if (fac.size() != c.size() - 1) fac = greedy_mixed_factor(c, k, n);
    if (fac.size() != c.size() - 1) {
      throw InternalError("mixed cycle factorization is not minimum-length");
    }
    out.swaps.insert(out.swaps.end(), fac.begin(), fac.end());
  }
  return out;
}

DisplacementVector displacement_vector(const Permutation& p) {
  const Permutation inv = inverse(p);
  DisplacementVector d;
  d.d.resize(p.size());
  for (int i = 1; i <= p.size(); ++i) d.d[i - 1] = inv(i) - i;
  return d;
}

DisplacementVector stabilize(DisplacementVector d) {
  const int n = d.size();
  while (true) {
    int s = 0, t = 0;  // smallest-index max and min
    for (int i = 1; i < n; ++i) {
      if (d.d[i] > d.d[s]) s = i;
      if (d.d[i] < d.d[t]) t = i;
    }
    if (d.d[s] - d.d[t] <= n) return d;
    d.d[s] -= n;
    d.d[t] += n;
  }
}

long ring_inversion(const DisplacementVector& d) {
  const int n = d.size();
  const auto [mn, mx] = std::minmax_element(d.d.begin(), d.d.end());
  if (n > 0 && *mx - *mn > n) {
    throw ValidationError("ring_inversion requires a stable displacement vector");
  }
  long cnt = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const long ai = (i + 1) + d.d[i];
      const long aj = (j + 1) + d.d[j];
      if (ai > aj || ai + n < aj) ++cnt;
    }
  }
  return cnt;
}

SwapPlan plan_ring(const Permutation& source, const Permutation& target) {
  require_same_size(source, target);
  const int n = source.size();
  Permutation sigma = compose(inverse(target), source);
  long inv = ring_inversion(stabilize(displacement_vector(sigma)));
  SwapPlan out;
  while (!sigma.is_identity()) {
    bool found = false;
    for (int v = 1; v <= n && !found; ++v) {
      const int w = v % n + 1;
      const Transposition t(v, w);
      const Permutation cand = apply_swap(sigma, t);
      const long ic = ring_inversion(stabilize(displacement_vector(cand)));
      if (ic == inv - 1) {
        sigma = cand;
        inv = ic;
        out.swaps.push_back(t);
        found = true;
      }
    }
    if (!found) {
      throw InternalError(
          "ring planner: no ring-inversion-reducing adjacent swap exists");
    }
  }
  return out;
}

long tree_move_count(const TaskSwapGraph& g, const Permutation& pi) {
  if (!g.is_tree()) {
    throw ValidationError("tree_move_count requires a tree-shaped graph");
  }
  if (pi.size() != g.size()) {
    throw ValidationError("permutation size differs from graph size");
  }
  const int n = g.size();
  long sum = 0;
  for (int i = 1; i <= n; ++i) sum += g.tree_distance(i, pi(i));
  return disjoint_cycles(pi).cycle_count_with_fixed() - n + sum;
}

namespace {

bool same_cycle(const Permutation& pi, int a, int b) {
  int x = pi(a);
  while (x != a) {
    if (x == b) return true;
    x = pi(x);
  }
  return false;
}

}  // namespace

SwapPlan plan_tree(const TaskSwapGraph& g, const Permutation& source,
                   const Permutation& target) {
  if (!g.is_tree()) {
    throw ValidationError("plan_tree requires a tree-shaped graph, got " +
                          kind_name(g.kind()));
  }
  require_same_size(source, target);
  if (source.size() != g.size()) {
    throw ValidationError("assignment size differs from graph size");
  }
  Permutation pi = compose(inverse(target), source);
  const auto& edges = g.generating_set();
  SwapPlan out;
  while (!pi.is_identity()) {
    // the two qualifying move shapes: both tasks unhomed and moving toward
    // each other (toward), or one homed task letting the other cross (cross)
    auto toward = [&](const Transposition& t) {
      const int ta = pi(t.a), tb = pi(t.b);
      return ta != t.a && tb != t.b &&
             g.tree_distance(t.b, ta) < g.tree_distance(t.a, ta) &&
             g.tree_distance(t.a, tb) < g.tree_distance(t.b, tb);
    };
    auto cross = [&](const Transposition& t) {
      const int ta = pi(t.a), tb = pi(t.b);
      return (ta == t.a && tb != t.b &&
              g.tree_distance(t.a, tb) < g.tree_distance(t.b, tb)) ||
             (tb == t.b && ta != t.a &&
              g.tree_distance(t.b, ta) < g.tree_distance(t.a, ta));
    };
    const Transposition* pick = nullptr;
    // prefer moves that keep the move count descending one per step
    for (const auto& t : edges) {
      if (cross(t) || (toward(t) && same_cycle(pi, t.a, t.b))) {
        pick = &t;
        break;
      }
    }
    if (!pick) {
      for (const auto& t : edges) {
        if (toward(t)) {
          pick = &t;
          break;
        }
      }
    }
    if (!pick) throw InternalError("tree planner: no qualifying move exists");
    pi = apply_swap(pi, *pick);
    out.swaps.push_back(*pick);
  }
  return out;
}

SwapPlan plan(const TaskSwapGraph& g, const Permutation& source,
              const Permutation& target) {
  require_same_size(source, target);
  if (source.size() != g.size()) {
    throw ValidationError("assignment size " + std::to_string(source.size()) +
                          " differs from graph size " + std::to_string(g.size()));
  }
  if (source == target) return SwapPlan{};
  switch (g.kind()) {
    case TopologyKind::line: return plan_line(source, target);
    case TopologyKind::star: return plan_star(source, target);
    case TopologyKind::complete: return plan_complete(source, target);
    case TopologyKind::complete_bipartite:
      return plan_bipartite(source, target, g.bipartite_index());
    case TopologyKind::ring: return plan_ring(source, target);
    case TopologyKind::tree: return plan_tree(g, source, target);
  }
  throw InternalError("unhandled topology kind in plan dispatch");
}

VerifyResult verify_plan(const TaskSwapGraph& g, const Permutation& source,
                         const Permutation& target, const SwapPlan& plan) {
  require_same_size(source, target);
  if (source.size() != g.size()) {
    throw ValidationError("assignment size differs from graph size");
  }
  Permutation cur = source;
  for (std::size_t i = 0; i < plan.swaps.size(); ++i) {
    const auto& t = plan.swaps[i];
    if (t.b > g.size() || !g.is_edge(t)) {
      return {false, static_cast<int>(i + 1), VerifyResult::Reason::non_edge};
    }
    cur = apply_swap(cur, t);
  }
  if (cur != target) {
    return {false, static_cast<int>(plan.swaps.size() + 1),
            VerifyResult::Reason::endpoint_mismatch};
  }
  return {};
}

}  // namespace taskswap
