// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "brute.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace geodim::testing {
namespace {

void normalise(IntVec& row) {
  BigInt g = 0;
  for (const auto& x : row) g = gcd(g, x);
  if (g > 1)
    for (auto& x : row) x /= g;
}

}  // namespace

std::size_t int_rank(std::vector<IntVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const BigInt a = rows[r][c], b = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
      normalise(rows[i]);
    }
    ++r;
  }
  return r;
}

BigInt bareiss_det(std::vector<IntVec> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<IntVec> integer_rows(const geometry::RationalMatrix& m) {
  std::vector<IntVec> out;
  for (const auto& row : m.data()) {
    BigInt l = 1;
    for (const auto& q : row) l = lcm(l, BigInt(q.get_den()));
    IntVec r;
    for (const auto& q : row) r.push_back(BigInt(q.get_num() * (l / q.get_den())));
    out.push_back(std::move(r));
  }
  return out;
}

CycleEnumeration simple_cycles(const Vass& v, std::size_t limit) {
  CycleEnumeration out;
  const auto n = v.num_states();
  std::vector<std::vector<TransitionId>> succ(n);
  for (TransitionId t = 0; t < v.num_transitions(); ++t) succ[v.transition(t).source].push_back(t);

  for (StateId root = 0; root < n && out.complete; ++root) {
    std::vector<bool> on_path(n, false);
    std::vector<TransitionId> path;
    // Iterative DFS over (state, next successor index).
    std::vector<std::pair<StateId, std::size_t>> stack{{root, 0}};
    on_path[root] = true;
    while (!stack.empty()) {
      auto& [q, i] = stack.back();
      if (i == succ[q].size()) {
        on_path[q] = false;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      const auto t = succ[q][i++];
      const auto next = v.transition(t).target;
      if (next < root) continue;
      if (next == root) {
        path.push_back(t);
        out.cycles.push_back(path);
        path.pop_back();
        if (out.cycles.size() >= limit) {
          out.complete = false;
          break;
        }
        continue;
      }
      if (on_path[next]) continue;
      on_path[next] = true;
      path.push_back(t);
      stack.push_back({next, 0});
    }
  }
  return out;
}

std::vector<bool> graph_reachable(const Vass& v, StateId q) {
  std::vector<bool> seen(v.num_states(), false);
  std::vector<StateId> todo{q};
  seen[q] = true;
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    for (const auto& t : v.transitions())
      if (t.source == p && !seen[t.target]) {
        seen[t.target] = true;
        todo.push_back(t.target);
      }
  }
  return seen;
}

BruteDims brute_dimensions(const Vass& v) {
  BruteDims out;
  const auto cycles = simple_cycles(v);
  out.complete = cycles.complete;
  const auto n = v.num_states();
  std::vector<std::vector<bool>> reach;
  for (StateId q = 0; q < n; ++q) reach.push_back(graph_reachable(v, q));
  // Component label: least state mutually reachable with q.
  std::vector<StateId> label(n);
  for (StateId q = 0; q < n; ++q) {
    label[q] = q;
    for (StateId p = 0; p < q; ++p)
      if (reach[q][p] && reach[p][q]) {
        label[q] = p;
        break;
      }
  }
  std::vector<IntVec> all;
  std::map<StateId, std::vector<IntVec>> per;
  for (const auto& c : cycles.cycles) {
    IntVec e = zero_vector(v.dim());
    for (auto t : c) add_into(e, v.transition(t).effect);
    all.push_back(e);
    per[label[v.transition(c.front()).source]].push_back(e);
  }
  out.g = all.empty() ? 0 : int_rank(all);
  for (auto& [_, es] : per) out.g_scc = std::max(out.g_scc, int_rank(es));
  return out;
}

std::vector<std::vector<std::size_t>> valid_distinguished_sets(const geometry::RationalMatrix& basis) {
  const auto rows = integer_rows(basis);
  const std::size_t g = basis.rows(), d = basis.cols();
  std::vector<std::vector<std::size_t>> out;
  if (g == 0) return {{}};
  std::vector<bool> pick(d, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(g), true);
  // prev_permutation over a sorted-descending mask walks all g-subsets.
  do {
    std::vector<std::size_t> K;
    for (std::size_t i = 0; i < d; ++i)
      if (pick[i]) K.push_back(i);
    std::vector<IntVec> sub;
    for (const auto& r : rows) {
      IntVec s;
      for (auto k : K) s.push_back(r[k]);
      sub.push_back(std::move(s));
    }
    if (bareiss_det(sub) != 0) out.push_back(K);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_small(const geometry::RationalMatrix& basis, const IntVec& v, const BigInt& C) {
  for (const auto& K : valid_distinguished_sets(basis))
    if (std::all_of(K.begin(), K.end(), [&](std::size_t i) { return v[i] < C; })) return true;
  return false;
}

bool brute_thin(const geometry::RationalMatrix& basis, const IntVec& v, const std::vector<BigInt>& Cvec) {
  for (const auto& K : valid_distinguished_sets(basis)) {
    IntVec u;
    for (auto i : K) u.push_back(v[i]);
    std::sort(u.begin(), u.end());
    bool ok = true;
    for (std::size_t j = 0; j < u.size() && ok; ++j) ok = u[j] < Cvec[j];
    if (ok) return true;
  }
  return false;
}

bool fm_feasible(const geometry::IntMatrix& A, const IntVec& b) {
  const std::size_t n = A.cols;
  // Rows (a, beta) meaning a.x >= beta.
  std::vector<std::pair<IntVec, BigInt>> rows;
  for (std::size_t i = 0; i < A.rows.size(); ++i) rows.push_back({A.rows[i], b[i]});
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e = zero_vector(n);
    e[j] = 1;
    rows.push_back({e, 0});
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::pair<IntVec, BigInt>> pos, neg, keep;
    for (auto& r : rows) {
      const int s = sgn(r.first[k]);
      (s > 0 ? pos : s < 0 ? neg : keep).push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const BigInt a = p.first[k], c = -q.first[k];
        IntVec row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = c * p.first[j] + a * q.first[j];
        BigInt beta = c * p.second + a * q.second;
        BigInt g = 0;
        for (const auto& x : row) g = gcd(g, x);
        // Only exact scaling: rounding beta would be an integer cut.
        if (g > 1 && beta % g == 0) {
          for (auto& x : row) x /= g;
          beta /= g;
        }
        keep.push_back({std::move(row), std::move(beta)});
      }
    rows = std::move(keep);
  }
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.second <= 0; });
}

std::optional<std::vector<std::int64_t>> min_norm_solution_ineq(const geometry::IntMatrix& A, const IntVec& b,
                                                                std::int64_t limit) {
  const std::size_t n = A.cols, m = A.rows.size();
  std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(n));
  std::vector<std::int64_t> bb(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = A.rows[i][j].get_si();
    bb[i] = b[i].get_si();
  }
  auto ok = [&](const std::vector<std::int64_t>& x) {
    for (std::size_t i = 0; i < m; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
      if (s < bb[i]) return false;
    }
    return true;
  };
  if (n == 0) return ok({}) ? std::optional(std::vector<std::int64_t>{}) : std::nullopt;
  for (std::int64_t k = 0; k <= limit; ++k) {
    std::vector<std::int64_t> x(n, 0);
    while (true) {
      if (*std::max_element(x.begin(), x.end()) == k && ok(x)) return x;
      std::size_t j = 0;
      while (j < n && x[j] == k) x[j++] = 0;
      if (j == n) break;
      ++x[j];
    }
  }
  return std::nullopt;
}

ClosedWalkSearch brute_positive_closed_walk(const Vass& v, StateId from, std::int64_t box, std::size_t max_len) {
  ClosedWalkSearch out;
  const auto reach = graph_reachable(v, from);
  const auto d = v.dim();
  for (StateId q = 0; q < v.num_states(); ++q) {
    if (!reach[q]) continue;
    using Key = std::pair<StateId, std::vector<std::int64_t>>;
    std::map<Key, std::pair<Key, TransitionId>> parent;
    std::deque<std::pair<Key, std::size_t>> todo;
    Key root{q, std::vector<std::int64_t>(d, 0)};
    parent.emplace(root, std::pair{root, TransitionId(-1)});
    todo.push_back({root, 0});
    while (!todo.empty()) {
      auto [key, len] = todo.front();
      todo.pop_front();
      ++out.explored;
      if (len == max_len) continue;
      for (TransitionId t = 0; t < v.num_transitions(); ++t) {
        const auto& tr = v.transition(t);
        if (tr.source != key.first) continue;
        Key next{tr.target, key.second};
        bool inside = true;
        for (std::size_t i = 0; i < d; ++i) {
          next.second[i] += tr.effect[i].get_si();
          inside = inside && next.second[i] >= -box && next.second[i] <= box;
        }
        if (!inside) continue;
        const bool positive = next.first == q &&
                              std::all_of(next.second.begin(), next.second.end(), [](auto x) { return x >= 0; }) &&
                              std::any_of(next.second.begin(), next.second.end(), [](auto x) { return x > 0; });
        if (positive) {
          std::vector<TransitionId> walk{t};
          for (Key k = key; k != root; k = parent.at(k).first) walk.push_back(parent.at(k).second);
          std::reverse(walk.begin(), walk.end());
          out.walk = std::move(walk);
          out.base = q;
          return out;
        }
        if (parent.emplace(next, std::pair{key, t}).second) todo.push_back({next, len + 1});
      }
    }
  }
  return out;
}

IntVec random_ints(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  IntVec out(n);
  for (auto& x : out) x = static_cast<long>(dist(rng));
  return out;
}

}  // namespace geodim::testing
