// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/ilp.hpp"

#include "geodim/errors.hpp"

namespace geodim::geometry {

namespace {

struct Tableau {
  std::vector<RatVec> a;  // rows, last column is the right-hand side
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // variable columns, excluding rhs
};

void pivot(Tableau& t, RatVec& obj, std::size_t r, std::size_t c) {
  const Rational inv = 1 / t.a[r][c];
  for (auto& x : t.a[r]) x *= inv;
  auto eliminate = [&](RatVec& row) {
    if (row[c] == 0) return;
    const Rational f = row[c];
    for (std::size_t j = 0; j <= t.cols; ++j)
      if (t.a[r][j] != 0) row[j] -= f * t.a[r][j];
  };
  for (std::size_t i = 0; i < t.a.size(); ++i)
    if (i != r) eliminate(t.a[i]);
  eliminate(obj);
  t.basis[r] = c;
}

// Minimises over the tableau; obj holds reduced costs and -value in its last
// entry. Returns false when unbounded.
bool simplex(Tableau& t, RatVec& obj, std::size_t allowed_cols) {
  for (;;) {
    std::size_t enter = allowed_cols;
    for (std::size_t j = 0; j < allowed_cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == allowed_cols) return true;
    std::size_t leave = t.a.size();
    Rational best;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.a[i][enter] <= 0) continue;
      Rational ratio = t.a[i][t.cols] / t.a[i][enter];
      if (leave == t.a.size() || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == t.a.size()) return false;
    pivot(t, obj, leave, enter);
  }
}

}  // namespace

LpResult solve_lp(const IntegerProgram& p) {
  const std::size_t n = p.num_vars;
  auto lower = [&](std::size_t j) { return p.lower.empty() ? BigInt(0) : p.lower[j]; };

  // Shift x = lower + y and collect rows over y.
  struct Row {
    RatVec a;
    Relation rel;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : p.constraints) {
    if (c.coeffs.size() != n) throw InputError("constraint arity does not match variable count");
    Rational rhs = c.rhs;
    for (std::size_t j = 0; j < n; ++j) rhs -= c.coeffs[j] * Rational(lower(j));
    rows.push_back({c.coeffs, c.rel, rhs});
  }
  if (!p.upper.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.upper[j]) continue;
      BigInt span = *p.upper[j] - lower(j);
      if (span < 0) return {LpStatus::infeasible, {}, 0};
      RatVec a(n, Rational(0));
      a[j] = 1;
      rows.push_back({std::move(a), Relation::le, Rational(span)});
    }
  }

  const std::size_t m = rows.size();
  std::size_t slacks = 0;
  for (const auto& r : rows)
    if (r.rel != Relation::eq) ++slacks;
  const std::size_t art0 = n + slacks;
  Tableau t;
  t.cols = art0 + m;
  t.a.assign(m, RatVec(t.cols + 1, Rational(0)));
  t.basis.resize(m);
  std::size_t s = n;
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = t.a[i];
    for (std::size_t j = 0; j < n; ++j) row[j] = rows[i].a[j];
    if (rows[i].rel == Relation::le) row[s++] = 1;
    if (rows[i].rel == Relation::ge) row[s++] = -1;
    row[t.cols] = rows[i].rhs;
    if (row[t.cols] < 0)
      for (auto& x : row) x = -x;
    row[art0 + i] = 1;
    t.basis[i] = art0 + i;
  }

  // Phase 1: minimise the sum of artificials.
  RatVec obj(t.cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < art0; ++j) obj[j] -= t.a[i][j];
  for (std::size_t i = 0; i < m; ++i) obj[t.cols] -= t.a[i][t.cols];
  simplex(t, obj, t.cols);
  if (obj[t.cols] != 0) return {LpStatus::infeasible, {}, 0};

  // Drive artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.a.size();) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    std::size_t c = art0;
    for (std::size_t j = 0; j < art0; ++j)
      if (t.a[i][j] != 0) {
        c = j;
        break;
      }
    if (c == art0) {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    pivot(t, obj, i, c);
    ++i;
  }

  // Phase 2 over the original columns.
  auto cost = [&](std::size_t j) {
    return j < n && !p.objective.empty() ? p.objective[j] : Rational(0);
  };
  obj.assign(t.cols + 1, Rational(0));
  for (std::size_t j = 0; j < art0; ++j) {
    obj[j] = cost(j);
    for (std::size_t i = 0; i < t.a.size(); ++i) obj[j] -= cost(t.basis[i]) * t.a[i][j];
  }
  if (!simplex(t, obj, art0)) return {LpStatus::unbounded, {}, 0};

  LpResult r;
  r.status = LpStatus::optimal;
  r.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.a.size(); ++i)
    if (t.basis[i] < n) r.x[t.basis[i]] = t.a[i][t.cols];
  r.value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    r.x[j] += Rational(lower(j));
    r.value += cost(j) * r.x[j];
  }
  return r;
}

namespace {

BigInt floor_of(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

struct BranchAndBound {
  std::size_t budget = 0;
  std::size_t nodes = 0;
  std::optional<IlpResult> best;
  bool unbounded = false;

  void explore(IntegerProgram& p) {
    if (unbounded) return;
    if (++nodes > budget)
      throw ResourceLimit("integer program exceeded its node budget of " + std::to_string(budget));
    LpResult lp = solve_lp(p);
    if (lp.status == LpStatus::infeasible) return;
    if (lp.status == LpStatus::unbounded) {
      unbounded = true;
      return;
    }
    if (best && lp.value >= best->value) return;
    std::size_t j = 0;
    while (j < p.num_vars && lp.x[j].get_den() == 1) ++j;
    if (j == p.num_vars) {
      IlpResult r;
      r.status = LpStatus::optimal;
      r.value = lp.value;
      for (const auto& q : lp.x) r.x.push_back(q.get_num());
      best = std::move(r);
      return;
    }
    const BigInt f = floor_of(lp.x[j]);
    const auto saved_lower = p.lower[j];
    const auto saved_upper = p.upper[j];
    if (!saved_upper || *saved_upper > f) p.upper[j] = f;
    explore(p);
    p.upper[j] = saved_upper;
    p.lower[j] = f + 1;
    explore(p);
    p.lower[j] = saved_lower;
  }
};

}  // namespace

IlpResult solve_ilp(const IntegerProgram& p, std::size_t node_budget) {
  IntegerProgram work = p;
  if (work.lower.empty()) work.lower.assign(work.num_vars, BigInt(0));
  if (work.upper.empty()) work.upper.assign(work.num_vars, std::nullopt);
  BranchAndBound bb;
  bb.budget = node_budget;
  bb.explore(work);
  IlpResult r;
  if (bb.unbounded) {
    r.status = LpStatus::unbounded;
  } else if (bb.best) {
    r = *bb.best;
  }
  r.nodes = bb.nodes;
  return r;
}

std::optional<IntVec> lexmin_ilp(IntegerProgram p, std::size_t node_budget, std::size_t* nodes) {
  if (p.lower.empty()) p.lower.assign(p.num_vars, BigInt(0));
  if (p.upper.empty()) p.upper.assign(p.num_vars, std::nullopt);
  std::size_t used = 0;
  IntVec point;
  for (std::size_t i = 0; i < p.num_vars; ++i) {
    p.objective.assign(p.num_vars, Rational(0));
    p.objective[i] = 1;
    IlpResult r = solve_ilp(p, node_budget - std::min(node_budget, used));
    used += r.nodes;
    if (r.status == LpStatus::unbounded) throw std::logic_error("lexmin over a variable unbounded below");
    if (r.status == LpStatus::infeasible) {
      if (nodes) *nodes = used;
      return std::nullopt;
    }
    p.lower[i] = r.x[i];
    p.upper[i] = r.x[i];
    point = r.x;
  }
  if (nodes) *nodes = used;
  if (p.num_vars == 0) {
    // Feasibility of the constraint set alone.
    IlpResult r = solve_ilp(p, node_budget);
    if (nodes) *nodes += r.nodes;
    if (r.status != LpStatus::optimal) return std::nullopt;
  }
  return point;
}

}  // namespace geodim::geometry
