// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/rational.hpp"

#include "geodim/errors.hpp"

namespace geodim::geometry {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalMatrix::RationalMatrix(std::size_t cols, std::vector<RatVec> rows)
    : cols_(cols), rows_(std::move(rows)) {
  for (auto& r : rows_) {
    if (r.size() != cols_) throw InputError("ragged rational matrix");
    for (auto& q : r) q.canonicalize();
  }
}

RationalMatrix RationalMatrix::from_integers(std::size_t cols, const std::vector<IntVec>& rows) {
  RationalMatrix m(cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("ragged integer matrix");
    RatVec q(r.begin(), r.end());
    m.rows_.push_back(std::move(q));
  }
  return m;
}

void RationalMatrix::push_back(RatVec r) {
  if (r.size() != cols_) throw InputError("row length does not match column count");
  // Comparisons are only meaningful on canonical values; mpq_class(a, b) is not.
  for (auto& q : r) q.canonicalize();
  rows_.push_back(std::move(r));
}

RationalMatrix RationalMatrix::columns(std::span<const std::size_t> cols) const {
  RationalMatrix out(cols.size());
  for (const auto& r : rows_) {
    RatVec s;
    s.reserve(cols.size());
    for (auto j : cols) s.push_back(r.at(j));
    out.rows_.push_back(std::move(s));
  }
  return out;
}

RrefResult rref(const RationalMatrix& m) {
  std::vector<RatVec> a = m.data();
  const std::size_t rows = a.size(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {RationalMatrix(cols, std::move(a)), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("inverse of a non-square matrix");
  if (n == 0) return RationalMatrix(0);
  RationalMatrix aug(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec r = m.row(i);
    r.resize(2 * n, Rational(0));
    r[n + i] = 1;
    aug.push_back(std::move(r));
  }
  auto red = rref(aug);
  if (red.pivots.size() < n || red.pivots[n - 1] >= n) return std::nullopt;
  RationalMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv.push_back(RatVec(red.matrix.row(i).begin() + n, red.matrix.row(i).end()));
  return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  RationalMatrix out(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatVec r(b.cols(), Rational(0));
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r[j] += a.at(i, k) * b.at(k, j);
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return rref(a).matrix == rref(b).matrix;
}

}  // namespace geodim::geometry
