// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geodim/bigint.hpp"

namespace geodim::geometry {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

std::string to_string(const Rational& q);  // "p/q", or "p" when integral

class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t cols = 0) : cols_(cols) {}
  RationalMatrix(std::size_t cols, std::vector<RatVec> rows);  // throws InputError on ragged rows
  static RationalMatrix from_integers(std::size_t cols, const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const RatVec& row(std::size_t i) const { return rows_[i]; }
  RatVec& row(std::size_t i) { return rows_[i]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const std::vector<RatVec>& data() const { return rows_; }
  void push_back(RatVec r);

  RationalMatrix columns(std::span<const std::size_t> cols) const;
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t cols_;
  std::vector<RatVec> rows_;
};

struct RrefResult {
  RationalMatrix matrix;  // zero rows removed
  std::vector<std::size_t> pivots;
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Row-space equality via canonical rref.
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace geodim::geometry
