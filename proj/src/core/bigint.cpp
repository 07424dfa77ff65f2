// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/bigint.hpp"

#include <cctype>
#include <limits>

#include "geodim/errors.hpp"

namespace geodim {

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  return out + ")";
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw InputError("expected integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw InputError("expected integer, got '" + std::string(text) + "'");
  }
  std::string digits(text.substr(i));
  BigInt value(digits, 10);
  return text[0] == '-' ? BigInt(-value) : value;
}

std::optional<std::int64_t> to_int64(const BigInt& x) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!x.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(x.get_si());
}

std::int64_t to_int64_or_throw(const BigInt& x, const char* what) {
  auto v = to_int64(x);
  if (!v) throw ResourceLimit(std::string(what) + " does not fit in 64 bits: " + x.get_str());
  return *v;
}

IntVec zero_vector(std::size_t d) { return IntVec(d, BigInt(0)); }

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  add_into(r, b);
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

void add_into(IntVec& acc, const IntVec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

BigInt inf_norm(const IntVec& v) {
  BigInt m = 0;
  for (const auto& x : v) {
    BigInt a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

bool all_nonnegative(const IntVec& v) {
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

bool leq(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace geodim
