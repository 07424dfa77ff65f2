// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/bounds.hpp"

#include <limits>

#include "geodim/errors.hpp"

namespace geodim::witness {

BoundValue BoundValue::at_least_pow2(std::size_t bits) {
  BoundValue b;
  b.saturated_ = true;
  b.min_bits_ = bits;
  return b;
}

std::string BoundValue::to_string() const {
  if (exact()) return value_.get_str();
  return ">=2^" + std::to_string(min_bits_);
}

bool BoundValue::admits(const BigInt& x) const {
  if (exact()) return x <= value_;
  if (x < 0) return true;
  return mpz_sizeinbase(x.get_mpz_t(), 2) <= min_bits_;
}

std::uint64_t BoundValue::clamp_u64() const {
  if (!exact()) return std::numeric_limits<std::uint64_t>::max();
  if (value_ < 0) return 0;
  if (value_.fits_ulong_p()) return value_.get_ui();
  return std::numeric_limits<std::uint64_t>::max();
}

bool operator<=(const BoundValue& a, const BoundValue& b) {
  if (a.exact()) return b.admits(a.value());
  if (b.exact()) return false;
  throw ResourceLimit("cannot compare two saturated bound values");
}

namespace {

class Arith {
 public:
  explicit Arith(std::size_t ceiling) : ceiling_(ceiling) {}

  BoundValue make(BigInt v) const {
    if (v > 0 && mpz_sizeinbase(v.get_mpz_t(), 2) > ceiling_) return BoundValue::at_least_pow2(ceiling_);
    return BoundValue(std::move(v));
  }
  BoundValue add(const BoundValue& a, const BoundValue& b) const {
    if (!a.exact() || !b.exact()) return BoundValue::at_least_pow2(ceiling_);
    return make(a.value() + b.value());
  }
  BoundValue mul(const BoundValue& a, const BoundValue& b) const {
    if (a.exact() && a.value() == 0) return BoundValue(BigInt(0));
    if (b.exact() && b.value() == 0) return BoundValue(BigInt(0));
    if (!a.exact() || !b.exact()) return BoundValue::at_least_pow2(ceiling_);
    return make(a.value() * b.value());
  }
  // base^exp for nonnegative base.
  BoundValue pow(const BoundValue& base, const BigInt& exp) const {
    if (exp == 0) return BoundValue(BigInt(1));
    if (base.exact() && base.value() <= 1) return base;
    if (!base.exact()) return BoundValue::at_least_pow2(ceiling_);
    // base >= 2: result >= 2^{(bits-1)*exp}.
    const std::size_t bits = mpz_sizeinbase(base.value().get_mpz_t(), 2);
    if (!exp.fits_ulong_p() || BigInt(static_cast<unsigned long>(bits - 1)) * exp >= ceiling_ ||
        BigInt(static_cast<unsigned long>(bits)) * exp > 4 * ceiling_)
      return BoundValue::at_least_pow2(ceiling_);
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), exp.get_ui());
    return make(std::move(r));
  }
  BoundValue pow(const BoundValue& base, const BoundValue& exp) const {
    if (exp.exact()) return pow(base, exp.value());
    if (base.exact() && base.value() <= 1) return base;
    return BoundValue::at_least_pow2(ceiling_);
  }

 private:
  std::size_t ceiling_;
};

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

}  // namespace

BoundTable bounds(const BoundParams& p, std::size_t ceiling_bits) {
  if (p.n < 1) throw InputError("bounds need n >= 1");
  if (p.g > p.d) throw InputError("bounds need g <= d");
  if (p.M < 0 || p.G < 0 || p.ynorm < 0 || p.znorm < 0) throw InputError("bound parameters must be nonnegative");
  const Arith ar(ceiling_bits);
  BoundTable t;
  t.params = p;
  t.ceiling_bits = ceiling_bits;
  const BoundValue n(big(p.n)), d(big(p.d)), M(p.M), G(p.G), y(p.ynorm);
  const BoundValue one(BigInt(1));

  // Coverability: L_i = n (d (|y| + M L_{i-1}))^i + L_{i-1}.
  t.cover_L.push_back(BoundValue(big(p.n) - 1));
  for (std::uint64_t i = 1; i <= p.g; ++i) {
    const auto& prev = t.cover_L.back();
    auto inner = ar.mul(d, ar.add(y, ar.mul(M, prev)));
    t.cover_L.push_back(ar.add(ar.mul(n, ar.pow(inner, big(i))), prev));
  }
  // K_i = n d^i prod_{j<i} (|y| + M K_j) + K_{i-1}.
  t.cover_K.push_back(BoundValue(big(p.n) - 1));
  for (std::uint64_t i = 1; i <= p.g; ++i) {
    BoundValue prod = one;
    for (std::uint64_t j = 0; j < i; ++j) prod = ar.mul(prod, ar.add(y, ar.mul(M, t.cover_K[j])));
    t.cover_K.push_back(ar.add(ar.mul(ar.mul(n, ar.pow(d, big(i))), prod), t.cover_K.back()));
  }

  // Simultaneous unboundedness.
  t.simub_C.push_back(BoundValue(BigInt(0)));
  t.simub_H.push_back(ar.add(ar.mul(ar.mul(n, BoundValue(big(p.d + 1))), M), G));
  t.simub_L.push_back(ar.mul(n, BoundValue(big(p.d + 1))));
  for (std::uint64_t i = 1; i <= p.g; ++i) {
    auto C = ar.add(ar.mul(M, t.simub_L[i - 1]), G);
    auto core = ar.pow(ar.mul(d, C), big(i));
    t.simub_C.push_back(C);
    t.simub_H.push_back(ar.add(ar.mul(ar.mul(n, M), core), t.simub_H[i - 1]));
    t.simub_L.push_back(ar.add(ar.mul(n, core), t.simub_L[i - 1]));
  }

  // Boundedness: D = (5 d^2 n^2 M)^2, L_0 = D^{g+1},
  // L_i = (D (d M L_{i-1})^{4i})^{g+1} + L_{i-1}.
  t.D = ar.pow(BoundValue(5 * big(p.d) * big(p.d) * big(p.n) * big(p.n) * p.M), BigInt(2));
  t.bounded_L.push_back(ar.pow(t.D, big(p.g + 1)));
  for (std::uint64_t i = 1; i <= p.g; ++i) {
    auto inner = ar.pow(ar.mul(ar.mul(d, M), t.bounded_L[i - 1]), big(4 * i));
    t.bounded_L.push_back(ar.add(ar.pow(ar.mul(t.D, inner), big(p.g + 1)), t.bounded_L[i - 1]));
  }

  t.zrun = ar.pow(BoundValue(p.znorm), big(6 * p.g + 1));

  BigInt f = 0, h = 0, f5 = 0;
  mpz_ui_pow_ui(f.get_mpz_t(), p.g + 1, p.g + 1);
  mpz_ui_pow_ui(h.get_mpz_t(), 2, p.g + 1);
  h -= 1;
  mpz_ui_pow_ui(f5.get_mpz_t(), 4 * p.g + 2, 2 * p.g + 1);
  t.cover_A = BoundValue(4 * big(p.n) * big(p.d) * p.M * (p.ynorm + 1));
  t.cover_A_f = ar.pow(t.cover_A, f);
  t.cover_A_h = ar.pow(t.cover_A, h);
  t.simub_A = BoundValue(2 * big(p.n) * big(p.d + 1) * p.M * (p.G + 1));
  t.simub_A_f = ar.pow(t.simub_A, f);
  t.bounded_C = ar.mul(ar.mul(ar.mul(BoundValue(BigInt(2)), t.D), d), M);
  t.bounded_C_f = ar.pow(t.bounded_C, f5);
  return t;
}

}  // namespace geodim::witness
