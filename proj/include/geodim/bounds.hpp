// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geodim/bigint.hpp"

namespace geodim::witness {

// An exact big integer, or a certificate that the true value is at least
// 2^min_bits when it would exceed the configured width ceiling.
class BoundValue {
 public:
  BoundValue() = default;
  explicit BoundValue(BigInt v) : value_(std::move(v)) {}
  static BoundValue at_least_pow2(std::size_t bits);

  bool exact() const { return !saturated_; }
  const BigInt& value() const { return value_; }  // exact only
  std::size_t min_bits() const { return min_bits_; }
  std::string to_string() const;  // decimal, or ">=2^N"

  // x <= this. Always true for saturated bounds once x < 2^min_bits.
  bool admits(const BigInt& x) const;
  // Usable as a search depth: min(value, UINT64_MAX).
  std::uint64_t clamp_u64() const;

 private:
  BigInt value_;
  bool saturated_ = false;
  std::size_t min_bits_ = 0;
};

bool operator<=(const BoundValue& a, const BoundValue& b);  // throws if undecidable

struct BoundParams {
  std::uint64_t d = 1;
  std::uint64_t n = 1;
  BigInt M = 0;
  std::uint64_t g = 0;
  BigInt G = 0;
  BigInt ynorm = 0;
  BigInt znorm = 0;  // max(size(V), |s|, |t|) for the integer-run bound
};

struct BoundTable {
  BoundParams params;
  std::size_t ceiling_bits = 0;

  std::vector<BoundValue> cover_L;  // i = 0..g
  std::vector<BoundValue> cover_K;
  std::vector<BoundValue> simub_C, simub_H, simub_L;
  BoundValue D;
  std::vector<BoundValue> bounded_L;
  BoundValue zrun;  // znorm^{6g+1}

  // Closed forms from the bound proofs.
  BoundValue cover_A;      // 4ndM(|y|+1)
  BoundValue cover_A_f;    // A^{(g+1)^{g+1}}
  BoundValue cover_A_h;    // A^{2^{g+1}-1}
  BoundValue simub_A;      // 2n(d+1)M(G+1)
  BoundValue simub_A_f;    // A^{(g+1)^{g+1}}
  BoundValue bounded_C;    // 2DdM
  BoundValue bounded_C_f;  // C^{(4g+2)^{2g+1}}
};

constexpr std::size_t kDefaultCeilingBits = std::size_t{1} << 20;

// Throws InputError unless d >= g, n >= 1, M >= 0.
BoundTable bounds(const BoundParams& params, std::size_t ceiling_bits = kDefaultCeilingBits);

}  // namespace geodim::witness
