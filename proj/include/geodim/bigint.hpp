// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geodim {

using BigInt = mpz_class;
using IntVec = std::vector<BigInt>;

std::string to_string(const BigInt& x);
std::string to_string(const IntVec& v);  // "(1,-2,0)"

// Strict signed decimal; throws InputError.
BigInt parse_bigint(std::string_view text);

std::optional<std::int64_t> to_int64(const BigInt& x);
std::int64_t to_int64_or_throw(const BigInt& x, const char* what);

IntVec zero_vector(std::size_t d);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
void add_into(IntVec& acc, const IntVec& v);
bool is_zero(const IntVec& v);
BigInt inf_norm(const IntVec& v);
bool all_nonnegative(const IntVec& v);
bool leq(const IntVec& a, const IntVec& b);  // componentwise

}  // namespace geodim
