// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/compact.hpp"

#include <cstring>
#include <string>

#include "geodim/errors.hpp"

namespace geodim {

CompactVass::CompactVass(const Vass& v)
    : dim_(v.dim()), num_states_(v.num_states()), out_(v.num_states()), in_(v.num_states()) {
  effects_.reserve(v.num_transitions() * dim_);
  for (TransitionId t = 0; t < v.num_transitions(); ++t) {
    const auto& tr = v.transition(t);
    for (const auto& a : tr.effect) effects_.push_back(to_int64_or_throw(a, "transition effect"));
    src_.push_back(tr.source);
    dst_.push_back(tr.target);
    out_[tr.source].push_back(t);
    in_[tr.target].push_back(t);
  }
}

bool apply(const CompactVass& v, TransitionId t, std::span<const Word> in, std::span<Word> out,
           bool natural) {
  auto eff = v.effect(t);
  bool ok = true;
  for (std::size_t i = 0; i < eff.size(); ++i) {
    if (__builtin_add_overflow(in[i], eff[i], &out[i]))
      throw ResourceLimit("counter value overflows 64 bits");
    if (natural && out[i] < 0) ok = false;
  }
  return ok;
}

std::vector<Word> to_words(const IntVec& v, const char* what) {
  std::vector<Word> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int64_or_throw(x, what));
  return out;
}

IntVec to_bigints(std::span<const Word> v) {
  IntVec out;
  out.reserve(v.size());
  for (Word x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

ConfigTable::ConfigTable(std::size_t dim) : stride_(dim + 1), slots_(1024, 0) {}

std::uint64_t ConfigTable::hash(StateId state, std::span<const Word> values) const {
  // FNV-1a over the words, then a final avalanche.
  std::uint64_t h = 1469598103934665603ull ^ state;
  for (Word w : values) {
    h ^= static_cast<std::uint64_t>(w);
    h *= 1099511628211ull;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

bool ConfigTable::equal(std::size_t id, StateId state, std::span<const Word> values) const {
  const Word* row = data_.data() + id * stride_;
  return static_cast<StateId>(row[0]) == state &&
         std::memcmp(row + 1, values.data(), values.size() * sizeof(Word)) == 0;
}

std::size_t ConfigTable::find(StateId state, std::span<const Word> values) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash(state, values) & mask;; i = (i + 1) & mask) {
    const auto s = slots_[i];
    if (s == 0) return npos;
    if (equal(s - 1, state, values)) return s - 1;
  }
}

std::pair<std::size_t, bool> ConfigTable::intern(StateId state, std::span<const Word> values) {
  if ((count_ + 1) * 2 > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = hash(state, values) & mask;
  for (;; i = (i + 1) & mask) {
    const auto s = slots_[i];
    if (s == 0) break;
    if (equal(s - 1, state, values)) return {s - 1, false};
  }
  if (count_ >= 0xffffffffu - 1) throw ResourceLimit("configuration table full");
  data_.push_back(static_cast<Word>(state));
  data_.insert(data_.end(), values.begin(), values.end());
  slots_[i] = static_cast<std::uint32_t>(++count_);
  return {count_ - 1, true};
}

void ConfigTable::grow() {
  std::vector<std::uint32_t> old(slots_.size() * 2, 0);
  old.swap(slots_);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t id = 0; id < count_; ++id) {
    std::size_t i = hash(state(id), values(id)) & mask;
    while (slots_[i] != 0) i = (i + 1) & mask;
    slots_[i] = static_cast<std::uint32_t>(id + 1);
  }
}

}  // namespace geodim
