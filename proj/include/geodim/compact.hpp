// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Machine-word view of a Vass for the search engines. Construction fails
// with ResourceLimit when an effect does not fit in 64 bits; every search
// arithmetic step is overflow-checked the same way.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "geodim/vass.hpp"

namespace geodim {

using Word = std::int64_t;

class CompactVass {
 public:
  explicit CompactVass(const Vass& v);

  std::size_t dim() const { return dim_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t num_transitions() const { return src_.size(); }
  StateId source(TransitionId t) const { return src_[t]; }
  StateId target(TransitionId t) const { return dst_[t]; }
  std::span<const Word> effect(TransitionId t) const {
    return {effects_.data() + t * dim_, dim_};
  }
  // Outgoing transitions of q in ascending index order.
  const std::vector<TransitionId>& outgoing(StateId q) const { return out_[q]; }
  const std::vector<TransitionId>& incoming(StateId q) const { return in_[q]; }

 private:
  std::size_t dim_;
  std::size_t num_states_;
  std::vector<Word> effects_;
  std::vector<StateId> src_, dst_;
  std::vector<std::vector<TransitionId>> out_, in_;
};

// out = in + effect(t); returns false on a negative entry when natural.
// Throws ResourceLimit on 64-bit overflow.
bool apply(const CompactVass& v, TransitionId t, std::span<const Word> in, std::span<Word> out,
           bool natural);

std::vector<Word> to_words(const IntVec& v, const char* what);
IntVec to_bigints(std::span<const Word> v);

// Interning table for (state, values) rows stored in one flat buffer.
class ConfigTable {
 public:
  explicit ConfigTable(std::size_t dim);

  // Returns (id, inserted).
  std::pair<std::size_t, bool> intern(StateId state, std::span<const Word> values);
  std::size_t find(StateId state, std::span<const Word> values) const;  // npos if absent
  std::size_t size() const { return count_; }
  StateId state(std::size_t id) const { return static_cast<StateId>(data_[id * stride_]); }
  std::span<const Word> values(std::size_t id) const {
    return {data_.data() + id * stride_ + 1, stride_ - 1};
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::uint64_t hash(StateId state, std::span<const Word> values) const;
  bool equal(std::size_t id, StateId state, std::span<const Word> values) const;
  void grow();

  std::size_t stride_;
  std::size_t count_ = 0;
  std::vector<Word> data_;
  std::vector<std::uint32_t> slots_;  // id + 1, 0 = empty
};

}  // namespace geodim
