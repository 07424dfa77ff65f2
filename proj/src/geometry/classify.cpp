// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/classify.hpp"

#include <algorithm>
#include <numeric>

#include "geodim/errors.hpp"

namespace geodim::geometry {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::small: return "small";
    case Verdict::large: return "large";
    case Verdict::thin: return "thin";
    case Verdict::thick: return "thick";
  }
  return "?";
}

Profile greedy_distinguished(const CleanBasis& space, const IntVec& v) {
  if (v.size() != space.dim()) throw InputError("vector dimension does not match the space");
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

  // Columns of the basis are g-vectors; keep them as rows and track rank.
  Profile p;
  RationalMatrix chosen(space.rank());
  for (std::size_t i : order) {
    if (p.distinguished.size() == space.rank()) break;
    RationalMatrix trial = chosen;
    RatVec col;
    for (std::size_t r = 0; r < space.rank(); ++r) col.push_back(space.basis.at(r, i));
    trial.push_back(col);
    if (rank(trial) == trial.rows()) {
      chosen = std::move(trial);
      p.distinguished.push_back(i);
      p.sorted_values.push_back(v[i]);
    }
  }
  std::sort(p.distinguished.begin(), p.distinguished.end());
  return p;
}

Profile greedy_distinguished(const CycleSpace& space, const IntVec& v) {
  return greedy_distinguished(space.basis, v);
}

Classification classify_small(const CleanBasis& space, const IntVec& v, const BigInt& C) {
  Classification c;
  c.profile = greedy_distinguished(space, v);
  const bool small = c.profile.sorted_values.empty() || c.profile.sorted_values.back() < C;
  c.verdict = small ? Verdict::small : Verdict::large;
  if (small) c.witness = rebase(space, c.profile.distinguished);
  return c;
}

Classification classify_small(const CycleSpace& space, const IntVec& v, const BigInt& C) {
  return classify_small(space.basis, v, C);
}

Classification classify_thin(const CleanBasis& space, const IntVec& v, const std::vector<BigInt>& Cvec) {
  if (Cvec.size() != space.rank())
    throw InputError("threshold vector has length " + std::to_string(Cvec.size()) + ", rank is " +
                     std::to_string(space.rank()));
  if (!std::is_sorted(Cvec.begin(), Cvec.end())) throw InputError("threshold vector is not sorted ascending");
  Classification c;
  c.profile = greedy_distinguished(space, v);
  bool thin = true;
  for (std::size_t j = 0; j < Cvec.size(); ++j)
    if (!(c.profile.sorted_values[j] < Cvec[j])) thin = false;
  c.verdict = thin ? Verdict::thin : Verdict::thick;
  if (thin) c.witness = rebase(space, c.profile.distinguished);
  return c;
}

Classification classify_thin(const CycleSpace& space, const IntVec& v, const std::vector<BigInt>& Cvec) {
  return classify_thin(space.basis, v, Cvec);
}

}  // namespace geodim::geometry
