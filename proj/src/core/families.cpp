// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/families.hpp"

#include "geodim/errors.hpp"

namespace geodim {

Vass doubling_chain(std::size_t d) {
  if (d == 0) throw InputError("doubling chain needs d >= 1");
  std::vector<std::string> states;
  for (std::size_t i = 1; i <= d; ++i) states.push_back("q" + std::to_string(i));
  std::vector<Transition> ts;
  IntVec e1 = zero_vector(d);
  e1[0] = 1;
  ts.push_back({0, e1, 0});
  for (std::size_t i = 1; i < d; ++i) {
    ts.push_back({i - 1, zero_vector(d), i});
    IntVec loop = zero_vector(d);
    loop[i - 1] = -2;
    loop[i] = 1;
    ts.push_back({i, loop, i});
  }
  return Vass("doubling_chain_d" + std::to_string(d), d, std::move(states), std::move(ts));
}

Vass linear_path_scheme(const std::vector<IntVec>& loop_effects) {
  if (loop_effects.empty()) throw InputError("linear path scheme needs at least one loop");
  const std::size_t d = loop_effects.front().size();
  std::vector<std::string> states;
  std::vector<Transition> ts;
  for (std::size_t i = 0; i < loop_effects.size(); ++i) {
    if (loop_effects[i].size() != d) throw InputError("loop effects disagree on dimension");
    states.push_back("p" + std::to_string(i + 1));
    if (i > 0) ts.push_back({i - 1, zero_vector(d), i});
    ts.push_back({i, loop_effects[i], i});
  }
  return Vass("lps" + std::to_string(loop_effects.size()), d, std::move(states), std::move(ts));
}

}  // namespace geodim
