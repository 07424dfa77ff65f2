// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/no_pump.hpp"

#include <algorithm>

#include "acceleration.hpp"
#include "geodim/compact.hpp"
#include "geodim/errors.hpp"

namespace geodim::witness {

const char* to_string(NoPumpStatus s) {
  switch (s) {
    case NoPumpStatus::vacuous: return "vacuous";
    case NoPumpStatus::confirmed: return "confirmed";
    case NoPumpStatus::violated: return "violated";
    case NoPumpStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

NoPumpReport check_no_pump_property(const Vass& v, const Configuration& s, const BigInt& G,
                                    const DeciderOptions& opts) {
  if (s.state() >= v.num_states() || s.values().size() != v.dim())
    throw InputError("source does not match the VASS");
  if (G < 0) throw InputError("G must be nonnegative");
  NoPumpReport rep;
  rep.params = params_of(v, 0, G);
  const auto table = bounds(rep.params, opts.ceiling_bits);
  rep.H = table.simub_H.back();
  rep.L = table.simub_L.back();

  // Thresholds beyond 64 bits can only be met by omega components.
  const Word threshold = rep.H.exact() && rep.H.value().fits_slong_p()
                             ? static_cast<Word>(rep.H.value().get_si())
                             : detail::kOmega;
  const std::size_t d = v.dim();
  const std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  try {
    const CompactVass cv(v);
    auto tree = detail::accelerate(cv, s.state(), to_words(s.values(), "source value"), threshold,
                                   opts.node_budget);
    rep.premise_nodes = tree.nodes.size();
    if (tree.truncated) {
      rep.status = NoPumpStatus::inconclusive;
      return rep;
    }
    for (const auto& node : tree.nodes)
      if (node.flags == all) rep.premise_states.push_back(node.state);
  } catch (const ResourceLimit&) {
    rep.status = NoPumpStatus::inconclusive;
    return rep;
  }
  std::sort(rep.premise_states.begin(), rep.premise_states.end());
  rep.premise_states.erase(std::unique(rep.premise_states.begin(), rep.premise_states.end()),
                           rep.premise_states.end());
  if (rep.premise_states.empty()) {
    rep.status = NoPumpStatus::vacuous;
    return rep;
  }

  DeciderOptions cover_opts = opts;
  cover_opts.cap.reset();  // the default cap of a uniform cover is exactly L
  bool inconclusive = false, violated = false;
  for (StateId q : rep.premise_states) {
    auto res = decide_uniform_cover(v, s, q, G, cover_opts);
    if (res.outcome == Outcome::no) violated = true;
    if (res.outcome == Outcome::inconclusive) inconclusive = true;
    rep.checks.push_back({q, std::move(res)});
  }
  rep.status = violated       ? NoPumpStatus::violated
               : inconclusive ? NoPumpStatus::inconclusive
                              : NoPumpStatus::confirmed;
  return rep;
}

}  // namespace geodim::witness
