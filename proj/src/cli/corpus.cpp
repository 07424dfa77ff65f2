// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>

#include "geodim/cli.hpp"
#include "geodim/errors.hpp"
#include "geodim/scc.hpp"

namespace geodim::cli {
namespace {

// libstdc++ distributions are fixed for a given build, which is all the
// corpus promises.
std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

IntVec random_effect(std::mt19937_64& rng, std::size_t d, std::int64_t M) {
  IntVec e(d);
  std::uniform_int_distribution<std::int64_t> dist(-M, M);
  for (auto& x : e) x = static_cast<long>(dist(rng));
  return e;
}

void check_spec(const RandomSpec& s) {
  if (s.min_d > s.max_d || s.min_n > s.max_n || s.min_t > s.max_t || s.min_n == 0 || s.M < 0)
    throw InputError("bad random instance bounds");
}

std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i + 1));
  return names;
}

std::string file_name(const std::string& family, std::size_t i) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%04zu", family.c_str(), i);
  return buf;
}

}  // namespace

Vass random_vass(std::mt19937_64& rng, const RandomSpec& spec, std::string name) {
  check_spec(spec);
  const auto d = pick(rng, spec.min_d, spec.max_d);
  const auto n = pick(rng, spec.min_n, spec.max_n);
  const auto m = pick(rng, spec.min_t, spec.max_t);
  std::vector<Transition> ts;
  for (std::size_t i = 0; i < m; ++i) {
    const auto src = pick(rng, 0, n - 1);
    const auto dst = pick(rng, 0, n - 1);
    ts.push_back({src, random_effect(rng, d, spec.M), dst});
  }
  return Vass(std::move(name), d, state_names(n), std::move(ts));
}

// max_n bounds the number of states; each component has one or two. The
// transition bounds are ignored: every component gets 1 or 2 loops.
Vass random_line_vass(std::mt19937_64& rng, const RandomSpec& spec, std::string name) {
  check_spec(spec);
  const auto d = pick(rng, spec.min_d, spec.max_d);
  const auto budget = pick(rng, spec.min_n, spec.max_n);
  std::vector<Transition> ts;
  std::size_t n = 0;
  std::optional<StateId> prev_exit;
  while (n < budget) {
    const bool pair = budget - n >= 2 && pick(rng, 0, 2) == 0;
    const StateId a = n, b = pair ? n + 1 : n;
    n += pair ? 2 : 1;
    if (prev_exit) ts.push_back({*prev_exit, random_effect(rng, d, spec.M), a});
    if (pair) {
      ts.push_back({a, random_effect(rng, d, spec.M), b});
      ts.push_back({b, random_effect(rng, d, spec.M), a});
      if (pick(rng, 0, 1)) ts.push_back({b, random_effect(rng, d, spec.M), b});
    } else {
      const auto loops = pick(rng, 1, 2);
      for (std::size_t i = 0; i < loops; ++i) ts.push_back({a, random_effect(rng, d, spec.M), a});
    }
    prev_exit = b;
  }
  return Vass(std::move(name), d, state_names(n), std::move(ts));
}

std::vector<CorpusEntry> gen_corpus(std::uint64_t seed, const CorpusCounts& counts, const RandomSpec& spec,
                                    const std::filesystem::path& dir) {
  check_spec(spec);
  std::vector<CorpusEntry> entries;
  std::filesystem::create_directories(dir);
  if (counts.random + counts.scc1 + counts.line == 0) return entries;
  std::mt19937_64 rng(seed);

  auto emit = [&](const Vass& v, const std::string& family, const geometry::CycleSpace& cs) {
    CorpusEntry e{v.name() + ".vass", family, v.dim(), v.num_states(), v.num_transitions(),
                  cs.rank, cs.scc_rank, v.max_norm()};
    std::ofstream(dir / e.file, std::ios::binary) << serialize(v);
    entries.push_back(std::move(e));
  };

  for (std::size_t i = 0; i < counts.random; ++i) {
    auto v = random_vass(rng, spec, file_name("random", i));
    emit(v, "random", geometry::cycle_space(v));
  }
  for (std::size_t i = 0; i < counts.scc1; ++i) {
    // Rejection sampling; a component with a nonzero loop exists with
    // probability bounded away from 0 once M >= 1.
    if (spec.M == 0) throw InputError("the g_scc = 1 family needs M >= 1");
    bool done = false;
    for (int attempt = 0; attempt < 10000 && !done; ++attempt) {
      auto v = random_line_vass(rng, spec, file_name("scc1", i));
      auto cs = geometry::cycle_space(v);
      if (cs.scc_rank != 1) continue;
      emit(v, "scc1", cs);
      done = true;
    }
    if (!done) throw ResourceLimit("could not sample a g_scc = 1 instance");
  }
  for (std::size_t i = 0; i < counts.line; ++i) {
    auto v = random_line_vass(rng, spec, file_name("line", i));
    emit(v, "line", geometry::cycle_space(v));
  }

  std::ofstream manifest(dir / "manifest.tsv", std::ios::binary);
  manifest << "file\tfamily\td\tn\tt\tM\tg\tg_scc\n";
  for (const auto& e : entries)
    manifest << e.file << '\t' << e.family << '\t' << e.d << '\t' << e.n << '\t' << e.t << '\t' << to_string(e.M)
             << '\t' << e.g << '\t' << e.g_scc << '\n';
  return entries;
}

}  // namespace geodim::cli
