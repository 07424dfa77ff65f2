// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "geodim/boundedness.hpp"
#include "geodim/classify.hpp"
#include "geodim/coverability.hpp"
#include "geodim/cycle_space.hpp"
#include "geodim/no_pump.hpp"
#include "geodim/vass.hpp"
#include "geodim/zreach.hpp"

namespace geodim::cli {

using Json = nlohmann::ordered_json;

// ---- configuration literals ------------------------------------------------

// "1,-2,3"; the empty string is the empty vector.
IntVec parse_int_list(std::string_view text);

// "state:v1,...,vd" against v. Negative entries only when allow_negative.
ZConfiguration parse_config(const Vass& v, std::string_view text, bool allow_negative);
Configuration parse_nat_config(const Vass& v, std::string_view text);

// ---- corpus ------------------------------------------------------------

struct RandomSpec {
  std::size_t min_d = 1, max_d = 4;
  std::size_t min_n = 1, max_n = 4;
  std::size_t min_t = 1, max_t = 8;
  std::int64_t M = 2;
};

// Uniform endpoints and effects in [-M, M].
Vass random_vass(std::mt19937_64& rng, const RandomSpec& spec, std::string name);
// SCCs of one or two states in a line, one bridge between neighbours.
Vass random_line_vass(std::mt19937_64& rng, const RandomSpec& spec, std::string name);

struct CorpusCounts {
  std::size_t random = 0;
  std::size_t scc1 = 0;  // line instances post-filtered to g_scc = 1
  std::size_t line = 0;
};

struct CorpusEntry {
  std::string file, family;
  std::size_t d = 0, n = 0, t = 0, g = 0, g_scc = 0;
  BigInt M;
};

// Writes <family>_<i>.vass plus manifest.tsv into dir (created if needed).
// With all counts zero the directory is left empty.
std::vector<CorpusEntry> gen_corpus(std::uint64_t seed, const CorpusCounts& counts, const RandomSpec& spec,
                                    const std::filesystem::path& dir);

// ---- reports -------------------------------------------------------------

struct Report {
  std::string command;  // argv echo
  std::string digest;   // FNV-1a over the input files, or "-"
  std::string status = "ok";  // ok | inconclusive | error
  Json facts = Json::object();
  double time_ms = 0;

  Json to_json() const;
  // One "key: value" line per leaf of to_json(), dotted paths.
  std::string to_pretty() const;
};

std::string fnv1a_hex(std::string_view bytes);

Json big_json(const BigInt& x);  // number when it fits int64, else string
Json bound_json(const witness::BoundValue& b);
Json params_json(const witness::BoundParams& p);
Json stats_json(const witness::SearchStats& s);
Json run_json(const Vass& v, const Run& r);

Json dim_facts(const Vass& v, const geometry::CycleSpace& cs);
Json cover_facts(const Vass& v, const witness::CoverResult& r);
Json boundedness_facts(const Vass& v, const witness::BoundednessResult& r);
Json nopump_facts(const Vass& v, const witness::NoPumpReport& r);
Json classification_facts(const geometry::Classification& c);
// table: cover | simub | bounded | zrun | closed | all
Json bounds_facts(const witness::BoundTable& t, std::string_view table);

// ---- entry point -----------------------------------------------------------

// Exit 0 decided, 2 input error, 3 resource ceiling or inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace geodim::cli
