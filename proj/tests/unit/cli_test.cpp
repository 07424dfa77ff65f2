// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "geodim/cli.hpp"
#include "geodim/coverability.hpp"
#include "geodim/cycle_space.hpp"
#include "geodim/errors.hpp"
#include "geodim/families.hpp"

namespace geodim::cli {
namespace {

namespace fs = std::filesystem;

const std::string kD3 = std::string(GEODIM_DATA_DIR) + "/doubling_d3.vass";

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("geodim_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, DimReportsDimensions) {
  auto r = call({"dim", kD3, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto f = r.json()["facts"];
  EXPECT_EQ(f["d"], 3);
  EXPECT_EQ(f["g"], 3);
  EXPECT_EQ(f["g_scc"], 1);
  EXPECT_EQ(f["per_scc"].size(), 3u);
  EXPECT_EQ(f["clean_basis"][0][0], "1");
}

TEST(Cli, BoundsCoverTable) {
  auto r = call({"bounds", "--d", "1", "--n", "2", "--M", "1", "--g", "1", "--ynorm", "1", "--table", "cover", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto L = r.json()["facts"]["cover"]["L"];
  EXPECT_EQ(L, Json::parse("[1, 5]"));
  EXPECT_FALSE(r.json()["facts"].contains("bounded"));
}

TEST(Cli, CoverDoublingChain) {
  auto r = call({"cover", kD3, "--source", "q1:0,0,0", "--target", "q3:0,0,1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["facts"]["outcome"], "yes");
  EXPECT_EQ(j["facts"]["witness"]["length"], 9);
  EXPECT_TRUE(j["facts"].contains("cap"));
  EXPECT_EQ(j["input_digest"], fnv1a_hex(slurp(kD3)));
}

TEST(Cli, ReportIsAThinAdapter) {
  auto r = call({"cover", kD3, "--source", "q1:0,0,0", "--target", "q3:0,0,1", "--json"});
  auto v = doubling_chain(3);
  auto direct = cover_facts(v, witness::decide_coverability(v, Configuration(0, {0, 0, 0}),
                                                             Configuration(2, {0, 0, 1})));
  EXPECT_EQ(r.json()["facts"], direct);
  auto d = call({"dim", kD3, "--json"});
  EXPECT_EQ(d.json()["facts"], dim_facts(v, geometry::cycle_space(v)));
}

// Re-derive the pretty lines from the JSON tree with an independent walk.
void leaves(const Json& j, const std::string& path, std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) leaves(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return !e.is_primitive(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) leaves(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i)
      s += (i ? ", " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    out[path] = s + "]";
  } else {
    out[path] = j.is_string() ? j.get<std::string>() : j.dump();
  }
}

TEST(Cli, PrettyAndJsonCarryTheSameFacts) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"cover", kD3, "--source", "q1:0,0,0", "--target", "q3:0,0,1"},
        std::vector<std::string>{"bounded", kD3, "--source", "q1:0,0,0"},
        std::vector<std::string>{"dim", kD3}}) {
    auto pretty = call(args);
    args.push_back("--json");
    auto json = call(args);
    std::map<std::string, std::string> from_json, from_pretty;
    leaves(json.json(), "", from_json);
    std::istringstream lines(pretty.out);
    for (std::string line; std::getline(lines, line);) {
      auto cut = line.find(": ");
      from_pretty[line.substr(0, cut)] = line.substr(cut + 2);
    }
    for (auto* m : {&from_json, &from_pretty}) {
      m->erase("time_ms");
      m->erase("command");
    }
    EXPECT_EQ(from_json, from_pretty) << pretty.out;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"dim", "/nonexistent.vass"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"cover", kD3, "--source", "q1:0,0", "--target", "q3:0,0,1"}).code, 2);
  EXPECT_EQ(call({"cover", kD3, "--source", "q9:0,0,0", "--target", "q3:0,0,1"}).code, 2);
  EXPECT_EQ(call({"cover", kD3, "--source", "q1:-1,0,0", "--target", "q3:0,0,1"}).code, 2);
  EXPECT_EQ(call({"oracle", "km", kD3, "--source", "q1:0,0,0", "--budget", "2"}).code, 3);
  EXPECT_EQ(call({"gadget", "tower", "--n", "5"}).code, 3);
  EXPECT_EQ(call({"cover", kD3, "--source", "q1:0,0,0", "--target", "q3:0,0,1", "--cap", "5"}).code, 0);
}

TEST(Cli, ErrorReportInJson) {
  auto r = call({"dim", "/nonexistent.vass", "--json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["status"], "error");
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ZConfigurationsOnlyForZreach) {
  auto r = call({"zreach", kD3, "--source", "q1:0,0,0", "--target", "q3:-1,0,1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["facts"]["reachable"], true);
  EXPECT_EQ(call({"bounded", kD3, "--source", "q1:-1,0,0"}).code, 2);
  EXPECT_EQ(call({"bounded", kD3, "--source", "q1:-1,0,0", "--integer"}).code, 0);
}

TEST(Cli, OtherSubcommandsRun) {
  const std::vector<std::vector<std::string>> cases{
      {"simub", kD3, "--source", "q1:0,0,0", "--state", "q3", "--G", "1"},
      {"nopump", kD3, "--source", "q1:0,0,0", "--G", "1"},
      {"classify", kD3, "--vector", "3,1,5", "--C", "4"},
      {"classify", kD3, "--vector", "3,1,5", "--Cvec", "4,4,6"},
      {"oracle", "bfs", kD3, "--source", "q1:0,0,0", "--box", "8,4,2"},
      {"oracle", "backward", kD3, "--target", "q3:0,0,1", "--source", "q1:0,0,0"},
      {"oracle", "km", kD3, "--source", "q1:0,0,0", "--dump"},
      {"gadget", "ztest"},
      {"gadget", "amplifier"},
      {"gadget", "old-amplifier"},
      {"gadget", "tower", "--n", "1"}};
  for (auto args : cases) {
    args.push_back("--json");
    auto r = call(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_EQ(r.json()["status"], "ok");
  }
  EXPECT_EQ(call({"classify", kD3, "--vector", "3,1,5"}).code, 2);
  EXPECT_EQ(call({"classify", kD3, "--vector", "3,1,5", "--Cvec", "6,4,4"}).code, 2);
}

TEST(Cli, GadgetOutputFiles) {
  auto dir = scratch("gadget");
  fs::create_directories(dir);
  auto r = call({"gadget", "tower", "--n", "1", "--out", (dir / "tower").string(), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["facts"]["g_scc"], 4);
  auto v = parse_vass(slurp(dir / "tower.vass"));
  EXPECT_EQ(geometry::scc_dimension(v), 4u);
  EXPECT_FALSE(slurp(dir / "tower.roles").empty());
  fs::remove_all(dir);
}

TEST(Corpus, SameSeedSameBytes) {
  auto a = scratch("a"), b = scratch("b");
  RandomSpec spec;
  gen_corpus(9, {5, 3, 3}, spec, a);
  gen_corpus(9, {5, 3, 3}, spec, b);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++files;
    EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << e.path();
  }
  EXPECT_EQ(files, 12u);  // 11 instances + manifest
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Corpus, SccOneFamilyVerifies) {
  auto dir = scratch("scc1");
  auto entries = gen_corpus(4, {0, 20, 0}, RandomSpec{}, dir);
  ASSERT_EQ(entries.size(), 20u);
  for (const auto& e : entries) EXPECT_EQ(geometry::scc_dimension(parse_vass(slurp(dir / e.file))), 1u);
  fs::remove_all(dir);
}

TEST(Corpus, EmptyCountsGiveEmptyDirectory) {
  auto dir = scratch("empty");
  EXPECT_TRUE(gen_corpus(1, {}, RandomSpec{}, dir).empty());
  ASSERT_TRUE(fs::is_directory(dir));
  EXPECT_TRUE(fs::is_empty(dir));
  fs::remove_all(dir);
}

TEST(Corpus, CliGenHonoursSeed) {
  auto a = scratch("gen_a"), b = scratch("gen_b");
  EXPECT_EQ(call({"gen", "--out", a.string(), "--count", "4", "--seed", "3"}).code, 0);
  EXPECT_EQ(call({"--seed", "3", "gen", "--out", b.string(), "--count", "4"}).code, 0);
  EXPECT_EQ(slurp(a / "manifest.tsv"), slurp(b / "manifest.tsv"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(ConfigLiteral, Parsing) {
  auto v = doubling_chain(2);
  EXPECT_EQ(parse_config(v, "q2:-1,4", true), (ZConfiguration{1, {-1, 4}}));
  EXPECT_THROW(parse_config(v, "q2:-1,4", false), InputError);
  EXPECT_THROW(parse_config(v, "q2", true), InputError);
  EXPECT_THROW(parse_config(v, "q2:1,,2", true), InputError);
  EXPECT_THROW(parse_config(v, "q2:1,x", true), InputError);
  EXPECT_EQ(parse_int_list(""), IntVec{});
}

TEST(Report, DigestIsFnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace geodim::cli
