// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "geodim/cli.hpp"
#include "geodim/errors.hpp"

namespace geodim::cli {
namespace {

void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      out << path << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ", ";
        out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

Json bound_list(const std::vector<witness::BoundValue>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(bound_json(x));
  return a;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["input_digest"] = digest;
  j["status"] = status;
  j["facts"] = facts;
  j["time_ms"] = time_ms;
  return j;
}

std::string Report::to_pretty() const {
  std::ostringstream out;
  flatten(to_json(), "", out);
  return out.str();
}

Json big_json(const BigInt& x) {
  if (auto v = to_int64(x)) return *v;
  return to_string(x);
}

Json bound_json(const witness::BoundValue& b) {
  if (b.exact()) return big_json(b.value());
  return b.to_string();
}

Json params_json(const witness::BoundParams& p) {
  return {{"d", p.d}, {"n", p.n}, {"M", big_json(p.M)}, {"g", p.g},
          {"G", big_json(p.G)}, {"ynorm", big_json(p.ynorm)}, {"znorm", big_json(p.znorm)}};
}

Json stats_json(const witness::SearchStats& s) {
  return {{"nodes_expanded", s.nodes_expanded},
          {"nodes_stored", s.nodes_stored},
          {"depth_reached", s.depth_reached},
          {"accel_nodes", s.accel_nodes}};
}

Json run_json(const Vass& v, const Run& r) {
  Json steps = Json::array(), trace = Json::array();
  for (auto t : r.steps) steps.push_back(t);
  for (const auto& c : r.trace) trace.push_back(to_string(v, c));
  return {{"length", r.length()},
          {"semantics", r.semantics == Semantics::natural ? "N" : "Z"},
          {"steps", steps},
          {"trace", trace}};
}

Json dim_facts(const Vass& v, const geometry::CycleSpace& cs) {
  Json per = Json::array();
  for (const auto& s : cs.per_scc) {
    Json states = Json::array();
    for (auto q : cs.sccs.components[s.component]) states.push_back(v.state_name(q));
    per.push_back({{"states", states}, {"rank", s.rank}});
  }
  Json basis = Json::array();
  for (const auto& row : cs.basis.basis.data()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(geometry::to_string(x));
    basis.push_back(r);
  }
  return {{"d", v.dim()},
          {"n", v.num_states()},
          {"transitions", v.num_transitions()},
          {"M", big_json(v.max_norm())},
          {"g", cs.rank},
          {"g_scc", cs.scc_rank},
          {"line", cs.sccs.line},
          {"per_scc", per},
          {"clean_basis", basis},
          {"distinguished", cs.basis.distinguished}};
}

Json cover_facts(const Vass& v, const witness::CoverResult& r) {
  Json j{{"outcome", witness::to_string(r.outcome)},
         {"certified", r.certified},
         {"accelerated", r.accelerated},
         {"cap", bound_json(r.cap)},
         {"cap_is_default", r.cap_is_default},
         {"params", params_json(r.params)}};
  if (r.witness) j["witness"] = run_json(v, r.witness->run);
  j["stats"] = stats_json(r.stats);
  return j;
}

Json boundedness_facts(const Vass& v, const witness::BoundednessResult& r) {
  Json j{{"verdict", witness::to_string(r.verdict)},
         {"certified", r.certified},
         {"accelerated", r.accelerated},
         {"cap", bound_json(r.cap)},
         {"cap_is_default", r.cap_is_default},
         {"params", params_json(r.params)}};
  if (r.witness) {
    j["witness"] = run_json(v, r.witness->run);
    j["witness"]["split"] = r.witness->split;
  }
  j["stats"] = stats_json(r.stats);
  return j;
}

Json nopump_facts(const Vass& v, const witness::NoPumpReport& r) {
  Json premise = Json::array(), checks = Json::array();
  for (auto q : r.premise_states) premise.push_back(v.state_name(q));
  for (const auto& c : r.checks) {
    Json cj{{"state", v.state_name(c.state)}, {"outcome", witness::to_string(c.cover.outcome)}};
    if (c.cover.witness) cj["witness_length"] = c.cover.witness->length();
    checks.push_back(cj);
  }
  return {{"status", witness::to_string(r.status)},
          {"H", bound_json(r.H)},
          {"L", bound_json(r.L)},
          {"params", params_json(r.params)},
          {"premise_states", premise},
          {"premise_nodes", r.premise_nodes},
          {"checks", checks}};
}

Json classification_facts(const geometry::Classification& c) {
  Json vals = Json::array();
  for (const auto& u : c.profile.sorted_values) vals.push_back(big_json(u));
  Json j{{"verdict", geometry::to_string(c.verdict)},
         {"distinguished", c.profile.distinguished},
         {"sorted_values", vals}};
  if (c.witness) {
    Json basis = Json::array();
    for (const auto& row : c.witness->basis.data()) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(geometry::to_string(x));
      basis.push_back(r);
    }
    j["witness_basis"] = basis;
  }
  return j;
}

Json bounds_facts(const witness::BoundTable& t, std::string_view table) {
  const bool all = table == "all";
  if (!all && table != "cover" && table != "simub" && table != "bounded" && table != "zrun" && table != "closed")
    throw InputError("unknown bound table '" + std::string(table) + "'");
  Json j{{"params", params_json(t.params)}, {"ceiling_bits", t.ceiling_bits}};
  if (all || table == "cover") j["cover"] = {{"L", bound_list(t.cover_L)}, {"K", bound_list(t.cover_K)}};
  if (all || table == "simub")
    j["simub"] = {{"C", bound_list(t.simub_C)}, {"H", bound_list(t.simub_H)}, {"L", bound_list(t.simub_L)}};
  if (all || table == "bounded") j["bounded"] = {{"D", bound_json(t.D)}, {"L", bound_list(t.bounded_L)}};
  if (all || table == "zrun") j["zrun"] = bound_json(t.zrun);
  if (all || table == "closed")
    j["closed"] = {{"cover_A", bound_json(t.cover_A)},     {"cover_A_f", bound_json(t.cover_A_f)},
                   {"cover_A_h", bound_json(t.cover_A_h)}, {"simub_A", bound_json(t.simub_A)},
                   {"simub_A_f", bound_json(t.simub_A_f)}, {"bounded_C", bound_json(t.bounded_C)},
                   {"bounded_C_f", bound_json(t.bounded_C_f)}};
  return j;
}

}  // namespace geodim::cli
