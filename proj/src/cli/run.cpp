// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "geodim/bounds.hpp"
#include "geodim/cli.hpp"
#include "geodim/errors.hpp"
#include "geodim/gadgets.hpp"
#include "geodim/oracles.hpp"

namespace geodim::cli {
namespace {

// A small zero-test region: x is bounded by b and tested for zero once.
constexpr const char* kZeroTestDemo = R"(counter x b c d
triple b c d guards x
loop add x 1 end
loop add x -1 end
ztest x using b
)";

struct Globals {
  std::string cap;
  std::size_t budget = 0;  // 0: module default
  bool json = false;
  std::uint64_t seed = 1;
};

class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {}

  Vass load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    inputs_ += buf.str();
    return parse_vass(buf.str());
  }

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    inputs_ += buf.str();
    return buf.str();
  }

  std::optional<BigInt> cap() const {
    if (g_.cap.empty()) return std::nullopt;
    auto c = parse_bigint(g_.cap);
    if (c < 0) throw InputError("--cap must be nonnegative");
    return c;
  }

  witness::DeciderOptions decider() const {
    witness::DeciderOptions o;
    o.cap = cap();
    if (g_.budget) o.node_budget = g_.budget;
    return o;
  }

  std::size_t budget_or(std::size_t fallback) const { return g_.budget ? g_.budget : fallback; }
  std::string digest() const { return inputs_.empty() ? "-" : fnv1a_hex(inputs_); }

 private:
  const Globals& g_;
  std::string inputs_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json gadget_facts(const gadgets::CompiledGadget& g, const std::string& out_prefix) {
  const auto cs = geometry::cycle_space(g.vass);
  Json ranks = Json::array();
  std::size_t max_rank = 0;
  for (const auto& s : cs.per_scc) {
    ranks.push_back(s.rank);
    max_rank = std::max(max_rank, s.rank);
  }
  Json j{{"states", g.vass.num_states()},
         {"transitions", g.vass.num_transitions()},
         {"counters", g.counters},
         {"triples", g.triples.size()},
         {"mirrors", g.mirrors.size()},
         {"g", cs.rank},
         {"g_scc", cs.scc_rank},
         {"scc_ranks", ranks},
         {"zero_test_invariant", gadgets::zero_test_invariant_holds(g)},
         {"mirrors_consistent", gadgets::mirrors_consistent(g)},
         {"segments_disjoint", gadgets::segments_in_disjoint_sccs(g)},
         {"source", to_string(g.vass, g.source.to_z())},
         {"target", to_string(g.vass, g.target.to_z())}};
  if (g.expected_gscc) j["expected_gscc"] = *g.expected_gscc;
  if (!out_prefix.empty()) {
    write_file(out_prefix + ".vass", serialize(g.vass));
    write_file(out_prefix + ".roles", g.role_map());
    j["written"] = {out_prefix + ".vass", out_prefix + ".roles"};
  }
  return j;
}

std::string echo(const std::vector<std::string>& args) {
  std::string s = "geodim";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  Globals g;
  CLI::App app{"geodim: geometric-dimension analyses of VASS", "geodim"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cap", g.cap, "override the default length or multiplicity cap");
  app.add_option("--budget", g.budget, "node budget of searches");
  app.add_flag("--json", g.json, "structured report");
  app.add_option("--seed", g.seed, "random seed (gen)");

  std::string file, source, target, state, Gstr = "1", vec, Cstr, Cvec, box, table = "all", program, machine,
                                                 outp, dir;
  std::size_t depth = 1000, stage = 1, n_stages = 1, count = 0, scc1 = 0, line = 0;
  std::uint64_t B = 2, C = 4, max_b = 3, max_c = 4, seed_b = 2, seed_c = 0;
  std::size_t max_len = 3;
  bool integer = false, shortest = false, dump = false, verify = false;
  std::uint64_t bd = 1, bn = 1, bg = 0;
  std::string bM = "0", bG = "0", bynorm = "0", bznorm = "0";
  RandomSpec rspec;

  auto need_file = [&](CLI::App* s) { s->add_option("file", file, "VASS file")->required(); };

  auto* dim = app.add_subcommand("dim", "cycle space, g and g_scc");
  need_file(dim);

  auto* cover = app.add_subcommand("cover", "coverability with a shortest witness");
  need_file(cover);
  cover->add_option("--source", source)->required();
  cover->add_option("--target", target)->required();

  auto* bounded = app.add_subcommand("bounded", "boundedness with a self-covering witness");
  need_file(bounded);
  bounded->add_option("--source", source)->required();
  bounded->add_flag("--integer", integer, "all counters integer: closed-walk search");

  auto* simub = app.add_subcommand("simub", "uniform cover of (G,...,G)");
  need_file(simub);
  simub->add_option("--source", source)->required();
  simub->add_option("--state", state)->required();
  simub->add_option("--G", Gstr)->required();

  auto* nopump = app.add_subcommand("nopump", "check the large-values-imply-pumping property");
  need_file(nopump);
  nopump->add_option("--source", source)->required();
  nopump->add_option("--G", Gstr)->required();

  auto* zr = app.add_subcommand("zreach", "reachability over the integers");
  need_file(zr);
  zr->add_option("--source", source)->required();
  zr->add_option("--target", target)->required();
  zr->add_flag("--shortest", shortest, "also run the breadth-first shortest Z-run search");

  auto* bnd = app.add_subcommand("bounds", "evaluate the bound recurrences");
  bnd->add_option("--d", bd)->required();
  bnd->add_option("--n", bn)->required();
  bnd->add_option("--M", bM)->required();
  bnd->add_option("--g", bg)->required();
  bnd->add_option("--G", bG);
  bnd->add_option("--ynorm", bynorm);
  bnd->add_option("--znorm", bznorm);
  bnd->add_option("--table", table, "cover|simub|bounded|zrun|closed|all");

  auto* cls = app.add_subcommand("classify", "C-small / C-thin classification");
  need_file(cls);
  cls->add_option("--vector", vec)->required();
  auto* oC = cls->add_option("--C", Cstr);
  auto* oCvec = cls->add_option("--Cvec", Cvec);
  oC->excludes(oCvec);

  auto* oracle = app.add_subcommand("oracle", "naive reference engines");
  oracle->require_subcommand(1);
  auto* obfs = oracle->add_subcommand("bfs", "boxed breadth-first reachability");
  need_file(obfs);
  obfs->add_option("--source", source)->required();
  obfs->add_option("--box", box)->required();
  obfs->add_option("--depth", depth);
  obfs->add_option("--target", target, "report the distance to cover it");
  auto* oback = oracle->add_subcommand("backward", "backward coverability");
  need_file(oback);
  oback->add_option("--target", target)->required();
  oback->add_option("--source", source, "membership query");
  auto* okm = oracle->add_subcommand("km", "Karp-Miller tree");
  need_file(okm);
  okm->add_option("--source", source)->required();
  okm->add_flag("--dump", dump, "print every node");

  auto* gad = app.add_subcommand("gadget", "compile the hardness gadgets");
  gad->require_subcommand(1);
  auto* gz = gad->add_subcommand("ztest", "zero-test region");
  gz->add_option("--program", program, "counter program file");
  gz->add_flag("--verify", verify, "exhaustive sensor check");
  gz->add_option("--max-b", max_b);
  gz->add_option("--max-c", max_c);
  gz->add_option("--max-len", max_len);
  gz->add_option("--out", outp, "write PREFIX.vass and PREFIX.roles");
  auto* ga = gad->add_subcommand("amplifier", "one amplifier stage");
  ga->add_option("--stage", stage);
  ga->add_flag("--verify", verify, "explore the stage from (B, C, BC)");
  ga->add_option("--B", B);
  ga->add_option("--C", C);
  ga->add_option("--out", outp);
  auto* gt = gad->add_subcommand("tower", "seed, amplifiers, machine, drains");
  gt->add_option("--n", n_stages);
  gt->add_option("--machine", machine, "counter program of the simulated machine");
  gt->add_option("--seed-b", seed_b);
  gt->add_option("--seed-c", seed_c, "fix C instead of pumping it");
  gt->add_option("--out", outp);
  auto* go = gad->add_subcommand("old-amplifier", "single-triple amplifier");
  go->add_option("--out", outp);

  auto* gen = app.add_subcommand("gen", "random corpus");
  gen->add_option("--out", dir)->required();
  gen->add_option("--count", count, "unconstrained instances");
  gen->add_option("--scc1", scc1, "line instances with g_scc = 1");
  gen->add_option("--line", line, "line-of-SCC instances");
  gen->add_option("--min-d", rspec.min_d);
  gen->add_option("--max-d", rspec.max_d);
  gen->add_option("--min-n", rspec.min_n);
  gen->add_option("--max-n", rspec.max_n);
  gen->add_option("--min-t", rspec.min_t);
  gen->add_option("--max-t", rspec.max_t);
  gen->add_option("--M", rspec.M);

  Report report;
  report.command = echo(args);
  auto emit = [&](int code) {
    report.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out << (g.json ? report.to_json().dump(2) + "\n" : report.to_pretty());
    return code;
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Session ses(g);
  try {
    auto& f = report.facts;
    auto inconclusive = [&](bool flag) {
      if (flag) report.status = "inconclusive";
    };
    if (*dim) {
      auto v = ses.load(file);
      f = dim_facts(v, geometry::cycle_space(v));
    } else if (*cover) {
      auto v = ses.load(file);
      auto r = witness::decide_coverability(v, parse_nat_config(v, source), parse_nat_config(v, target),
                                            ses.decider());
      f = cover_facts(v, r);
      inconclusive(r.outcome == witness::Outcome::inconclusive);
    } else if (*bounded) {
      auto v = ses.load(file);
      if (integer) {
        witness::BaseCaseOptions o;
        o.node_budget = ses.budget_or(o.node_budget);
        auto w = witness::base_case_unbounded_ilp(v, parse_config(v, source, true), o);
        f["verdict"] = w ? "unbounded" : "bounded";
        f["semantics"] = "Z";
        if (w) {
          f["witness"] = run_json(v, w->run);
          f["witness"]["split"] = w->split;
        }
      } else {
        auto r = witness::decide_boundedness(v, parse_nat_config(v, source), ses.decider());
        f = boundedness_facts(v, r);
        inconclusive(r.verdict == witness::BoundednessVerdict::inconclusive);
      }
    } else if (*simub) {
      auto v = ses.load(file);
      auto q = v.find_state(state);
      if (!q) throw InputError("unknown state '" + state + "'");
      auto r = witness::decide_uniform_cover(v, parse_nat_config(v, source), *q, parse_bigint(Gstr),
                                             ses.decider());
      f = cover_facts(v, r);
      inconclusive(r.outcome == witness::Outcome::inconclusive);
    } else if (*nopump) {
      auto v = ses.load(file);
      auto r = witness::check_no_pump_property(v, parse_nat_config(v, source), parse_bigint(Gstr), ses.decider());
      f = nopump_facts(v, r);
      inconclusive(r.status == witness::NoPumpStatus::inconclusive);
    } else if (*zr) {
      auto v = ses.load(file);
      auto s = parse_config(v, source, true), t = parse_config(v, target, true);
      zreach::ZReachOptions o;
      o.cap = ses.cap();
      o.node_budget = ses.budget_or(o.node_budget);
      auto r = zreach::decide_zreach(v, s, t, o);
      f["reachable"] = r.run.has_value();
      f["supports_tried"] = r.supports_tried;
      if (r.flow) {
        Json mult = Json::array();
        for (const auto& m : r.flow->multiplicities) mult.push_back(big_json(m));
        f["flow"] = {{"support", r.flow->support}, {"multiplicities", mult}, {"total", big_json(r.flow->total())}};
      }
      if (r.run) f["run"] = run_json(v, *r.run);
      const auto norm = zreach::zrun_norm(v, s, t);
      f["zrun_norm"] = big_json(norm);
      if (shortest) {
        auto sr = zreach::shortest_zrun(v, s, t, ses.decider());
        Json sj{{"outcome", witness::to_string(sr.outcome)}, {"cap", bound_json(sr.cap)},
                {"stats", stats_json(sr.stats)}};
        if (sr.run) sj["run"] = run_json(v, *sr.run);
        f["shortest"] = sj;
        inconclusive(sr.outcome == witness::Outcome::inconclusive);
      } else {
        auto p = witness::params_of(v);
        p.znorm = norm;
        f["zrun_cap"] = bound_json(witness::bounds(p).zrun);
      }
    } else if (*bnd) {
      witness::BoundParams p{bd, bn, parse_bigint(bM), bg, parse_bigint(bG), parse_bigint(bynorm),
                             parse_bigint(bznorm)};
      f = bounds_facts(witness::bounds(p), table);
    } else if (*cls) {
      auto v = ses.load(file);
      const auto cs = geometry::cycle_space(v);
      const auto x = parse_int_list(vec);
      if (x.size() != v.dim()) throw InputError("--vector must have " + std::to_string(v.dim()) + " entries");
      if (!Cstr.empty()) {
        f = classification_facts(geometry::classify_small(cs, x, parse_bigint(Cstr)));
      } else if (!Cvec.empty()) {
        f = classification_facts(geometry::classify_thin(cs, x, parse_int_list(Cvec)));
      } else {
        throw InputError("classify needs --C or --Cvec");
      }
      f["g"] = cs.rank;
    } else if (*obfs) {
      auto v = ses.load(file);
      const auto bx = parse_int_list(box);
      if (bx.size() != v.dim()) throw InputError("--box must have " + std::to_string(v.dim()) + " entries");
      auto r = oracles::bfs_reach(v, parse_nat_config(v, source), bx, depth);
      f["reached"] = r.configs.size();
      f["max_distance"] = r.distance.empty() ? 0 : r.distance.back();
      f["truncated"] = r.truncated;
      if (!target.empty()) {
        auto d = r.distance_to_cover(parse_config(v, target, false));
        f["cover_distance"] = d ? Json(*d) : Json(nullptr);
      }
    } else if (*oback) {
      auto v = ses.load(file);
      auto basis = oracles::backward_coverability(v, parse_nat_config(v, target), ses.budget_or(1000000));
      Json per = Json::object();
      for (StateId q = 0; q < v.num_states(); ++q) {
        Json mins = Json::array();
        for (const auto& m : basis.minimal[q]) mins.push_back(to_string(m));
        per[v.state_name(q)] = mins;
      }
      f["minimal"] = per;
      f["iterations"] = basis.iterations;
      if (!source.empty()) f["source_covers"] = basis.contains(parse_nat_config(v, source));
    } else if (*okm) {
      auto v = ses.load(file);
      auto tree = oracles::karp_miller(v, parse_nat_config(v, source), ses.budget_or(1000000));
      f["nodes"] = tree.nodes.size();
      f["truncated"] = tree.truncated;
      if (tree.truncated) {
        report.status = "inconclusive";
      } else {
        f["bounded"] = tree.bounded();
        Json per = Json::array();
        for (std::size_t i = 0; i < v.dim(); ++i) per.push_back(tree.counter_bounded(i));
        f["counter_bounded"] = per;
      }
      if (dump) f["dump"] = tree.dump(v);
    } else if (*gz) {
      auto p = gadgets::parse_program(program.empty() ? std::string(kZeroTestDemo) : ses.read(program));
      f = gadget_facts(gadgets::compile(p, "ztest"), outp);
      if (verify) {
        auto c = gadgets::verify_zero_test(max_b, max_c, max_len);
        f["verify"] = {{"schedules", c.schedules}, {"instances", c.instances}, {"mismatches", c.mismatches}};
        if (c.mismatches) f["verify"]["first_mismatch"] = c.first_mismatch;
      }
    } else if (*ga) {
      auto p = gadgets::make_amplifier(gadgets::amplifier_io(stage));
      f = gadget_facts(gadgets::compile(p, "amplifier" + std::to_string(stage)), outp);
      if (verify) {
        auto c = gadgets::verify_amplifier(B, C, ses.budget_or(5000000));
        f["verify"] = {{"B", c.B},
                       {"C", c.C},
                       {"reachable", c.reachable},
                       {"accepting", c.accepting},
                       {"factorized", c.factorized},
                       {"exact_existence", c.exact_existence},
                       {"wrong", c.wrong},
                       {"truncated", c.truncated}};
        if (c.wrong) f["verify"]["first_wrong"] = c.first_wrong;
        inconclusive(c.truncated);
      }
    } else if (*gt) {
      gadgets::TowerOptions o;
      o.seed_b = seed_b;
      if (seed_c) o.seed_c = seed_c;
      auto m = machine.empty() ? gadgets::trivial_machine() : gadgets::parse_program(ses.read(machine));
      f = gadget_facts(gadgets::build_tower_instance(n_stages, m, o), outp);
    } else if (*go) {
      auto p = gadgets::make_old_amplifier({"b0", "c0", "d0"}, {"b1", "c1", "d1"}, "t1");
      f = gadget_facts(gadgets::compile(p, "old_amplifier"), outp);
    } else if (*gen) {
      auto entries = gen_corpus(g.seed, {count, scc1, line}, rspec, dir);
      Json files = Json::array();
      for (const auto& e : entries)
        files.push_back({{"file", e.file}, {"family", e.family}, {"d", e.d}, {"n", e.n},
                         {"M", big_json(e.M)}, {"g", e.g}, {"g_scc", e.g_scc}});
      f["seed"] = g.seed;
      f["dir"] = dir;
      f["files"] = files;
    }
    report.digest = ses.digest();
    return emit(report.status == "ok" ? 0 : 3);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    report.digest = ses.digest();
    report.status = "error";
    report.facts = {{"error", e.what()}};
    if (g.json) emit(2);
    return 2;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    report.digest = ses.digest();
    report.status = "inconclusive";
    report.facts["limit"] = e.what();
    return emit(3);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace geodim::cli
