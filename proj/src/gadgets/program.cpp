// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cctype>
#include <set>
#include <sstream>

#include "geodim/errors.hpp"
#include "geodim/gadgets.hpp"

namespace geodim::gadgets {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

const std::set<std::string, std::less<>> kKeywords{"counter", "copy", "triple", "guards", "add",
                                                   "loop",    "end",  "ztest",  "using"};

bool is_keyword(std::string_view s) { return kKeywords.count(s) > 0; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
      out.push_back({std::string(text.substr(start, i - start)), line});
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  CounterProgram run() {
    CounterProgram p;
    while (!done()) {
      const auto& tok = peek();
      if (tok.text == "counter") {
        next();
        for (auto& n : names()) declare(p, n);
      } else if (tok.text == "copy") {
        next();
        auto ns = names();
        if (ns.size() < 2) throw ParseError(tok.line, "copy needs a primary and at least one mirror");
        for (std::size_t k = 1; k < ns.size(); ++k) p.copies.emplace_back(ns[0], ns[k]);
      } else if (tok.text == "triple") {
        next();
        TripleDecl t;
        auto ns = names();
        if (ns.size() != 3) throw ParseError(tok.line, "triple needs exactly three counters");
        t.bound = ns[0];
        t.budget = ns[1];
        t.sensor = ns[2];
        expect("guards");
        t.guards = names();
        if (t.guards.empty()) throw ParseError(tok.line, "triple needs at least one guard");
        p.triples.push_back(std::move(t));
      } else {
        p.body.push_back(instr());
      }
    }
    check(p);
    return p;
  }

 private:
  bool done() const { return pos_ >= toks_.size(); }
  const Token& peek() const { return toks_[pos_]; }
  std::size_t line() const { return done() ? (toks_.empty() ? 1 : toks_.back().line) : peek().line; }
  Token next() {
    if (done()) throw ParseError(line(), "unexpected end of program");
    return toks_[pos_++];
  }
  void expect(std::string_view kw) {
    auto t = next();
    if (t.text != kw) throw ParseError(t.line, "expected '" + std::string(kw) + "', got '" + t.text + "'");
  }
  std::string name() {
    auto t = next();
    if (is_keyword(t.text)) throw ParseError(t.line, "expected a counter name, got '" + t.text + "'");
    return t.text;
  }
  std::vector<std::string> names() {
    std::vector<std::string> out;
    while (!done() && !is_keyword(peek().text)) out.push_back(next().text);
    return out;
  }
  void declare(CounterProgram& p, const std::string& n) {
    for (const auto& c : p.counters)
      if (c == n) throw ParseError(line(), "counter '" + n + "' declared twice");
    p.counters.push_back(n);
  }

  Instr instr() {
    auto tok = next();
    Instr in;
    in.line = tok.line;
    if (tok.text == "add") {
      in.kind = Instr::Kind::add;
      while (!done() && !is_keyword(peek().text)) {
        auto n = next();
        if (done()) throw ParseError(n.line, "add: missing constant for '" + n.text + "'");
        auto k = next();
        try {
          in.deltas.emplace_back(n.text, parse_bigint(k.text));
        } catch (const InputError&) {
          throw ParseError(k.line, "add: bad constant '" + k.text + "'");
        }
      }
      if (in.deltas.empty()) throw ParseError(tok.line, "add without updates");
    } else if (tok.text == "loop") {
      in.kind = Instr::Kind::loop;
      while (true) {
        if (done()) throw ParseError(line(), "loop without end");
        if (peek().text == "end") {
          next();
          break;
        }
        in.body.push_back(instr());
      }
      if (in.body.empty()) throw ParseError(tok.line, "empty loop");
    } else if (tok.text == "ztest") {
      in.kind = Instr::Kind::ztest;
      in.counter = name();
      expect("using");
      in.triple = name();
    } else {
      throw ParseError(tok.line, "unknown instruction '" + tok.text + "'");
    }
    return in;
  }

  static void check_names(const CounterProgram& p, const Instr& in) {
    auto known = [&](const std::string& n) {
      for (const auto& c : p.counters)
        if (c == n) return true;
      return false;
    };
    if (in.kind == Instr::Kind::add) {
      for (const auto& [n, k] : in.deltas)
        if (!known(n)) throw ParseError(in.line, "undeclared counter '" + n + "'");
    } else if (in.kind == Instr::Kind::ztest) {
      const TripleDecl* t = nullptr;
      for (const auto& tr : p.triples)
        if (tr.bound == in.triple) t = &tr;
      if (!t) throw ParseError(in.line, "unknown triple '" + in.triple + "'");
      bool guarded = false;
      for (const auto& g : t->guards) guarded = guarded || g == in.counter;
      if (!guarded) throw ParseError(in.line, "'" + in.counter + "' is not guarded by triple '" + in.triple + "'");
    } else {
      for (const auto& b : in.body) check_names(p, b);
    }
  }

  void check(const CounterProgram& p) const {
    auto known = [&](const std::string& n) {
      for (const auto& c : p.counters)
        if (c == n) return true;
      return false;
    };
    for (const auto& [a, b] : p.copies)
      if (!known(a) || !known(b)) throw ParseError(1, "copy of undeclared counter");
    for (const auto& t : p.triples) {
      for (const auto* n : {&t.bound, &t.budget, &t.sensor})
        if (!known(*n)) throw ParseError(1, "triple uses undeclared counter '" + *n + "'");
      for (const auto& g : t.guards)
        if (!known(g)) throw ParseError(1, "triple guards undeclared counter '" + g + "'");
    }
    for (const auto& in : p.body) check_names(p, in);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void emit(std::ostringstream& out, const Instr& in, int depth) {
  const std::string pad(2 * depth, ' ');
  switch (in.kind) {
    case Instr::Kind::add:
      out << pad << "add";
      for (const auto& [n, k] : in.deltas) out << ' ' << n << ' ' << k.get_str();
      out << '\n';
      break;
    case Instr::Kind::ztest:
      out << pad << "ztest " << in.counter << " using " << in.triple << '\n';
      break;
    case Instr::Kind::loop:
      if (in.body.size() == 1 && in.body[0].kind == Instr::Kind::add) {
        out << pad << "loop add";
        for (const auto& [n, k] : in.body[0].deltas) out << ' ' << n << ' ' << k.get_str();
        out << " end\n";
      } else {
        out << pad << "loop\n";
        for (const auto& b : in.body) emit(out, b, depth + 1);
        out << pad << "end\n";
      }
      break;
  }
}

}  // namespace

CounterProgram parse_program(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string to_text(const CounterProgram& p) {
  std::ostringstream out;
  if (!p.counters.empty()) {
    out << "counter";
    for (const auto& c : p.counters) out << ' ' << c;
    out << '\n';
  }
  for (const auto& [a, b] : p.copies) out << "copy " << a << ' ' << b << '\n';
  for (const auto& t : p.triples) {
    out << "triple " << t.bound << ' ' << t.budget << ' ' << t.sensor << " guards";
    for (const auto& g : t.guards) out << ' ' << g;
    out << '\n';
  }
  for (const auto& in : p.body) emit(out, in, 0);
  return out.str();
}

CounterProgram strip_copies(CounterProgram p) {
  p.copies.clear();
  return p;
}

}  // namespace geodim::gadgets
