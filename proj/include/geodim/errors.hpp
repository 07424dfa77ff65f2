// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geodim {

// Malformed user input: bad text, wrong arity, unknown names. CLI exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A configured ceiling (node budget, value width, search cap) was hit. CLI exit 3.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Run semantics violations raised by step().
class Underflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StateMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geodim
