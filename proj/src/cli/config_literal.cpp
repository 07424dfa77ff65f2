// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/cli.hpp"
#include "geodim/errors.hpp"

namespace geodim::cli {

IntVec parse_int_list(std::string_view text) {
  IntVec out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (piece.empty()) throw InputError("empty entry in vector literal '" + std::string(text) + "'");
    out.push_back(parse_bigint(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

ZConfiguration parse_config(const Vass& v, std::string_view text, bool allow_negative) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos)
    throw InputError("configuration '" + std::string(text) + "' must look like state:v1,...,vd");
  const auto name = text.substr(0, colon);
  const auto q = v.find_state(name);
  if (!q) throw InputError("unknown state '" + std::string(name) + "'");
  ZConfiguration c{*q, parse_int_list(text.substr(colon + 1))};
  if (c.values.size() != v.dim())
    throw InputError("configuration '" + std::string(text) + "' has " + std::to_string(c.values.size()) +
                     " entries, expected " + std::to_string(v.dim()));
  if (!allow_negative && !all_nonnegative(c.values))
    throw InputError("configuration '" + std::string(text) + "' has a negative entry");
  return c;
}

Configuration parse_nat_config(const Vass& v, std::string_view text) {
  auto z = parse_config(v, text, false);
  return Configuration(z.state, std::move(z.values));
}

}  // namespace geodim::cli
