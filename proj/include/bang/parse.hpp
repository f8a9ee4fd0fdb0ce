#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bang/term.hpp"

namespace bang {

// Surface grammar (whitespace-insensitive):
//   term := var | "\" var "." term | term term (left-assoc) | "!" term
//         | "#" opname "(" term ("," term)* ")" | "(" term ")" | "[]"
// "!" binds tighter than application; an abstraction body extends as far
// right as possible. oplus is spelled #oplus.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " at offset " + std::to_string(at)), pos(at) {}
};

TermPtr parse(std::string_view src);

// Minimal-parenthesis printer; parse(print(t)) is alpha-equal to t.
std::string print(const TermPtr& t);

}  // namespace bang
