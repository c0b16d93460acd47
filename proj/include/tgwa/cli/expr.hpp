#pragma once

#include <map>
#include <string>
#include <string_view>

#include "tgwa/exact/errors.hpp"
#include "tgwa/tgwc/datum.hpp"
#include "tgwa/tgwc/element.hpp"

namespace tgwa::cli {

// 1-based position of a token in the input document.
struct Position {
  int line = 1;
  int column = 1;
};

struct ParseError : Error {
  ParseError(const std::string& message, Position at, std::string token);
  Position at;
  std::string token;
  std::string message;
};

// Declared names. Generators Xp<k>/Xm<k> are recognized when datum is set.
struct Scope {
  std::map<std::string, Symbol> symbols;
  const Tgwd* datum = nullptr;
};

bool is_generator_name(std::string_view name);

// Expressions with + - * / ^ (integer exponents), parentheses, integers and the
// literal i. Ring expressions reject generators.
Ratfun parse_ratfun(std::string_view text, const Scope& scope, Position origin = {});
// TGWC expressions: products of coefficients and generators, multiplied in the
// free algebra with coefficients moved left by sigma.
TgwcElement parse_tgwc(std::string_view text, const Scope& scope, Position origin = {});

}  // namespace tgwa::cli
