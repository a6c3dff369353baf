#pragma once

// Recursive-descent parser for the expression grammar (see docs/grammar.ebnf).
//
//   expr    = term { ("+" | "-") term }
//   term    = unary { ("*" | "/") unary }
//   unary   = "-" unary | power
//   power   = atom [ "^" unary ]            (right associative)
//   atom    = number | ident | ident "(" expr { "," expr } ")" | "(" expr ")"
//
// Unary minus binds looser than "^", so "-2^2" parses as -(2^2).
// Identifiers are case-sensitive ASCII: t, s, x1..xn, u1..um, pi, e and the
// function names sin cos abs exp ln sqrt min max.

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "indef/exprlang/ast.hpp"

namespace indef::exprlang {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string message, std::set<std::string> expected);

  std::size_t offset;
  std::set<std::string> expected;  // empty for semantic errors
};

/// Parses `source` under the declared dimensions. Throws ParseError with the
/// byte offset of the failure and, for syntax errors, the expected-token set.
Expr parse(std::string_view source, const Dims& dims);

}  // namespace indef::exprlang
