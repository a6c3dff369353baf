#pragma once

#include <string>

#include "indef/exprlang/ast.hpp"

namespace indef::exprlang {

/// Canonical fully parenthesized form: every unary/binary node is wrapped in
/// parentheses, e.g. Div(Neg(2), Add(1,t)) -> "((-2)/(1+t))". Reparsing the
/// output yields a structurally identical tree.
std::string print(const Expr& e);

/// Constant formatting used by print(): shortest decimal that parses back to
/// the same double.
std::string format_double(double v);

}  // namespace indef::exprlang
