#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include "indef/exprlang/ast.hpp"

namespace indef::exprlang {

/// Variable values for one evaluation point. Unbound slots default to empty;
/// referencing an unbound variable throws EvalError.
struct Binding {
  double t = 0.0;
  double s = 0.0;
  std::span<const double> x{};
  std::span<const double> u{};
  bool has_t = true;
  bool has_s = true;
};

class EvalError : public std::runtime_error {
 public:
  EvalError(std::string message, std::string subexpr, std::size_t offset);

  std::string subexpr;  // canonical print of the offending sub-expression
  std::size_t offset;
};

/// Checked IEEE double evaluation by direct recursion over the tree. This is
/// the reference path: the batch kernels must agree with it bit for bit.
/// Domain errors (division by zero, ln of non-positive, sqrt of negative,
/// 0^negative, overflow to non-finite) throw EvalError naming the offending
/// sub-expression. 0^0 evaluates to 1.
double eval(const Expr& e, const Binding& binding);

/// min/max follow the SIMD select semantics: min(a,b) = a < b ? a : b.
double scalar_min(double a, double b);
double scalar_max(double a, double b);

}  // namespace indef::exprlang
