#include "indef/exprlang/eval.hpp"

#include <cmath>

#include "indef/exprlang/print.hpp"

namespace indef::exprlang {

EvalError::EvalError(std::string message, std::string sub, std::size_t off)
    : std::runtime_error(message + " in '" + sub + "'"),
      subexpr(std::move(sub)),
      offset(off) {}

double scalar_min(double a, double b) { return a < b ? a : b; }
double scalar_max(double a, double b) { return a > b ? a : b; }

namespace {

[[noreturn]] void domain_error(const NodePtr& n, const std::string& what) {
  throw EvalError("domain error: " + what, print(Expr(n)), n->offset);
}

double eval_node(const NodePtr& n, const Binding& bind) {
  switch (n->kind) {
    case NodeKind::constant:
      return n->value;
    case NodeKind::named_const:
      return named_const_value(n->named);
    case NodeKind::variable:
      switch (n->var) {
        case VarKind::time:
          if (!bind.has_t) domain_error(n, "unbound variable t");
          return bind.t;
        case VarKind::comp_arg:
          if (!bind.has_s) domain_error(n, "unbound variable s");
          return bind.s;
        case VarKind::state:
          if (n->index < 1 || n->index > (int)bind.x.size())
            domain_error(n, "unbound state variable");
          return bind.x[n->index - 1];
        case VarKind::input:
          if (n->index < 1 || n->index > (int)bind.u.size())
            domain_error(n, "unbound input variable");
          return bind.u[n->index - 1];
      }
      return 0.0;
    case NodeKind::unary:
      return -eval_node(n->a, bind);
    case NodeKind::binary: {
      double a = eval_node(n->a, bind);
      double b = eval_node(n->b, bind);
      switch (n->bop) {
        case BinaryOp::add: return a + b;
        case BinaryOp::sub: return a - b;
        case BinaryOp::mul: return a * b;
        case BinaryOp::div:
          if (b == 0.0) domain_error(n, "division by zero");
          return a / b;
        case BinaryOp::pow: {
          if (a == 0.0 && b < 0.0) domain_error(n, "0^negative");
          double r = std::pow(a, b);  // pow(0,0) == 1 per IEC 60559
          if (!std::isfinite(r) && std::isfinite(a) && std::isfinite(b))
            domain_error(n, "non-finite power result");
          return r;
        }
      }
      return 0.0;
    }
    case NodeKind::call: {
      double a = eval_node(n->a, bind);
      switch (n->func) {
        case Func::sin: return std::sin(a);
        case Func::cos: return std::cos(a);
        case Func::abs: return std::fabs(a);
        case Func::exp: {
          double r = std::exp(a);
          if (!std::isfinite(r) && std::isfinite(a))
            domain_error(n, "exp overflow");
          return r;
        }
        case Func::ln:
          if (a <= 0.0) domain_error(n, "ln of non-positive value");
          return std::log(a);
        case Func::sqrt:
          if (a < 0.0) domain_error(n, "sqrt of negative value");
          return std::sqrt(a);
        case Func::min: return scalar_min(a, eval_node(n->b, bind));
        case Func::max: return scalar_max(a, eval_node(n->b, bind));
      }
      return 0.0;
    }
  }
  return 0.0;
}

}  // namespace

double eval(const Expr& e, const Binding& binding) {
  if (e.empty()) throw EvalError("empty expression", "", 0);
  return eval_node(e.root(), binding);
}

}  // namespace indef::exprlang
