#include "indef/exprlang/ast.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace indef::exprlang {

int func_arity(Func f) {
  switch (f) {
    case Func::min:
    case Func::max:
      return 2;
    default:
      return 1;
  }
}

const char* func_name(Func f) {
  switch (f) {
    case Func::sin: return "sin";
    case Func::cos: return "cos";
    case Func::abs: return "abs";
    case Func::exp: return "exp";
    case Func::ln: return "ln";
    case Func::sqrt: return "sqrt";
    case Func::min: return "min";
    case Func::max: return "max";
  }
  return "?";
}

double named_const_value(NamedConst c) {
  return c == NamedConst::pi ? std::numbers::pi : std::numbers::e;
}

static NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

Expr Expr::constant(double v) {
  Node n{};
  n.kind = NodeKind::constant;
  n.value = v;
  return Expr(make(n));
}

Expr Expr::named(NamedConst c) {
  Node n{};
  n.kind = NodeKind::named_const;
  n.named = c;
  return Expr(make(n));
}

static Expr make_var(VarKind k, int index) {
  Node n{};
  n.kind = NodeKind::variable;
  n.var = k;
  n.index = index;
  return Expr(make(n));
}

Expr Expr::var_t() { return make_var(VarKind::time, 0); }
Expr Expr::var_s() { return make_var(VarKind::comp_arg, 0); }
Expr Expr::var_x(int i) { return make_var(VarKind::state, i); }
Expr Expr::var_u(int j) { return make_var(VarKind::input, j); }

Expr Expr::neg(Expr e) {
  Node n{};
  n.kind = NodeKind::unary;
  n.uop = UnaryOp::neg;
  n.a = e.root();
  return Expr(make(n));
}

Expr Expr::binary(BinaryOp op, Expr a, Expr b) {
  Node n{};
  n.kind = NodeKind::binary;
  n.bop = op;
  n.a = a.root();
  n.b = b.root();
  return Expr(make(n));
}

Expr Expr::call(Func f, Expr a) {
  Node n{};
  n.kind = NodeKind::call;
  n.func = f;
  n.a = a.root();
  return Expr(make(n));
}

Expr Expr::call(Func f, Expr a, Expr b) {
  Node n{};
  n.kind = NodeKind::call;
  n.func = f;
  n.a = a.root();
  n.b = b.root();
  return Expr(make(n));
}

static bool node_equal(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::constant:
      return std::bit_cast<std::uint64_t>(a->value) ==
             std::bit_cast<std::uint64_t>(b->value);
    case NodeKind::named_const:
      return a->named == b->named;
    case NodeKind::variable:
      return a->var == b->var && a->index == b->index;
    case NodeKind::unary:
      return a->uop == b->uop && node_equal(a->a, b->a);
    case NodeKind::binary:
      return a->bop == b->bop && node_equal(a->a, b->a) && node_equal(a->b, b->b);
    case NodeKind::call:
      return a->func == b->func && node_equal(a->a, b->a) && node_equal(a->b, b->b);
  }
  return false;
}

bool structural_equal(const Expr& a, const Expr& b) {
  return node_equal(a.root(), b.root());
}

static void scan_vars(const NodePtr& n, VarsUsed& out) {
  if (!n) return;
  if (n->kind == NodeKind::variable) {
    switch (n->var) {
      case VarKind::time: out.t = true; break;
      case VarKind::comp_arg: out.s = true; break;
      case VarKind::state:
        if (n->index >= 1 && n->index <= (int)out.x.size()) out.x[n->index - 1] = true;
        break;
      case VarKind::input:
        if (n->index >= 1 && n->index <= (int)out.u.size()) out.u[n->index - 1] = true;
        break;
    }
  }
  scan_vars(n->a, out);
  scan_vars(n->b, out);
}

VarsUsed vars_used(const Expr& e, const Dims& dims) {
  VarsUsed out;
  out.x.assign(dims.n, false);
  out.u.assign(dims.m, false);
  scan_vars(e.root(), out);
  return out;
}

}  // namespace indef::exprlang
