#include "indef/exprlang/program.hpp"

#include <algorithm>
#include <stdexcept>

namespace indef::exprlang {

namespace {

struct Compiler {
  Program prog;
  int depth = 0;

  void push(OpCode code, std::uint32_t operand = 0) {
    prog.instrs.push_back({code, operand});
  }

  void grow(int delta) {
    depth += delta;
    prog.max_stack = std::max(prog.max_stack, depth);
  }

  std::uint32_t intern(double v) {
    prog.constants.push_back(v);
    return (std::uint32_t)prog.constants.size() - 1;
  }

  void emit(const NodePtr& n) {
    switch (n->kind) {
      case NodeKind::constant:
        push(OpCode::push_const, intern(n->value));
        grow(+1);
        break;
      case NodeKind::named_const:
        push(OpCode::push_const, intern(named_const_value(n->named)));
        grow(+1);
        break;
      case NodeKind::variable:
        switch (n->var) {
          case VarKind::time:
            push(OpCode::load_t);
            prog.uses_t = true;
            break;
          case VarKind::comp_arg:
            push(OpCode::load_s);
            prog.uses_s = true;
            break;
          case VarKind::state:
            push(OpCode::load_x, (std::uint32_t)(n->index - 1));
            prog.max_x = std::max(prog.max_x, n->index);
            break;
          case VarKind::input:
            push(OpCode::load_u, (std::uint32_t)(n->index - 1));
            prog.max_u = std::max(prog.max_u, n->index);
            break;
        }
        grow(+1);
        break;
      case NodeKind::unary:
        emit(n->a);
        push(OpCode::neg);
        break;
      case NodeKind::binary: {
        emit(n->a);
        emit(n->b);
        OpCode c{};
        switch (n->bop) {
          case BinaryOp::add: c = OpCode::add; break;
          case BinaryOp::sub: c = OpCode::sub; break;
          case BinaryOp::mul: c = OpCode::mul; break;
          case BinaryOp::div: c = OpCode::div; break;
          case BinaryOp::pow: c = OpCode::pow; break;
        }
        push(c);
        grow(-1);
        break;
      }
      case NodeKind::call: {
        emit(n->a);
        if (n->b) emit(n->b);
        OpCode c{};
        switch (n->func) {
          case Func::sin: c = OpCode::sin; break;
          case Func::cos: c = OpCode::cos; break;
          case Func::abs: c = OpCode::abs; break;
          case Func::exp: c = OpCode::exp; break;
          case Func::ln: c = OpCode::ln; break;
          case Func::sqrt: c = OpCode::sqrt; break;
          case Func::min: c = OpCode::min; break;
          case Func::max: c = OpCode::max; break;
        }
        push(c);
        if (n->b) grow(-1);
        break;
      }
    }
  }
};

}  // namespace

Program compile(const Expr& e) {
  if (e.empty()) throw std::invalid_argument("compile: empty expression");
  Compiler c;
  c.emit(e.root());
  return std::move(c.prog);
}

}  // namespace indef::exprlang
