#include "indef/exprlang/print.hpp"

#include <cstdio>
#include <cstdlib>

namespace indef::exprlang {

std::string format_double(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

const char* binop_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::pow: return "^";
  }
  return "?";
}

void print_node(const NodePtr& n, std::string& out) {
  switch (n->kind) {
    case NodeKind::constant:
      out += format_double(n->value);
      break;
    case NodeKind::named_const:
      out += n->named == NamedConst::pi ? "pi" : "e";
      break;
    case NodeKind::variable:
      switch (n->var) {
        case VarKind::time: out += 't'; break;
        case VarKind::comp_arg: out += 's'; break;
        case VarKind::state: out += 'x'; out += std::to_string(n->index); break;
        case VarKind::input: out += 'u'; out += std::to_string(n->index); break;
      }
      break;
    case NodeKind::unary:
      out += "(-";
      print_node(n->a, out);
      out += ')';
      break;
    case NodeKind::binary:
      out += '(';
      print_node(n->a, out);
      out += binop_symbol(n->bop);
      print_node(n->b, out);
      out += ')';
      break;
    case NodeKind::call:
      out += func_name(n->func);
      out += '(';
      print_node(n->a, out);
      if (n->b) {
        out += ',';
        print_node(n->b, out);
      }
      out += ')';
      break;
  }
}

}  // namespace

std::string print(const Expr& e) {
  std::string out;
  if (!e.empty()) print_node(e.root(), out);
  return out;
}

}  // namespace indef::exprlang
