#include "indef/exprlang/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <utility>

namespace indef::exprlang {

ParseError::ParseError(std::size_t off, std::string message, std::set<std::string> exp)
    : std::runtime_error(message + " at byte " + std::to_string(off)),
      offset(off),
      expected(std::move(exp)) {}

namespace {

struct Parser {
  std::string_view src;
  const Dims& dims;
  std::size_t pos = 0;

  [[noreturn]] void fail(std::set<std::string> expected, const std::string& what) {
    std::string msg = "syntax error: " + what;
    if (!expected.empty()) {
      msg += ", expected ";
      bool first = true;
      for (const auto& e : expected) {
        if (!first) msg += " | ";
        msg += e;
        first = false;
      }
    }
    throw ParseError(pos, msg, std::move(expected));
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        lhs = Expr::binary(BinaryOp::add, lhs, parse_term());
      } else if (eat('-')) {
        lhs = Expr::binary(BinaryOp::sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        lhs = Expr::binary(BinaryOp::mul, lhs, parse_unary());
      } else if (eat('/')) {
        lhs = Expr::binary(BinaryOp::div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (eat('-')) return Expr::neg(parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (eat('^')) return Expr::binary(BinaryOp::pow, base, parse_unary());
    return base;
  }

  Expr parse_atom() {
    skip_ws();
    if (pos >= src.size())
      fail({"number", "identifier", "("}, "unexpected end of input");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      Expr inner = parse_expr();
      if (!eat(')')) fail({")"}, "unclosed parenthesis");
      return inner;
    }
    if (std::isdigit((unsigned char)c) || c == '.') return parse_number();
    if (std::isalpha((unsigned char)c)) return parse_ident();
    fail({"number", "identifier", "("}, std::string("unexpected character '") + c + "'");
  }

  Expr parse_number() {
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
    if (pos < src.size() && src[pos] == '.') {
      ++pos;
      while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
    }
    if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
      std::size_t mark = pos;
      ++pos;
      if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
      if (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
        while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
      } else {
        pos = mark;  // "2e" without digits: 'e' belongs to the next token
      }
    }
    double value = 0.0;
    auto [p, ec] = std::from_chars(src.data() + start, src.data() + pos, value);
    if (ec != std::errc{} || p != src.data() + pos) {
      pos = start;
      fail({"number"}, "malformed number");
    }
    Node n{};
    n.kind = NodeKind::constant;
    n.value = value;
    n.offset = start;
    return Expr(std::make_shared<const Node>(n));
  }

  Expr parse_ident() {
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
      ++pos;
    std::string_view name = src.substr(start, pos - start);

    auto indexed = [&](char prefix, int limit) -> int {
      if (name.size() < 2 || name[0] != prefix) return 0;
      int idx = 0;
      auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
      if (ec != std::errc{} || p != name.data() + name.size()) return 0;
      if (idx < 1 || idx > limit) {
        pos = start;
        throw ParseError(start,
                         "index out of range for '" + std::string(name) + "'", {});
      }
      return idx;
    };

    Expr result;
    if (name == "t") {
      if (!dims.allow_t)
        throw ParseError(start, "variable 't' not allowed here", {});
      result = Expr::var_t();
    } else if (name == "s") {
      if (!dims.allow_s)
        throw ParseError(start, "variable 's' not allowed here", {});
      result = Expr::var_s();
    } else if (name == "pi") {
      result = Expr::named(NamedConst::pi);
    } else if (name == "e") {
      result = Expr::named(NamedConst::e);
    } else if (int i = indexed('x', dims.n); i > 0) {
      result = Expr::var_x(i);
    } else if (int j = indexed('u', dims.m); j > 0) {
      result = Expr::var_u(j);
    } else {
      Func f{};
      bool is_func = true;
      if (name == "sin") f = Func::sin;
      else if (name == "cos") f = Func::cos;
      else if (name == "abs") f = Func::abs;
      else if (name == "exp") f = Func::exp;
      else if (name == "ln") f = Func::ln;
      else if (name == "sqrt") f = Func::sqrt;
      else if (name == "min") f = Func::min;
      else if (name == "max") f = Func::max;
      else is_func = false;

      if (!is_func)
        throw ParseError(start, "unknown identifier '" + std::string(name) + "'", {});

      if (!eat('(')) fail({"("}, "function call requires arguments");
      std::vector<Expr> args;
      args.push_back(parse_expr());
      while (eat(',')) args.push_back(parse_expr());
      if (!eat(')')) fail({")", ","}, "unclosed argument list");
      if ((int)args.size() != func_arity(f))
        throw ParseError(start,
                         std::string(func_name(f)) + " expects " +
                             std::to_string(func_arity(f)) + " argument(s), got " +
                             std::to_string(args.size()),
                         {});
      result = func_arity(f) == 1 ? Expr::call(f, args[0])
                                  : Expr::call(f, args[0], args[1]);
    }
    // tag the node with its source offset
    Node tagged = *result.root();
    tagged.offset = start;
    return Expr(std::make_shared<const Node>(tagged));
  }
};

}  // namespace

Expr parse(std::string_view source, const Dims& dims) {
  Parser p{source, dims};
  p.skip_ws();
  if (p.pos >= source.size())
    throw ParseError(0, "empty expression", {"number", "identifier", "("});
  Expr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != source.size())
    p.fail({"+", "-", "*", "/", "^", "end"}, "trailing input");
  return e;
}

}  // namespace indef::exprlang
