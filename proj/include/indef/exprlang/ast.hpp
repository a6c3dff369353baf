#pragma once

// Arithmetic expression trees over the variables t, x1..xn, u1..um and the
// comparison-function argument s. Trees are immutable after construction;
// Expr handles share nodes, so copies are cheap and evaluation is reentrant.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace indef::exprlang {

enum class NodeKind : std::uint8_t {
  constant,
  named_const,  // pi, e
  variable,
  unary,   // negation
  binary,  // + - * / ^
  call,    // sin cos abs exp ln sqrt min max
};

enum class VarKind : std::uint8_t { time, state, input, comp_arg };

enum class UnaryOp : std::uint8_t { neg };

enum class BinaryOp : std::uint8_t { add, sub, mul, div, pow };

enum class Func : std::uint8_t { sin, cos, abs, exp, ln, sqrt, min, max };

enum class NamedConst : std::uint8_t { pi, e };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  double value = 0.0;     // constant
  NamedConst named{};     // named_const
  VarKind var{};          // variable
  int index = 0;          // 1-based state/input index
  UnaryOp uop{};
  BinaryOp bop{};
  Func func{};
  NodePtr a;
  NodePtr b;
  std::size_t offset = 0;  // byte offset in the source text, 0 if synthetic
};

int func_arity(Func f);
const char* func_name(Func f);
double named_const_value(NamedConst c);

/// Which variables may appear in an expression, and the declared dimensions
/// used to validate x<i>/u<j> indices.
struct Dims {
  int n = 0;             // state dimension
  int m = 0;             // input dimension
  bool allow_t = true;
  bool allow_s = false;  // comparison-function argument
};

/// Handle to an immutable expression tree.
class Expr {
 public:
  Expr() = default;
  explicit Expr(NodePtr root) : root_(std::move(root)) {}

  [[nodiscard]] const NodePtr& root() const { return root_; }
  [[nodiscard]] bool empty() const { return root_ == nullptr; }

  static Expr constant(double v);
  static Expr named(NamedConst c);
  static Expr var_t();
  static Expr var_s();
  static Expr var_x(int i);
  static Expr var_u(int j);
  static Expr neg(Expr e);
  static Expr binary(BinaryOp op, Expr a, Expr b);
  static Expr call(Func f, Expr a);
  static Expr call(Func f, Expr a, Expr b);

 private:
  NodePtr root_;
};

/// Structural equality; constants compare bitwise.
bool structural_equal(const Expr& a, const Expr& b);

/// Flags for the variables actually referenced by an expression.
struct VarsUsed {
  bool t = false;
  bool s = false;
  std::vector<bool> x;  // index i-1
  std::vector<bool> u;
};

VarsUsed vars_used(const Expr& e, const Dims& dims);

}  // namespace indef::exprlang
