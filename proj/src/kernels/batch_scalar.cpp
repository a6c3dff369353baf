// Scalar reference kernel. Deliberately plain: one IEEE operation per
// instruction per point, in program order. The AVX2 kernel is equivalence-
// tested against this bit for bit.

#include <cmath>
#include <vector>

#include "indef/exprlang/eval.hpp"
#include "indef/kernels/batch.hpp"

namespace indef::kernels::detail {

using exprlang::OpCode;

void run_scalar(const exprlang::Program& prog, const BatchInputs& in, double* out) {
  const std::size_t count = in.count;
  thread_local std::vector<double> ws;
  ws.resize((std::size_t)prog.max_stack * count);
  auto slot = [&](int i) { return ws.data() + (std::size_t)i * count; };
  int top = -1;

  for (const auto& op : prog.instrs) {
    switch (op.code) {
      case OpCode::push_const: {
        double* dst = slot(++top);
        double c = prog.constants[op.operand];
        for (std::size_t i = 0; i < count; ++i) dst[i] = c;
        break;
      }
      case OpCode::load_t: {
        double* dst = slot(++top);
        for (std::size_t i = 0; i < count; ++i) dst[i] = in.t[i];
        break;
      }
      case OpCode::load_s: {
        double* dst = slot(++top);
        for (std::size_t i = 0; i < count; ++i) dst[i] = in.s[i];
        break;
      }
      case OpCode::load_x: {
        double* dst = slot(++top);
        const double* src = in.x[op.operand];
        for (std::size_t i = 0; i < count; ++i) dst[i] = src[i];
        break;
      }
      case OpCode::load_u: {
        double* dst = slot(++top);
        const double* src = in.u[op.operand];
        for (std::size_t i = 0; i < count; ++i) dst[i] = src[i];
        break;
      }
      case OpCode::neg: {
        double* a = slot(top);
        for (std::size_t i = 0; i < count; ++i) a[i] = -a[i];
        break;
      }
#define INDEF_BINOP(opname, exprn)                          \
  case OpCode::opname: {                                    \
    double* a = slot(top - 1);                              \
    const double* b = slot(top);                            \
    for (std::size_t i = 0; i < count; ++i) a[i] = (exprn); \
    --top;                                                  \
    break;                                                  \
  }
      INDEF_BINOP(add, a[i] + b[i])
      INDEF_BINOP(sub, a[i] - b[i])
      INDEF_BINOP(mul, a[i] * b[i])
      INDEF_BINOP(div, a[i] / b[i])
      INDEF_BINOP(pow, std::pow(a[i], b[i]))
      INDEF_BINOP(min, exprlang::scalar_min(a[i], b[i]))
      INDEF_BINOP(max, exprlang::scalar_max(a[i], b[i]))
#undef INDEF_BINOP
#define INDEF_UNFUNC(opname, fn)                             \
  case OpCode::opname: {                                     \
    double* a = slot(top);                                   \
    for (std::size_t i = 0; i < count; ++i) a[i] = fn(a[i]); \
    break;                                                   \
  }
      INDEF_UNFUNC(sin, std::sin)
      INDEF_UNFUNC(cos, std::cos)
      INDEF_UNFUNC(abs, std::fabs)
      INDEF_UNFUNC(exp, std::exp)
      INDEF_UNFUNC(ln, std::log)
      INDEF_UNFUNC(sqrt, std::sqrt)
#undef INDEF_UNFUNC
    }
  }
  const double* result = slot(top);
  for (std::size_t i = 0; i < count; ++i) out[i] = result[i];
}

}  // namespace indef::kernels::detail
