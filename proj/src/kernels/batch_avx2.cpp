// AVX2 kernel. Arithmetic instructions (+ - * / neg abs min max sqrt) run
// four lanes wide with exactly rounded IEEE intrinsics; sin/cos/exp/ln/pow
// go through libm lane by lane, which keeps every result bit-identical to
// the scalar reference kernel. Batch tails shorter than a vector reuse the
// scalar primitives.

#include <cmath>
#include <cstddef>
#include <vector>

#include "indef/exprlang/eval.hpp"
#include "indef/kernels/batch.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace indef::kernels::detail {

using exprlang::OpCode;

namespace {

__attribute__((target("avx2"))) inline __m256d neg4(__m256d a) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  return _mm256_xor_pd(a, signmask);
}

__attribute__((target("avx2"))) inline __m256d abs4(__m256d a) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(signmask, a);
}

template <double F(double)>
__attribute__((target("avx2"))) inline __m256d lanewise(__m256d a) {
  alignas(32) double buf[4];
  _mm256_store_pd(buf, a);
  buf[0] = F(buf[0]);
  buf[1] = F(buf[1]);
  buf[2] = F(buf[2]);
  buf[3] = F(buf[3]);
  return _mm256_load_pd(buf);
}

double sin_d(double v) { return std::sin(v); }
double cos_d(double v) { return std::cos(v); }
double exp_d(double v) { return std::exp(v); }
double log_d(double v) { return std::log(v); }

__attribute__((target("avx2"))) inline __m256d pow4(__m256d a, __m256d b) {
  alignas(32) double ba[4], bb[4];
  _mm256_store_pd(ba, a);
  _mm256_store_pd(bb, b);
  ba[0] = std::pow(ba[0], bb[0]);
  ba[1] = std::pow(ba[1], bb[1]);
  ba[2] = std::pow(ba[2], bb[2]);
  ba[3] = std::pow(ba[3], bb[3]);
  return _mm256_load_pd(ba);
}

}  // namespace

__attribute__((target("avx2")))
void run_avx2(const exprlang::Program& prog, const BatchInputs& in, double* out) {
  const std::size_t count = in.count;
  const std::size_t vec_end = count - count % 4;
  thread_local std::vector<double> ws;
  ws.resize((std::size_t)prog.max_stack * count);
  auto slot = [&](int i) { return ws.data() + (std::size_t)i * count; };
  int top = -1;

  for (const auto& op : prog.instrs) {
    switch (op.code) {
      case OpCode::push_const: {
        double* dst = slot(++top);
        const double c = prog.constants[op.operand];
        const __m256d vc = _mm256_set1_pd(c);
        std::size_t i = 0;
        for (; i < vec_end; i += 4) _mm256_storeu_pd(dst + i, vc);
        for (; i < count; ++i) dst[i] = c;
        break;
      }
      case OpCode::load_t:
      case OpCode::load_s:
      case OpCode::load_x:
      case OpCode::load_u: {
        double* dst = slot(++top);
        const double* src = op.code == OpCode::load_t   ? in.t
                            : op.code == OpCode::load_s ? in.s
                            : op.code == OpCode::load_x ? in.x[op.operand]
                                                        : in.u[op.operand];
        std::size_t i = 0;
        for (; i < vec_end; i += 4)
          _mm256_storeu_pd(dst + i, _mm256_loadu_pd(src + i));
        for (; i < count; ++i) dst[i] = src[i];
        break;
      }
#define INDEF_UNOP(opname, vec_expr, scl_expr)                      \
  case OpCode::opname: {                                            \
    double* a = slot(top);                                          \
    std::size_t i = 0;                                              \
    for (; i < vec_end; i += 4) {                                   \
      __m256d va = _mm256_loadu_pd(a + i);                          \
      _mm256_storeu_pd(a + i, vec_expr);                            \
    }                                                               \
    for (; i < count; ++i) a[i] = scl_expr;                         \
    break;                                                          \
  }
      INDEF_UNOP(neg, neg4(va), -a[i])
      INDEF_UNOP(abs, abs4(va), std::fabs(a[i]))
      INDEF_UNOP(sqrt, _mm256_sqrt_pd(va), std::sqrt(a[i]))
      INDEF_UNOP(sin, lanewise<sin_d>(va), std::sin(a[i]))
      INDEF_UNOP(cos, lanewise<cos_d>(va), std::cos(a[i]))
      INDEF_UNOP(exp, lanewise<exp_d>(va), std::exp(a[i]))
      INDEF_UNOP(ln, lanewise<log_d>(va), std::log(a[i]))
#undef INDEF_UNOP
#define INDEF_BINOP(opname, vec_expr, scl_expr)                     \
  case OpCode::opname: {                                            \
    double* a = slot(top - 1);                                      \
    const double* b = slot(top);                                    \
    std::size_t i = 0;                                              \
    for (; i < vec_end; i += 4) {                                   \
      __m256d va = _mm256_loadu_pd(a + i);                          \
      __m256d vb = _mm256_loadu_pd(b + i);                          \
      _mm256_storeu_pd(a + i, vec_expr);                            \
    }                                                               \
    for (; i < count; ++i) a[i] = scl_expr;                         \
    --top;                                                          \
    break;                                                          \
  }
      INDEF_BINOP(add, _mm256_add_pd(va, vb), a[i] + b[i])
      INDEF_BINOP(sub, _mm256_sub_pd(va, vb), a[i] - b[i])
      INDEF_BINOP(mul, _mm256_mul_pd(va, vb), a[i] * b[i])
      INDEF_BINOP(div, _mm256_div_pd(va, vb), a[i] / b[i])
      INDEF_BINOP(pow, pow4(va, vb), std::pow(a[i], b[i]))
      INDEF_BINOP(min, _mm256_min_pd(va, vb), exprlang::scalar_min(a[i], b[i]))
      INDEF_BINOP(max, _mm256_max_pd(va, vb), exprlang::scalar_max(a[i], b[i]))
#undef INDEF_BINOP
    }
  }
  const double* result = slot(top);
  std::size_t i = 0;
  for (; i < vec_end; i += 4)
    _mm256_storeu_pd(out + i, _mm256_loadu_pd(result + i));
  for (; i < count; ++i) out[i] = result[i];
}

}  // namespace indef::kernels::detail

#else  // non-x86: AVX2 variant is never selected

namespace indef::kernels::detail {
void run_avx2(const exprlang::Program& prog, const BatchInputs& in, double* out) {
  run_scalar(prog, in, out);
}
}  // namespace indef::kernels::detail

#endif
