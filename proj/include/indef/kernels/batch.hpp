#pragma once

// Batch evaluation of compiled expression programs at many points. Two
// kernels share one contract: a scalar reference loop and an AVX2 variant
// selected at runtime. Both produce bit-identical output: the basic
// arithmetic ops map to exactly rounded IEEE instructions on either path,
// and the AVX2 kernel calls libm lane by lane for the transcendentals.
//
// Values propagate per IEEE 754 (no domain checks); callers that need
// checked evaluation use exprlang::eval.

#include <cstddef>
#include <string>

#include "indef/exprlang/program.hpp"

namespace indef::kernels {

/// Pointers to the per-point variable arrays a program may read. Only the
/// streams the program uses must be non-null (checked).
struct BatchInputs {
  const double* t = nullptr;
  const double* s = nullptr;
  const double* const* x = nullptr;  // x[i] = array for state i+1
  const double* const* u = nullptr;
  std::size_t count = 0;
};

enum class SimdMode { auto_select, force_scalar, force_avx2 };

/// Process-wide kernel selection. Defaults to auto_select; the environment
/// variable INDEF_LYAP_SIMD (scalar | avx2 | auto) overrides at startup.
void set_simd_mode(SimdMode mode);
SimdMode simd_mode();

bool avx2_available();

/// Name of the kernel that eval_batch would run right now.
std::string active_kernel_name();

/// Evaluates `prog` at every point, writing count results to `out`.
void eval_batch(const exprlang::Program& prog, const BatchInputs& in, double* out);

/// Single-point convenience wrapper (scalar kernel, no dispatch overhead).
double eval_one(const exprlang::Program& prog, double t, double s,
                const double* x, const double* u);

namespace detail {
void run_scalar(const exprlang::Program& prog, const BatchInputs& in, double* out);
void run_avx2(const exprlang::Program& prog, const BatchInputs& in, double* out);
}  // namespace detail

}  // namespace indef::kernels
