#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "indef/kernels/batch.hpp"

namespace indef::kernels {

namespace {

SimdMode mode_from_env() {
  const char* v = std::getenv("INDEF_LYAP_SIMD");
  if (!v) return SimdMode::auto_select;
  if (std::strcmp(v, "scalar") == 0) return SimdMode::force_scalar;
  if (std::strcmp(v, "avx2") == 0) return SimdMode::force_avx2;
  return SimdMode::auto_select;
}

std::atomic<SimdMode> g_mode{mode_from_env()};

bool use_avx2() {
  switch (g_mode.load(std::memory_order_relaxed)) {
    case SimdMode::force_scalar: return false;
    case SimdMode::force_avx2:
      if (!avx2_available())
        throw std::runtime_error("AVX2 kernel forced but not supported by CPU");
      return true;
    case SimdMode::auto_select: return avx2_available();
  }
  return false;
}

void check_inputs(const exprlang::Program& prog, const BatchInputs& in) {
  if (prog.uses_t && !in.t) throw std::invalid_argument("eval_batch: t stream missing");
  if (prog.uses_s && !in.s) throw std::invalid_argument("eval_batch: s stream missing");
  if (prog.max_x > 0 && !in.x) throw std::invalid_argument("eval_batch: x streams missing");
  if (prog.max_u > 0 && !in.u) throw std::invalid_argument("eval_batch: u streams missing");
}

}  // namespace

void set_simd_mode(SimdMode mode) { g_mode.store(mode, std::memory_order_relaxed); }

SimdMode simd_mode() { return g_mode.load(std::memory_order_relaxed); }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::string active_kernel_name() { return use_avx2() ? "avx2" : "scalar"; }

void eval_batch(const exprlang::Program& prog, const BatchInputs& in, double* out) {
  if (in.count == 0) return;
  check_inputs(prog, in);
  if (use_avx2())
    detail::run_avx2(prog, in, out);
  else
    detail::run_scalar(prog, in, out);
}

double eval_one(const exprlang::Program& prog, double t, double s,
                const double* x, const double* u) {
  // wrap the single point as a batch of one
  static thread_local std::vector<const double*> xp, up;
  xp.clear();
  up.clear();
  for (int i = 0; i < prog.max_x; ++i) xp.push_back(x + i);
  for (int j = 0; j < prog.max_u; ++j) up.push_back(u + j);
  BatchInputs in;
  in.t = &t;
  in.s = &s;
  in.x = xp.empty() ? nullptr : xp.data();
  in.u = up.empty() ? nullptr : up.data();
  in.count = 1;
  check_inputs(prog, in);
  double result = 0.0;
  detail::run_scalar(prog, in, &result);
  return result;
}

}  // namespace indef::kernels
