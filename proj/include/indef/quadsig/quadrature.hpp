#pragma once

// Adaptive Gauss-Kronrod (G7/K15) panel quadrature with kink splitting.
// Refinement is breadth-first: every pending panel's nodes are evaluated in
// one batch per round, which keeps the inner loop data-parallel.

#include <stdexcept>
#include <string>

#include "indef/quadsig/signal.hpp"

namespace indef::quadsig {

struct QuadratureOptions {
  double tol = 1e-10;  // absolute error target
  int max_depth = 60;
  bool positive_part = false;  // integrate max(f, 0) instead of f
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long panels = 0;
  bool converged = true;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(std::string message, double achieved);
  double achieved_error;
};

QuadratureResult integrate_full(const ScalarSignal& f, double a, double b,
                                const QuadratureOptions& opt = {});

/// ∫_a^b f, absolute error ≤ tol. Panels split at the signal's kink hints.
/// Throws QuadratureError (reporting the achieved error) if adaptive
/// refinement hits max depth without meeting tol, and EvalError for domain
/// errors in f. Requires domain_start ≤ a ≤ b.
double integrate(const ScalarSignal& f, double a, double b, double tol = 1e-10);

/// ∫_a^b max(f, 0); crossings are resolved by adaptive refinement.
double positive_part_integral(const ScalarSignal& f, double a, double b,
                              double tol = 1e-10);

}  // namespace indef::quadsig
