#pragma once

// Stability classification of scalar rate functions. A signal μ is graded by
// the behaviour of its cumulative integral I(t) = ∫_{t0}^t μ on a finite
// window: all verdicts certify the sampled horizon, never the limit.
//
//   asymptotic            I(horizon) falls below a large negative threshold
//                         and is still decreasing at the tail.
//   exponential           some α ≥ alpha_min keeps β(t0) = sup_t [I + α(t-t0)]
//                         under beta_cap with the sup not growing at the tail,
//                         and the certified depth α·(horizon - t0) reaches the
//                         threshold.
//   uniform_exponential   additionally β(t0) shows no growth trend across the
//                         sampled t0 (least-squares slope test).

#include <string>
#include <utility>
#include <vector>

#include "indef/quadsig/transition.hpp"

namespace indef::quadsig {

enum class StabilityClass { none, asymptotic, exponential, uniform_exponential };

const char* to_string(StabilityClass c);

struct ClassifyOptions {
  double horizon = 200.0;
  std::vector<double> t0_samples = {0.0};
  double alpha_min = 1e-3;
  double beta_cap = 1e4;
  double asym_threshold = -30.0;
  double uniformity_tol = 0.10;
  double quad_tol = 1e-10;
  double grid_step = 0.05;
};

struct StabilityVerdict {
  StabilityClass cls = StabilityClass::none;
  double alpha = 0.0;  // fitted decay rate; > 0 only for exponential grades
  double beta = 0.0;   // reported offset: max of beta_of_t0
  std::vector<std::pair<double, double>> beta_of_t0;
  double horizon = 0.0;
  std::vector<double> t0_samples;
  double margin = 0.0;  // worst slack of the (alpha,beta) bound over the grid
  bool certified = false;  // horizon-certified only, never a proof
  bool asymptotic_ok = false, exponential_ok = false, uniform_ok = false;
  std::string reason;
};

StabilityVerdict classify(const ScalarSignal& mu, const ClassifyOptions& opt);

/// Max over window starts (one period scanned) of ∫_t^{t+period} μ. A
/// negative value certifies stability of a periodic μ.
double periodic_test(const ScalarSignal& mu, double period, double tol = 1e-10,
                     int starts = 128);

struct RatePairCheck {
  double worst_margin = -1e308;  // max of I(t)-I(t0) + alpha (t-t0) - beta
  std::size_t violations = 0;
  std::pair<double, double> worst_pair{0, 0};
};

/// Spot-checks ∫_{t0}^{t} μ ≤ -alpha (t-t0) + beta on the given (t0,t) pairs.
RatePairCheck check_rate_pair(const ScalarSignal& mu, double alpha, double beta,
                              const std::vector<std::pair<double, double>>& pairs,
                              double tol = 1e-9);

}  // namespace indef::quadsig
