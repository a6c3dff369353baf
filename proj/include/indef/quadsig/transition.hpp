#pragma once

// Cached cumulative integrals M(t) = ∫_start^t f and the scalar transition
// factor φ(t,s) = exp(M(t) - M(s)). The cache grid grows geometrically away
// from the start so very long horizons stay affordable; between grid nodes
// the remainder is integrated on demand.

#include <span>
#include <vector>

#include "indef/quadsig/quadrature.hpp"
#include "indef/quadsig/signal.hpp"

namespace indef::quadsig {

struct GridOptions {
  double step0 = 0.05;
  double growth = 1.01;          // per-cell geometric step growth
  double cap_cells = 2000.0;     // step cap = span / cap_cells (at least step0)
  std::vector<double> must_include;
  std::size_t kink_cap = 1 << 17;  // merge kinks as nodes up to this many
};

/// Strictly increasing nodes from a to b following the step policy, with
/// kinks and must_include points merged in.
std::vector<double> build_grid(double a, double b, const GridOptions& opt,
                               const KinkSpec* kinks = nullptr);

class CumulativeIntegral {
 public:
  CumulativeIntegral(ScalarSignal signal, double start, double end,
                     double tol = 1e-10, GridOptions grid = {});

  /// M(t) for start ≤ t ≤ end (cached node plus a local top-up integral).
  [[nodiscard]] double value_at(double t) const;

  [[nodiscard]] std::span<const double> nodes() const { return nodes_; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] const ScalarSignal& signal() const { return signal_; }
  [[nodiscard]] double start() const { return nodes_.front(); }
  [[nodiscard]] double end() const { return nodes_.back(); }

  /// Index of the last node ≤ t.
  [[nodiscard]] std::size_t node_before(double t) const;

 private:
  ScalarSignal signal_;
  std::vector<double> nodes_;
  std::vector<double> values_;
  double cell_tol_;
};

class TransitionFactor {
 public:
  TransitionFactor(ScalarSignal mu, double start, double end, double tol = 1e-10);

  /// log φ(t,s) = M(t) - M(s); requires t ≥ s within the cached window.
  [[nodiscard]] double log_phi(double t, double s) const;

  /// φ(t,s) = exp(∫_s^t μ); always positive. Exponents above 700 saturate
  /// to +infinity rather than raising an error.
  [[nodiscard]] double phi(double t, double s) const;

  [[nodiscard]] const CumulativeIntegral& cumulative() const { return cum_; }

 private:
  CumulativeIntegral cum_;
};

/// One-shot φ(t,t0) without a cache. Requires t ≥ t0 ≥ domain start.
double transition_factor(const ScalarSignal& mu, double t, double t0,
                         double tol = 1e-10);

}  // namespace indef::quadsig
