#include "indef/quadsig/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace indef::quadsig {

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::none: return "none";
    case StabilityClass::asymptotic: return "asymptotic";
    case StabilityClass::exponential: return "exponential";
    case StabilityClass::uniform_exponential: return "uniform_exponential";
  }
  return "?";
}

namespace {

struct Window {
  std::size_t begin;      // grid index of t0
  std::size_t tail;       // grid index nearest t0 + 0.9 (horizon - t0)
  double t0;
};

struct FitContext {
  const std::vector<double>& t;
  const std::vector<double>& M;
  const std::vector<Window>& windows;
  double beta_cap;
  double slope_eps = 1e-9;

  // β(t0) for one window at a given α; +inf marks an infeasible window
  // (cap exceeded or sup still growing at the tail).
  double beta_for(const Window& w, double alpha, bool* feasible) const {
    double sup = -1e308;
    const double m0 = M[w.begin];
    for (std::size_t j = w.begin; j < t.size(); ++j) {
      const double g = M[j] - m0 + alpha * (t[j] - w.t0);
      if (g > sup) sup = g;
    }
    // tail trend: mean slope of g over the last tenth of the window
    const double span_tail = t.back() - t[w.tail];
    double slope = 0.0;
    if (span_tail > 0)
      slope = (M.back() - M[w.tail]) / span_tail + alpha;
    *feasible = sup <= beta_cap && slope <= slope_eps;
    return sup;
  }

  bool feasible(double alpha) const {
    for (const auto& w : windows) {
      bool ok = false;
      (void)beta_for(w, alpha, &ok);
      if (!ok) return false;
    }
    return true;
  }
};

std::size_t nearest_index(const std::vector<double>& t, double v) {
  auto it = std::lower_bound(t.begin(), t.end(), v);
  if (it == t.end()) return t.size() - 1;
  if (it != t.begin() && v - *(it - 1) < *it - v) --it;
  return (std::size_t)(it - t.begin());
}

}  // namespace

StabilityVerdict classify(const ScalarSignal& mu, const ClassifyOptions& opt) {
  if (opt.t0_samples.empty())
    throw std::invalid_argument("classify: need at least one t0 sample");
  if (opt.alpha_min <= 0)
    throw std::invalid_argument("classify: alpha_min must be positive");
  const double t0_max = *std::max_element(opt.t0_samples.begin(), opt.t0_samples.end());
  const double t0_min = *std::min_element(opt.t0_samples.begin(), opt.t0_samples.end());
  if (opt.horizon <= t0_max)
    throw std::invalid_argument("classify: horizon must exceed every t0 sample");

  StabilityVerdict v;
  v.horizon = opt.horizon;
  v.t0_samples = opt.t0_samples;
  std::sort(v.t0_samples.begin(), v.t0_samples.end());

  GridOptions grid;
  grid.step0 = opt.grid_step;
  grid.must_include = v.t0_samples;
  CumulativeIntegral cum(mu, std::max(t0_min, mu.domain_start()), opt.horizon,
                         opt.quad_tol, grid);
  const std::vector<double> t(cum.nodes().begin(), cum.nodes().end());
  const std::vector<double> M(cum.values().begin(), cum.values().end());

  std::vector<Window> windows;
  for (double t0 : v.t0_samples) {
    Window w;
    w.t0 = t0;
    w.begin = nearest_index(t, t0);
    w.tail = nearest_index(t, t0 + 0.9 * (opt.horizon - t0));
    if (w.tail <= w.begin) w.tail = w.begin;
    windows.push_back(w);
  }

  // --- asymptotic: deep final integral, still decreasing at the tail
  v.asymptotic_ok = true;
  for (const auto& w : windows) {
    const double depth = M.back() - M[w.begin];
    const double span_tail = t.back() - t[w.tail];
    const double tail_slope =
        span_tail > 0 ? (M.back() - M[w.tail]) / span_tail : 0.0;
    if (depth > opt.asym_threshold || tail_slope > 1e-12) {
      v.asymptotic_ok = false;
      if (depth > opt.asym_threshold && tail_slope <= 1e-12)
        v.reason = "integral still above threshold at horizon (horizon may be too short)";
      else
        v.reason = "cumulative integral not decreasing at horizon";
      break;
    }
  }

  // --- exponential: largest feasible α by bisection on the monotone
  //     feasibility boundary
  FitContext fit{t, M, windows, opt.beta_cap};
  double alpha_star = 0.0;
  if (fit.feasible(opt.alpha_min)) {
    double lo = opt.alpha_min, hi = std::max(1.0, 2.0 * opt.alpha_min);
    while (fit.feasible(hi) && hi < 1e9) {
      lo = hi;
      hi *= 2.0;
    }
    if (hi >= 1e9) {
      alpha_star = lo;
    } else {
      for (int it = 0; it < 200 && hi - lo > 1e-9 * std::max(1.0, lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        (fit.feasible(mid) ? lo : hi) = mid;
      }
      alpha_star = lo;
    }
  }

  const double depth_needed = std::abs(opt.asym_threshold);
  if (alpha_star >= opt.alpha_min) {
    if (alpha_star * (opt.horizon - t0_max) >= depth_needed) {
      v.exponential_ok = true;
    } else if (v.reason.empty()) {
      v.reason = "horizon too short to certify the fitted rate";
    }
  }

  if (v.exponential_ok) {
    v.alpha = alpha_star;
    for (const auto& w : windows) {
      bool ok = false;
      const double b = fit.beta_for(w, alpha_star, &ok);
      v.beta_of_t0.emplace_back(w.t0, b);
      v.beta = std::max(v.beta, b);
    }
    // worst slack of the reported (alpha, beta) pair over the whole grid
    v.margin = -1e308;
    for (const auto& w : windows)
      for (std::size_t j = w.begin; j < t.size(); ++j)
        v.margin = std::max(
            v.margin, M[j] - M[w.begin] + v.alpha * (t[j] - w.t0) - v.beta);

    // uniformity: β(t0) must show no positive growth trend across t0.
    if (v.beta_of_t0.size() >= 2) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const double n = (double)v.beta_of_t0.size();
      for (auto& [x, y] : v.beta_of_t0) {
        sx += x; sy += y; sxx += x * x; sxy += x * y;
      }
      const double denom = n * sxx - sx * sx;
      const double slope = denom > 0 ? (n * sxy - sx * sy) / denom : 0.0;
      const double span = v.beta_of_t0.back().first - v.beta_of_t0.front().first;
      const double mean = sy / n;
      v.uniform_ok = slope * span <= opt.uniformity_tol * (std::abs(mean) + 1.0);
    } else {
      v.uniform_ok = true;  // a single t0 gives no evidence of growth
    }
  }

  if (v.exponential_ok && v.uniform_ok)
    v.cls = StabilityClass::uniform_exponential;
  else if (v.exponential_ok)
    v.cls = StabilityClass::exponential;
  else if (v.asymptotic_ok)
    v.cls = StabilityClass::asymptotic;
  else
    v.cls = StabilityClass::none;

  v.certified = v.cls != StabilityClass::none;
  if (v.certified) v.reason.clear();
  if (v.cls == StabilityClass::asymptotic)
    v.reason = "not exponential at horizon";
  if (!v.certified && v.reason.empty()) v.reason = "no stable class detected";
  return v;
}

double periodic_test(const ScalarSignal& mu, double period, double tol, int starts) {
  if (period <= 0) throw std::invalid_argument("periodic_test: period must be > 0");
  const double a = mu.domain_start();
  CumulativeIntegral cum(mu, a, a + 2.0 * period, tol);
  double worst = -1e308;
  for (int i = 0; i <= starts; ++i) {
    const double s = a + period * (double)i / starts;
    worst = std::max(worst, cum.value_at(s + period) - cum.value_at(s));
  }
  return worst;
}

RatePairCheck check_rate_pair(const ScalarSignal& mu, double alpha, double beta,
                              const std::vector<std::pair<double, double>>& pairs,
                              double tol) {
  if (pairs.empty()) return {};
  double lo = 1e308, hi = -1e308;
  for (auto& [t0, t1] : pairs) {
    if (t1 < t0) throw std::invalid_argument("check_rate_pair: needs t >= t0");
    lo = std::min(lo, t0);
    hi = std::max(hi, t1);
  }
  CumulativeIntegral cum(mu, std::max(lo, mu.domain_start()), hi, 1e-11);
  RatePairCheck res;
  for (auto& [t0, t1] : pairs) {
    const double lhs = cum.value_at(t1) - cum.value_at(t0);
    const double margin = lhs + alpha * (t1 - t0) - beta;
    if (margin > res.worst_margin) {
      res.worst_margin = margin;
      res.worst_pair = {t0, t1};
    }
    if (margin > tol) res.violations++;
  }
  return res;
}

}  // namespace indef::quadsig
