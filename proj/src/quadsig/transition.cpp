#include "indef/quadsig/transition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace indef::quadsig {

std::vector<double> build_grid(double a, double b, const GridOptions& opt,
                               const KinkSpec* kinks) {
  if (b < a) throw std::invalid_argument("build_grid: requires a <= b");
  std::vector<double> nodes;
  nodes.push_back(a);
  if (b == a) return nodes;

  const double cap = std::max(opt.step0, (b - a) / opt.cap_cells);
  double step = opt.step0;
  double t = a;
  while (t < b) {
    t += step;
    if (t >= b - 0.25 * step) t = b;
    nodes.push_back(t);
    step = std::min(step * opt.growth, cap);
  }

  std::vector<double> extra = opt.must_include;
  if (kinks) {
    auto kk = kinks->inside(a, b, opt.kink_cap);
    extra.insert(extra.end(), kk.begin(), kk.end());
  }
  for (double p : extra)
    if (p > a && p < b) nodes.push_back(p);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end(),
                          [](double x, double y) { return std::abs(x - y) < 1e-13; }),
              nodes.end());
  if (nodes.back() != b) nodes.back() = b;
  return nodes;
}

CumulativeIntegral::CumulativeIntegral(ScalarSignal signal, double start, double end,
                                       double tol, GridOptions grid)
    : signal_(std::move(signal)) {
  if (end < start)
    throw std::invalid_argument("CumulativeIntegral: requires start <= end");
  nodes_ = build_grid(start, end, grid, &signal_.kinks());
  values_.resize(nodes_.size());
  values_[0] = 0.0;
  const double span = std::max(end - start, 1e-300);
  cell_tol_ = std::max(tol / span, 1e-16);  // per unit length
  double acc = 0.0;
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    const double len = nodes_[i] - nodes_[i - 1];
    acc += integrate(signal_, nodes_[i - 1], nodes_[i],
                     std::max(cell_tol_ * len, 1e-15));
    values_[i] = acc;
  }
}

std::size_t CumulativeIntegral::node_before(double t) const {
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  if (it == nodes_.begin()) return 0;
  return (std::size_t)(it - nodes_.begin()) - 1;
}

double CumulativeIntegral::value_at(double t) const {
  if (t < nodes_.front() - 1e-9 || t > nodes_.back() + 1e-9)
    throw std::invalid_argument("CumulativeIntegral: t outside cached window");
  t = std::clamp(t, nodes_.front(), nodes_.back());
  const std::size_t i = node_before(t);
  if (t == nodes_[i]) return values_[i];
  const double len = t - nodes_[i];
  return values_[i] + integrate(signal_, nodes_[i], t,
                                std::max(cell_tol_ * len, 1e-15));
}

TransitionFactor::TransitionFactor(ScalarSignal mu, double start, double end,
                                   double tol)
    : cum_(std::move(mu), start, end, tol) {}

double TransitionFactor::log_phi(double t, double s) const {
  if (t < s) throw std::invalid_argument("phi: requires t >= s");
  return cum_.value_at(t) - cum_.value_at(s);
}

double TransitionFactor::phi(double t, double s) const {
  const double lg = log_phi(t, s);
  if (lg > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(lg);
}

double transition_factor(const ScalarSignal& mu, double t, double t0, double tol) {
  if (t < t0) throw std::invalid_argument("transition_factor: requires t >= t0");
  const double lg = integrate(mu, t0, t, tol);
  if (lg > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(lg);
}

}  // namespace indef::quadsig
