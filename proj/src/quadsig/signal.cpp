#include "indef/quadsig/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "indef/exprlang/eval.hpp"
#include "indef/exprlang/parse.hpp"
#include "indef/kernels/batch.hpp"

namespace indef::quadsig {

std::vector<double> KinkSpec::inside(double a, double b, std::size_t cap) const {
  std::vector<double> out;
  for (double p : points)
    if (p > a && p < b) out.push_back(p);
  for (const auto& rule : periodic) {
    if (rule.period <= 0) continue;
    double k0 = std::ceil((a - rule.offset) / rule.period);
    for (double k = k0;; k += 1.0) {
      double p = rule.offset + k * rule.period;
      if (p >= b) break;
      if (p > a) out.push_back(p);
      if (out.size() > cap * 2) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-14; }),
            out.end());
  if (out.size() > cap) out.resize(cap);
  return out;
}

KinkSpec KinkSpec::merged(const KinkSpec& a, const KinkSpec& b) {
  KinkSpec out = a;
  out.points.insert(out.points.end(), b.points.begin(), b.points.end());
  out.periodic.insert(out.periodic.end(), b.periodic.begin(), b.periodic.end());
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()),
                   out.points.end());
  return out;
}

ScalarSignal ScalarSignal::from_expr(exprlang::Expr e, double domain_start,
                                     KinkSpec kinks) {
  ScalarSignal s;
  auto backend = std::make_shared<ExprBackend>();
  backend->program = exprlang::compile(e);
  if (backend->program.max_x > 0 || backend->program.max_u > 0 ||
      backend->program.uses_s)
    throw std::invalid_argument("scalar signal may reference only t");
  backend->expr = std::move(e);
  s.impl_ = std::move(backend);
  s.kinks_ = std::move(kinks);
  s.domain_start_ = domain_start;
  return s;
}

ScalarSignal ScalarSignal::from_source(std::string_view source, double domain_start,
                                       KinkSpec kinks) {
  exprlang::Dims dims;
  dims.allow_t = true;
  return from_expr(exprlang::parse(source, dims), domain_start, std::move(kinks));
}

ScalarSignal ScalarSignal::piecewise_constant(std::vector<double> knots,
                                              std::vector<double> values,
                                              double domain_start) {
  if (values.size() != knots.size() + 1)
    throw std::invalid_argument("piecewise_constant: need knots.size()+1 values");
  if (!std::is_sorted(knots.begin(), knots.end()))
    throw std::invalid_argument("piecewise_constant: knots must be sorted");
  ScalarSignal s;
  auto backend = std::make_shared<PwcBackend>();
  backend->knots = std::move(knots);
  backend->values = std::move(values);
  s.kinks_.points = backend->knots;
  s.pwc_ = std::move(backend);
  s.domain_start_ = domain_start;
  return s;
}

const exprlang::Expr& ScalarSignal::expr() const {
  if (!impl_) throw std::logic_error("signal has no expression backend");
  return impl_->expr;
}

double ScalarSignal::operator()(double t) const {
  if (impl_) {
    exprlang::Binding b;
    b.t = t;
    b.has_s = false;
    return exprlang::eval(impl_->expr, b);
  }
  if (pwc_) {
    auto it = std::upper_bound(pwc_->knots.begin(), pwc_->knots.end(), t);
    return pwc_->values[(std::size_t)(it - pwc_->knots.begin())];
  }
  throw std::logic_error("empty signal");
}

void ScalarSignal::eval_batch(const double* t, std::size_t count, double* out) const {
  if (impl_) {
    kernels::BatchInputs in;
    in.t = t;
    in.count = count;
    kernels::eval_batch(impl_->program, in, out);
    return;
  }
  if (pwc_) {
    for (std::size_t i = 0; i < count; ++i) {
      auto it = std::upper_bound(pwc_->knots.begin(), pwc_->knots.end(), t[i]);
      out[i] = pwc_->values[(std::size_t)(it - pwc_->knots.begin())];
    }
    return;
  }
  throw std::logic_error("empty signal");
}

}  // namespace indef::quadsig
