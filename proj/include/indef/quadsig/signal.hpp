#pragma once

// Scalar signals of one real argument (written as `t` in expression form).
// A signal is either a parsed expression or a piecewise-constant table; both
// carry kink hints: points where the function is non-smooth, so quadrature
// can split integration panels there.

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "indef/exprlang/ast.hpp"
#include "indef/exprlang/program.hpp"

namespace indef::quadsig {

struct PeriodicKinks {
  double offset = 0.0;
  double period = 1.0;  // kinks at offset + k*period
};

struct KinkSpec {
  std::vector<double> points;
  std::vector<PeriodicKinks> periodic;

  /// Kinks strictly inside (a, b), sorted ascending, deduplicated. At most
  /// `cap` points are returned (the rest are left to adaptive refinement).
  std::vector<double> inside(double a, double b, std::size_t cap = 1 << 20) const;

  [[nodiscard]] bool empty() const { return points.empty() && periodic.empty(); }

  static KinkSpec merged(const KinkSpec& a, const KinkSpec& b);
};

class ScalarSignal {
 public:
  ScalarSignal() = default;

  static ScalarSignal from_expr(exprlang::Expr e, double domain_start = 0.0,
                                KinkSpec kinks = {});
  /// Parses `source` as an expression over t alone.
  static ScalarSignal from_source(std::string_view source, double domain_start = 0.0,
                                  KinkSpec kinks = {});
  /// Step function: value[i] holds on (knot[i-1], knot[i]); knots become kinks.
  static ScalarSignal piecewise_constant(std::vector<double> knots,
                                         std::vector<double> values,
                                         double domain_start = 0.0);

  /// Checked single-point evaluation (domain errors throw).
  double operator()(double t) const;

  /// Unchecked batch evaluation; IEEE values propagate.
  void eval_batch(const double* t, std::size_t count, double* out) const;

  [[nodiscard]] const KinkSpec& kinks() const { return kinks_; }
  [[nodiscard]] double domain_start() const { return domain_start_; }
  [[nodiscard]] bool is_expr() const { return impl_ != nullptr; }
  [[nodiscard]] const exprlang::Expr& expr() const;

 private:
  struct ExprBackend {
    exprlang::Expr expr;
    exprlang::Program program;
  };
  struct PwcBackend {
    std::vector<double> knots;
    std::vector<double> values;
  };

  std::shared_ptr<const ExprBackend> impl_;
  std::shared_ptr<const PwcBackend> pwc_;
  KinkSpec kinks_;
  double domain_start_ = 0.0;
};

}  // namespace indef::quadsig
