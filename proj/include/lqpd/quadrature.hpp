#ifndef LQPD_QUADRATURE_HPP
#define LQPD_QUADRATURE_HPP

#include <functional>

#include "lqpd/errors.hpp"

namespace lqpd {

// Tolerances and cut points shared by every semi-infinite integral in the
// artifact. tail_switch is the t beyond which the asymptotic series replaces
// quadrature; asym_terms caps the series length.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  double smooth_cut = 1.0;
  int max_panels = 2000;
  double tail_switch = 40.0;
  int asym_terms = 3;

  void validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0))
      throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_panels < 1) throw DomainError("QuadratureSpec: max_panels >= 1");
    if (asym_terms < 1) throw DomainError("QuadratureSpec: asym_terms >= 1");
    if (!(tail_switch > 0) || !(smooth_cut > 0))
      throw DomainError("QuadratureSpec: cut points must be positive");
  }
};

// Shared panel budget for one top-level evaluation. Each Gauss-Kronrod
// application consumes one unit.
class PanelBudget {
 public:
  explicit PanelBudget(int max_panels) : left_(max_panels) {}
  void consume() {
    if (--left_ < 0) {
      throw ConvergenceError("panel budget exhausted before tolerance met");
    }
  }
  int remaining() const { return left_; }

 private:
  int left_;
};

struct GkResult {
  double value;
  double error;  // |Kronrod - Gauss| scaled estimate
};

/// One 15-point Gauss-Kronrod application on [a, b].
GkResult gk15(const std::function<double(double)>& f, double a, double b);

/// Adaptive bisection driven by the GK15 error estimate. Accepts a panel when
/// the estimate is below max(abs_tol, rel_tol*|value|); splits otherwise, down
/// to max_depth levels. Draws panels from the shared budget.
double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, double rel_tol, PanelBudget& budget,
                   int max_depth = 40);

}  // namespace lqpd

#endif
