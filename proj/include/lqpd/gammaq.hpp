#ifndef LQPD_GAMMAQ_HPP
#define LQPD_GAMMAQ_HPP

#include <optional>
#include <vector>

#include "lqpd/quadrature.hpp"
#include "lqpd/specfun.hpp"

namespace lqpd {

// Evaluator for gamma_q(t) = (exp(-|x|^q))^(t), with the transform fixed as
// int_R e^{-itx} e^{-|x|^q} dx = 2 int_0^inf cos(tx) e^{-x^q} dx.
//
// For |t| < spec.tail_switch the value comes from adaptive Gauss-Kronrod
// panels between consecutive zeros of cos(tx), with Euler averaging over the
// alternating panel sums. Beyond the switch it comes from the alternating
// asymptotic series 2 sum_k (-1)^{k+1} Gamma(qk+1)/k! sin(pi q k/2) t^{-qk-1},
// truncated at the smallest-magnitude term.
//
// Construction may precompute a uniform-grid panel table on [0, tail_switch]
// (6-point Lagrange interpolation, absolute error well below 1e-10); the
// table is immutable after construction, so evaluation stays re-entrant.
class GammaQEvaluator {
 public:
  struct TailTerm {
    double exponent;  // term is coeff * t^{-exponent-1}
    double coeff;
  };

  explicit GammaQEvaluator(QExponent q, QuadratureSpec spec = {},
                           bool build_table = false);

  double q() const { return q_.value(); }
  const QExponent& q_exponent() const { return q_; }
  const QuadratureSpec& spec() const { return spec_; }

  /// gamma_q(t); even in t by construction (evaluates |t|).
  double operator()(double t) const;

  /// gamma_q(0) = 2 Gamma(1 + 1/q).
  double normalization() const;

  /// Asymptotic tail value; valid for t >= spec.tail_switch.
  double tail_series(double t) const;

  /// Terms retained by the smallest-term rule at t = tail_switch.
  const std::vector<TailTerm>& tail_terms() const { return tail_terms_; }

  /// S_q(alpha) = int_R |t|^alpha gamma_q(t) dt by direct quadrature:
  /// singularity-aware head, panel sweep to tail_switch, analytic tail.
  double moment(const MomentOrder& alpha) const;

  /// Smallest t <= search_limit with gamma_q(t) < -abs_tol, bracketed to
  /// width 1e-6; nullopt when the transform stays above -abs_tol.
  std::optional<double> first_sign_change(double search_limit) const;

  bool has_table() const { return !table_.empty(); }

 private:
  double quad_value(double t) const;
  double table_value(double t) const;

  QExponent q_;
  QuadratureSpec spec_;
  double envelope_cut_;       // x beyond which e^{-x^q} is below tolerance
  int head_power_;            // cusp-removing substitution exponent
  std::vector<TailTerm> tail_terms_;
  std::vector<double> table_;  // values on the uniform grid, step kTableStep
};

inline constexpr double kGammaQTableStep = 0.02;

// Free-function spellings used by the rest of the artifact.
inline double gamma_q(const GammaQEvaluator& eval, double t) { return eval(t); }
inline double sq_numeric(const GammaQEvaluator& eval, const MomentOrder& alpha) {
  return eval.moment(alpha);
}
inline std::optional<double> first_sign_change(const GammaQEvaluator& eval,
                                               double search_limit) {
  return eval.first_sign_change(search_limit);
}

}  // namespace lqpd

#endif
