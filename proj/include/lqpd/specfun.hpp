#ifndef LQPD_SPECFUN_HPP
#define LQPD_SPECFUN_HPP

#include <string_view>

#include "lqpd/errors.hpp"

namespace lqpd {

// Absolute distance to an excluded integer (or Gamma pole) below which
// arguments are rejected; downstream formulas blow up like 1/distance.
inline constexpr double kExclusionTol = 1e-6;

/// sin(pi*x) with exact argument reduction; exactly zero at integers.
double sin_pi(double x);

/// Gamma function on the real line, Lanczos approximation with reflection
/// for x < 1/2. Relative error ~1e-15 on |x| <= 30.
/// Throws PoleError within kExclusionTol of {0, -1, -2, ...}.
double gamma_fn(double x);

// Norm exponent q > 0 with its regime tag.
class QExponent {
 public:
  explicit QExponent(double q);
  double value() const { return q_; }
  bool supercritical() const { return q_ > 2.0; }
  std::string_view regime() const {
    return supercritical() ? "supercritical" : "classical";
  }

 private:
  double q_;
};

// Moment order alpha paired with a QExponent: alpha in (-1, q) and not
// within kExclusionTol of {0, 2, 4, ..., 2*floor(q/2)}.
class MomentOrder {
 public:
  MomentOrder(double alpha, const QExponent& q);
  double value() const { return alpha_; }
  double q() const { return q_; }

 private:
  double alpha_;
  double q_;
};

// Exponent of the norm together with the ambient dimension. The coupled
// constraints (-n < beta < q n, beta/q not a non-negative integer) are
// checked where a QExponent is available.
struct RadialPower {
  RadialPower(double beta, int n);
  double beta;
  int n;
};

/// c_beta = 2^{beta+1} sqrt(pi) Gamma((beta+1)/2) / Gamma(-beta/2),
/// beta in (-1, inf) off the even integers. Positive on (-1,0),
/// negative on (0,2).
double parseval_constant(double beta);

/// S_q(alpha) = 2^{alpha+2} sqrt(pi) Gamma(-alpha/q) Gamma((alpha+1)/2)
///              / (q Gamma(-alpha/2)).
/// Positive on (-1,2)\{0}, negative on (2, min(4,q)).
double sq_closed_form(const QExponent& q, const MomentOrder& alpha);

/// A_q = 2 Gamma(q+1) sin(pi q / 2); exactly zero at even integer q.
double tail_constant(const QExponent& q);

}  // namespace lqpd

#endif
