#include "lqpd/specfun.hpp"

#include <cmath>
#include <string>

namespace lqpd {

namespace {

// Lanczos coefficients for g = 607/128 (Godfrey's 15-term set).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double lanczos_gamma_positive(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double a = kLanczosC[0];
  for (int k = 1; k < 15; ++k) a += kLanczosC[k] / (z + k);
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double distance_to_nonpositive_integer(double x) {
  if (x > 0.5) return x;
  return std::fabs(x - std::round(x));
}

}  // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < -1.0) r += 2.0;
  if (r > 1.0) r -= 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(M_PI * r);
}

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_fn: non-finite argument");
  if (x <= 0.5 && distance_to_nonpositive_integer(x) < kExclusionTol) {
    throw PoleError("gamma_fn: argument within pole tolerance of " +
                    std::to_string(std::round(x)));
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return M_PI / (sin_pi(x) * lanczos_gamma_positive(1.0 - x));
  }
  return lanczos_gamma_positive(x);
}

QExponent::QExponent(double q) : q_(q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw DomainError("QExponent: q must be a positive real");
  }
}

MomentOrder::MomentOrder(double alpha, const QExponent& q)
    : alpha_(alpha), q_(q.value()) {
  if (!std::isfinite(alpha) || alpha <= -1.0 || alpha >= q_) {
    throw DomainError("MomentOrder: alpha must lie in (-1, q)");
  }
  const double top = 2.0 * std::floor(q_ / 2.0);
  for (double e = 0.0; e <= top; e += 2.0) {
    if (std::fabs(alpha - e) < kExclusionTol) {
      throw DomainError("MomentOrder: alpha within exclusion tolerance of " +
                        std::to_string(e));
    }
  }
}

RadialPower::RadialPower(double beta_, int n_) : beta(beta_), n(n_) {
  if (n < 1) throw DomainError("RadialPower: dimension must be >= 1");
  if (!std::isfinite(beta)) throw DomainError("RadialPower: beta must be finite");
}

double parseval_constant(double beta) {
  if (!std::isfinite(beta) || beta <= -1.0) {
    throw DomainError("parseval_constant: beta must lie in (-1, inf)");
  }
  if (beta >= 0.0 &&
      std::fabs(beta - 2.0 * std::round(beta / 2.0)) < kExclusionTol) {
    throw DomainError("parseval_constant: beta at an excluded even integer");
  }
  return std::pow(2.0, beta + 1.0) * std::sqrt(M_PI) *
         gamma_fn((beta + 1.0) / 2.0) / gamma_fn(-beta / 2.0);
}

double sq_closed_form(const QExponent& q, const MomentOrder& alpha) {
  if (alpha.q() != q.value()) {
    throw DomainError("sq_closed_form: alpha was validated against another q");
  }
  const double a = alpha.value();
  const double qq = q.value();
  return std::pow(2.0, a + 2.0) * std::sqrt(M_PI) * gamma_fn(-a / qq) *
         gamma_fn((a + 1.0) / 2.0) / (qq * gamma_fn(-a / 2.0));
}

double tail_constant(const QExponent& q) {
  return 2.0 * gamma_fn(q.value() + 1.0) * sin_pi(q.value() / 2.0);
}

}  // namespace lqpd
