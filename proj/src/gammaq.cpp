#include "lqpd/gammaq.hpp"

#include <algorithm>
#include <cmath>

namespace lqpd {

namespace {

// Tail of the envelope: int_X^inf e^{-x^q} dx <= bound(X).
double envelope_tail_bound(double q, double x) {
  const double e = std::exp(-std::pow(x, q));
  return e * std::max(1.0, std::pow(x, 1.0 - q)) * 2.0 / q;
}

double find_envelope_cut(double q, double tol) {
  double hi = 1.0;
  while (envelope_tail_bound(q, hi) > tol && hi < 1e9) hi *= 2.0;
  double lo = hi * 0.5;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (envelope_tail_bound(q, mid) > tol ? lo : hi) = mid;
  }
  return hi;
}

// Euler transformation (repeated averaging) of the partial-sum tail of an
// alternating series. `sums` holds the most recent partial sums.
double euler_average(std::vector<double> sums) {
  while (sums.size() > 1) {
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) {
      sums[i] = 0.5 * (sums[i] + sums[i + 1]);
    }
    sums.pop_back();
  }
  return sums.front();
}

}  // namespace

GammaQEvaluator::GammaQEvaluator(QExponent q, QuadratureSpec spec,
                                 bool build_table)
    : q_(q), spec_(spec) {
  spec_.validate();
  const double qq = q_.value();
  envelope_cut_ = find_envelope_cut(qq, 0.05 * spec_.abs_tol);
  head_power_ = qq >= 2.0 ? 1 : static_cast<int>(std::ceil(2.0 / qq));

  // Retain series terms while their magnitude at the switch point decreases;
  // structural zeros of sin(pi q k / 2) are skipped.
  double prev_mag = HUGE_VAL;
  for (int k = 1; k <= spec_.asym_terms; ++k) {
    const double s = sin_pi(qq * k / 2.0);
    if (s == 0.0) continue;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const double coeff =
        2.0 * sign * gamma_fn(qq * k + 1.0) / std::tgamma(k + 1.0) * s;
    const double mag =
        std::fabs(coeff) * std::pow(spec_.tail_switch, -qq * k - 1.0);
    if (mag > prev_mag) break;
    tail_terms_.push_back({qq * k, coeff});
    prev_mag = mag;
  }

  if (build_table) {
    const int count =
        static_cast<int>(std::round(spec_.tail_switch / kGammaQTableStep)) + 1;
    table_.resize(count);
    for (int i = 0; i < count; ++i) {
      table_[i] = quad_value(i * kGammaQTableStep);
    }
  }
}

double GammaQEvaluator::normalization() const {
  return 2.0 * gamma_fn(1.0 + 1.0 / q_.value());
}

double GammaQEvaluator::tail_series(double t) const {
  double acc = 0.0;
  for (const TailTerm& term : tail_terms_) {
    acc += term.coeff * std::pow(t, -term.exponent - 1.0);
  }
  return acc;
}

double GammaQEvaluator::operator()(double t) const {
  t = std::fabs(t);
  if (t >= spec_.tail_switch) return tail_series(t);
  if (!table_.empty()) return table_value(t);
  return quad_value(t);
}

double GammaQEvaluator::table_value(double t) const {
  // 6-point Lagrange interpolation on the uniform grid.
  const int n = static_cast<int>(table_.size());
  int base = static_cast<int>(std::floor(t / kGammaQTableStep)) - 2;
  base = std::clamp(base, 0, n - 6);
  double acc = 0.0;
  for (int i = 0; i < 6; ++i) {
    double li = 1.0;
    const double xi = (base + i) * kGammaQTableStep;
    for (int j = 0; j < 6; ++j) {
      if (j == i) continue;
      const double xj = (base + j) * kGammaQTableStep;
      li *= (t - xj) / (xi - xj);
    }
    acc += li * table_[base + i];
  }
  return acc;
}

double GammaQEvaluator::quad_value(double t) const {
  const double qq = q_.value();
  PanelBudget budget(spec_.max_panels);
  const double tol = 0.25 * spec_.abs_tol;

  // Head [0, h] with the cusp-removing substitution x = v^k (kq >= 2), so the
  // integrand stays smooth even for q < 1.
  const int k = head_power_;
  const auto head_integral = [&](double h) {
    const auto g = [&](double v) {
      const double x = std::pow(v, k);
      return k * std::pow(v, k - 1) * std::cos(t * x) *
             std::exp(-std::pow(x, qq));
    };
    return adaptive_gk(g, 0.0, std::pow(h, 1.0 / k), tol, spec_.rel_tol,
                       budget);
  };

  const double X = envelope_cut_;
  const double first_zero = t > 0.0 ? M_PI / (2.0 * t) : HUGE_VAL;
  if (first_zero >= X) {
    return 2.0 * head_integral(X);
  }

  double acc = head_integral(first_zero);
  const auto f = [&](double x) {
    return std::cos(t * x) * std::exp(-std::pow(x, qq));
  };

  // Half-period panels between consecutive zeros of cos(tx). Panel values
  // alternate in sign with the strictly decreasing envelope, so the
  // remainder is bounded by the last panel; Euler averaging accelerates the
  // slowly decaying (small q) regime.
  std::vector<double> recent_sums;
  double prev_extrap = HUGE_VAL;
  int stable = 0;
  double prev_panel = HUGE_VAL;
  for (int j = 1;; ++j) {
    const double z0 = (j - 0.5) * M_PI / t;
    const double z1 = (j + 0.5) * M_PI / t;
    const double panel =
        adaptive_gk(f, z0, std::min(z1, X), tol, spec_.rel_tol, budget, 12);
    acc += panel;
    if (std::fabs(panel) <= tol && std::fabs(panel) <= prev_panel) break;
    if (z1 >= X) break;
    prev_panel = std::fabs(panel);

    recent_sums.push_back(acc);
    if (recent_sums.size() > 16) recent_sums.erase(recent_sums.begin());
    if (recent_sums.size() >= 8) {
      const double extrap = euler_average(recent_sums);
      if (std::fabs(extrap - prev_extrap) <= tol) {
        if (++stable >= 2) return 2.0 * extrap;
      } else {
        stable = 0;
      }
      prev_extrap = extrap;
    }
  }
  return 2.0 * acc;
}

double GammaQEvaluator::moment(const MomentOrder& alpha) const {
  if (alpha.q() != q_.value()) {
    throw DomainError("sq_numeric: alpha was validated against another q");
  }
  const double a = alpha.value();
  PanelBudget budget(spec_.max_panels);
  const double tol = 0.1 * spec_.abs_tol;
  const double t0 = std::min(spec_.smooth_cut, spec_.tail_switch);

  // Head [0, t0]: remove the |t|^alpha singularity for alpha < 0 via
  // t = u^{1/(1+alpha)}, which flattens the weight to du.
  double head;
  if (a < 0.0) {
    const double p = 1.0 / (1.0 + a);
    head = adaptive_gk([&](double u) { return (*this)(std::pow(u, p)); }, 0.0,
                       std::pow(t0, 1.0 + a), tol, spec_.rel_tol, budget) *
           p;
  } else {
    head = adaptive_gk([&](double t) { return std::pow(t, a) * (*this)(t); },
                       0.0, t0, tol, spec_.rel_tol, budget);
  }

  // Mid panels [t0, tail_switch], roughly unit-width.
  double mid = 0.0;
  const auto f = [&](double t) { return std::pow(t, a) * (*this)(t); };
  for (double lo = t0; lo < spec_.tail_switch; lo += 1.0) {
    const double hi = std::min(lo + 1.0, spec_.tail_switch);
    mid += adaptive_gk(f, lo, hi, tol, spec_.rel_tol, budget, 20);
  }

  // Analytic tail: the retained series terms integrated term by term.
  double tail = 0.0;
  const double T = spec_.tail_switch;
  for (const TailTerm& term : tail_terms_) {
    // int_T^inf t^{a - exponent - 1} dt; exponent > a holds since a < q.
    tail += term.coeff * std::pow(T, a - term.exponent) / (term.exponent - a);
  }

  return 2.0 * (head + mid + tail);
}

std::optional<double> GammaQEvaluator::first_sign_change(
    double search_limit) const {
  if (!(search_limit > 0.0)) {
    throw DomainError("first_sign_change: search_limit must be positive");
  }
  const double threshold = -spec_.abs_tol;
  const double step = 0.05;
  double prev_t = 0.0;
  for (double t = step; t <= search_limit + 0.5 * step; t += step) {
    const double v = (*this)(std::min(t, search_limit));
    if (v < threshold) {
      double lo = prev_t;
      double hi = std::min(t, search_limit);
      while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        ((*this)(mid) < threshold ? hi : lo) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_t = t;
  }
  return std::nullopt;
}

}  // namespace lqpd
