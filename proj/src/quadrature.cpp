#include "lqpd/quadrature.hpp"

#include <cmath>

namespace lqpd {

namespace {

// 15-point Kronrod / 7-point Gauss abscissae and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.2293532201052922e-1, 0.6309209262997855e-1, 0.1047900103222502,
    0.1406532597155259,    0.1690047266392679,    0.1903505780647854,
    0.2044329400752989,    0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

}  // namespace

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[(j - 1) / 2] * fsum;
  }
  return {resk * h, std::fabs(resk - resg) * std::fabs(h)};
}

namespace {

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double abs_tol, double rel_tol, PanelBudget& budget,
                    int depth) {
  budget.consume();
  const GkResult r = gk15(f, a, b);
  if (r.error <= std::max(abs_tol, rel_tol * std::fabs(r.value)) || depth <= 0) {
    return r.value;
  }
  const double m = 0.5 * (a + b);
  const double half_tol = 0.5 * abs_tol;
  return adaptive_rec(f, a, m, half_tol, rel_tol, budget, depth - 1) +
         adaptive_rec(f, m, b, half_tol, rel_tol, budget, depth - 1);
}

}  // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, double rel_tol, PanelBudget& budget,
                   int max_depth) {
  if (a == b) return 0.0;
  return adaptive_rec(f, a, b, abs_tol, rel_tol, budget, max_depth);
}

}  // namespace lqpd
