#include "lwsurf/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "lwsurf/errors.hpp"
#include "lwsurf/expr.hpp"

namespace lwsurf {

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          double abs_floor) {
  if (a == b) return 0.0;
  if (b < a) return -integrate_adaptive(f, b, a, tol, abs_floor);
  double error = 0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 20, tol, &error);
  if (!std::isfinite(value) || error > std::max(tol * std::abs(value), abs_floor) * 10)
    throw DomainError("adaptive quadrature did not converge on [" + format_real(a) + ", " +
                      format_real(b) + "] (error estimate " + format_real(error) + ")");
  return value;
}

HermiteValue cubic_hermite(double x0, double x1, double y0, double y1, double d0, double d1, double x) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  const double value = h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
  const double dh00 = 6 * t2 - 6 * t;
  const double dh10 = 3 * t2 - 4 * t + 1;
  const double dh01 = -6 * t2 + 6 * t;
  const double dh11 = 3 * t2 - 2 * t;
  const double slope = (dh00 * y0 + dh01 * y1) / h + dh10 * d0 + dh11 * d1;
  return {value, slope};
}

}  // namespace lwsurf
