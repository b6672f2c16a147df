#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace lwsurf {

struct Interval {
  double lo = 0;
  double hi = 0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Adaptive Gauss-Kronrod quadrature of f over [a, b] (b < a allowed) to
/// relative tolerance `tol`. Throws DomainError if the error estimate stays
/// above max(tol |I|, abs_floor).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          double abs_floor = 1e-15);

/// One classical fourth-order Runge-Kutta step for y' = f(t, y).
template <std::size_t N, typename F>
std::array<double, N> rk4_step(const F& f, double t, const std::array<double, N>& y, double h) {
  auto axpy = [](const std::array<double, N>& a, double s, const std::array<double, N>& b) {
    std::array<double, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  const auto k1 = f(t, y);
  const auto k2 = f(t + h / 2, axpy(y, h / 2, k1));
  const auto k3 = f(t + h / 2, axpy(y, h / 2, k2));
  const auto k4 = f(t + h, axpy(y, h, k3));
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = y[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return r;
}

/// Cubic Hermite interpolant on [x0, x1] with values y and slopes d.
/// Returns value and first derivative at x.
struct HermiteValue {
  double value;
  double slope;
};
HermiteValue cubic_hermite(double x0, double x1, double y0, double y1, double d0, double d1, double x);

}  // namespace lwsurf
