#include "lwsurf/jet.hpp"

#include <cmath>

namespace lwsurf {

Jet2 operator/(double s, const Jet2& b) {
  const double r = 1.0 / b.v0;
  return s * compose(r, -r * r, 2 * r * r * r, b);
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * (1.0 / b); }

Jet2 sin(const Jet2& f) {
  const double s = std::sin(f.v0), c = std::cos(f.v0);
  return compose(s, c, -s, f);
}

Jet2 cos(const Jet2& f) {
  const double s = std::sin(f.v0), c = std::cos(f.v0);
  return compose(c, -s, -c, f);
}

Jet2 sinh(const Jet2& f) {
  const double s = std::sinh(f.v0), c = std::cosh(f.v0);
  return compose(s, c, s, f);
}

Jet2 cosh(const Jet2& f) {
  const double s = std::sinh(f.v0), c = std::cosh(f.v0);
  return compose(c, s, c, f);
}

Jet2 exp(const Jet2& f) {
  const double e = std::exp(f.v0);
  return compose(e, e, e, f);
}

Jet2 log(const Jet2& f) {
  const double r = 1.0 / f.v0;
  return compose(std::log(f.v0), r, -r * r, f);
}

Jet2 sqrt(const Jet2& f) {
  const double s = std::sqrt(f.v0);
  const double d1 = 0.5 / s;
  return compose(s, d1, -0.5 * d1 / f.v0, f);
}

Jet2 asinh(const Jet2& f) {
  const double x = f.v0;
  const double q = 1.0 + x * x;
  const double d1 = 1.0 / std::sqrt(q);
  return compose(std::asinh(x), d1, -x * d1 / q, f);
}

Jet2 abs(const Jet2& f) {
  const double sign = f.v0 > 0 ? 1.0 : (f.v0 < 0 ? -1.0 : 0.0);
  return compose(std::abs(f.v0), sign, 0.0, f);
}

Jet2 pow(const Jet2& f, double k) {
  const double x = f.v0;
  if (k == 0) return Jet2::constant(1.0);
  if (k == 1) return f;
  if (k == 2) return f * f;
  return compose(std::pow(x, k), k * std::pow(x, k - 1), k * (k - 1) * std::pow(x, k - 2), f);
}

Jet2 pow(const Jet2& f, const Jet2& g) { return exp(g * log(f)); }

}  // namespace lwsurf
