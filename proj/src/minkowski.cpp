#include "lwsurf/minkowski.hpp"

#include <cmath>

#include "lwsurf/errors.hpp"

namespace lwsurf {

std::string_view to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike:
      return "spacelike";
    case CausalCharacter::Timelike:
      return "timelike";
    case CausalCharacter::Lightlike:
      return "lightlike";
  }
  return "unknown";
}

double euclidean_norm_squared(const MVec3& a) { return a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3; }

bool is_finite(const MVec3& a) {
  return std::isfinite(a.x1) && std::isfinite(a.x2) && std::isfinite(a.x3);
}

CausalCharacter causal_character(const MVec3& a, double tol) {
  if (a == MVec3{}) return CausalCharacter::Spacelike;
  const double q = lorentz_dot(a, a);
  if (std::abs(q) <= tol * (1.0 + euclidean_norm_squared(a))) return CausalCharacter::Lightlike;
  return q > 0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

double timelike_norm(const MVec3& a) {
  const double q = lorentz_dot(a, a);
  if (!(q < 0)) throw NotTimelike("vector is not timelike (<a,a> = " + std::to_string(q) + ")");
  return std::sqrt(-q);
}

LinearMap3 rotation_about_timelike_axis(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return {{{{c, s, 0}, {-s, c, 0}, {0, 0, 1}}}};
}

LinearMap3 rotation_about_spacelike_axis(double t) {
  const double c = std::cosh(t), s = std::sinh(t);
  return {{{{1, 0, 0}, {0, c, s}, {0, s, c}}}};
}

LinearMap3 rotation_about_lightlike_axis(double t) {
  const double h = 0.5 * t * t;
  return {{{{1, -t, t}, {t, 1 - h, h}, {t, -h, 1 + h}}}};
}

}  // namespace lwsurf
