#pragma once

// Linear algebra of Minkowski 3-space: R^3 with the metric
// dx1^2 + dx2^2 - dx3^2.

#include <array>
#include <string_view>

namespace lwsurf {

/// Point or vector of Minkowski 3-space in canonical coordinates.
///
/// The scalar is a template parameter so the same formulas can be evaluated
/// over std::complex<double> (used when continuing foliated surfaces to
/// imaginary parameter values). Everything outside that path uses MVec3.
template <typename T>
struct BasicVec3 {
  T x1{};
  T x2{};
  T x3{};

  friend constexpr BasicVec3 operator+(const BasicVec3& a, const BasicVec3& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend constexpr BasicVec3 operator-(const BasicVec3& a, const BasicVec3& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend constexpr BasicVec3 operator-(const BasicVec3& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend constexpr BasicVec3 operator*(const T& s, const BasicVec3& a) {
    return {s * a.x1, s * a.x2, s * a.x3};
  }
  friend constexpr BasicVec3 operator*(const BasicVec3& a, const T& s) { return s * a; }
  friend constexpr BasicVec3 operator/(const BasicVec3& a, const T& s) {
    return {a.x1 / s, a.x2 / s, a.x3 / s};
  }
  friend constexpr bool operator==(const BasicVec3&, const BasicVec3&) = default;
};

using MVec3 = BasicVec3<double>;

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

std::string_view to_string(CausalCharacter c);

/// <a,b> = a1 b1 + a2 b2 - a3 b3.
template <typename T>
constexpr T lorentz_dot(const BasicVec3<T>& a, const BasicVec3<T>& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3;
}

/// Lorentzian cross product, fixed by <a^b, w> = det[a, b, w] for every w:
/// the Euclidean cross product with its third component negated.
template <typename T>
constexpr BasicVec3<T> lorentz_cross(const BasicVec3<T>& a, const BasicVec3<T>& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, -(a.x1 * b.x2 - a.x2 * b.x1)};
}

/// det of the matrix with rows a, b, c. Evaluated along the same arithmetic
/// path as lorentz_dot(lorentz_cross(a, b), c), so the two agree bitwise.
template <typename T>
constexpr T triple_product(const BasicVec3<T>& a, const BasicVec3<T>& b, const BasicVec3<T>& c) {
  return c.x1 * (a.x2 * b.x3 - a.x3 * b.x2) + c.x2 * (a.x3 * b.x1 - a.x1 * b.x3) -
         c.x3 * (-(a.x1 * b.x2 - a.x2 * b.x1));
}

double euclidean_norm_squared(const MVec3& a);
bool is_finite(const MVec3& a);

/// Lightlike when |<a,a>| <= tol * (1 + |a|_E^2); the zero vector is spacelike.
CausalCharacter causal_character(const MVec3& a, double tol);

/// sqrt(-<a,a>). Throws NotTimelike when <a,a> >= 0.
double timelike_norm(const MVec3& a);

/// Row-major 3x3 matrix acting on column vectors.
struct LinearMap3 {
  std::array<std::array<double, 3>, 3> rows{};

  MVec3 operator()(const MVec3& p) const {
    return {rows[0][0] * p.x1 + rows[0][1] * p.x2 + rows[0][2] * p.x3,
            rows[1][0] * p.x1 + rows[1][1] * p.x2 + rows[1][2] * p.x3,
            rows[2][0] * p.x1 + rows[2][1] * p.x2 + rows[2][2] * p.x3};
  }
};

/// The one-parameter groups of Lorentz rotations fixing a timelike (x3),
/// spacelike (x1) or lightlike ((0,1,1)) axis pointwise.
LinearMap3 rotation_about_timelike_axis(double t);
LinearMap3 rotation_about_spacelike_axis(double t);
LinearMap3 rotation_about_lightlike_axis(double t);

}  // namespace lwsurf
