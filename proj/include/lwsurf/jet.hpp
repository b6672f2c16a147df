#pragma once

// Order-2 forward-mode jets: a value with its first and second derivative
// in one variable.

namespace lwsurf {

struct Jet2 {
  double v0 = 0;  // f
  double v1 = 0;  // f'
  double v2 = 0;  // f''

  static constexpr Jet2 constant(double c) { return {c, 0, 0}; }
  static constexpr Jet2 variable(double x) { return {x, 1, 0}; }

  constexpr bool is_constant() const { return v1 == 0 && v2 == 0; }

  Jet2& operator+=(const Jet2& b) {
    v0 += b.v0;
    v1 += b.v1;
    v2 += b.v2;
    return *this;
  }
  Jet2& operator-=(const Jet2& b) {
    v0 -= b.v0;
    v1 -= b.v1;
    v2 -= b.v2;
    return *this;
  }
};

constexpr Jet2 operator-(const Jet2& a) { return {-a.v0, -a.v1, -a.v2}; }
constexpr Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.v0 + b.v0, a.v1 + b.v1, a.v2 + b.v2}; }
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.v0 - b.v0, a.v1 - b.v1, a.v2 - b.v2}; }
constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v0 * b.v0, a.v1 * b.v0 + a.v0 * b.v1, a.v2 * b.v0 + 2 * a.v1 * b.v1 + a.v0 * b.v2};
}
constexpr Jet2 operator*(double s, const Jet2& a) { return {s * a.v0, s * a.v1, s * a.v2}; }
constexpr Jet2 operator*(const Jet2& a, double s) { return s * a; }
constexpr Jet2 operator+(const Jet2& a, double s) { return {a.v0 + s, a.v1, a.v2}; }
constexpr Jet2 operator+(double s, const Jet2& a) { return a + s; }
constexpr Jet2 operator-(const Jet2& a, double s) { return {a.v0 - s, a.v1, a.v2}; }
constexpr Jet2 operator-(double s, const Jet2& a) { return {s - a.v0, -a.v1, -a.v2}; }

/// Chain rule: g(f) given g, g', g'' evaluated at f.v0.
constexpr Jet2 compose(double g0, double g1, double g2, const Jet2& f) {
  return {g0, g1 * f.v1, g2 * f.v1 * f.v1 + g1 * f.v2};
}

// The functions below do not check their domain; callers that accept
// untrusted input (the expression evaluator) validate arguments first.
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator/(double s, const Jet2& b);
Jet2 sin(const Jet2& f);
Jet2 cos(const Jet2& f);
Jet2 sinh(const Jet2& f);
Jet2 cosh(const Jet2& f);
Jet2 exp(const Jet2& f);
Jet2 log(const Jet2& f);
Jet2 sqrt(const Jet2& f);
Jet2 asinh(const Jet2& f);
Jet2 abs(const Jet2& f);
/// f^k for a constant real exponent k, using the power rule.
Jet2 pow(const Jet2& f, double k);
/// f^g for a non-constant exponent: exp(g log f). Requires f > 0.
Jet2 pow(const Jet2& f, const Jet2& g);

}  // namespace lwsurf
