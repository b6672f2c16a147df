#include "lwsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lwsurf/errors.hpp"
#include "lwsurf/expr.hpp"

namespace lwsurf {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

void require_finite(const SurfaceJet& j) {
  if (!is_finite(j.X) || !is_finite(j.Xu) || !is_finite(j.Xv) || !is_finite(j.Xuu) ||
      !is_finite(j.Xuv) || !is_finite(j.Xvv))
    throw DomainError("surface jet has non-finite components");
}

}  // namespace

WeingartenSpec::WeingartenSpec(double m, double n) : m_(m), n_(n) {
  if (m == 0 || !std::isfinite(m) || !std::isfinite(n))
    throw DomainError("Weingarten relation needs finite m != 0 and finite n");
}

namespace {

// m weights floored at 1: with m = -1 the (1+m)^2 weight vanishes and the
// scale would otherwise collapse onto |LHS| itself.
double inner_scale(const DeterminantTerms& t, double m, double n) {
  const double wm = std::max(std::abs(m), 1.0), wk = std::max((1 + m) * (1 + m), 1.0);
  return wm * t.H1 * t.H1 + wk * std::abs(t.Q * t.K1) + n * n * std::abs(t.Q * t.Q * t.Q);
}

}  // namespace

double eq5_scale(const DeterminantTerms& t, const WeingartenSpec& s) {
  const double m = s.m(), n = s.n();
  const double inner = inner_scale(t, m, n);
  return inner * inner + n * n * (1 - m) * (1 - m) * t.H1 * t.H1 * std::abs(t.Q * t.Q * t.Q);
}

double reduced_scale(const DeterminantTerms& t, double m) { return inner_scale(t, m, 0); }

FundamentalForms fundamental_forms(const SurfaceJet& j) {
  require_finite(j);
  FundamentalForms ff;
  ff.E = lorentz_dot(j.Xu, j.Xu);
  ff.F = lorentz_dot(j.Xu, j.Xv);
  ff.G = lorentz_dot(j.Xv, j.Xv);
  ff.Q = ff.E * ff.G - ff.F * ff.F;
  if (!(ff.Q > 0))
    throw NotSpacelike("induced metric is not positive definite (Q = " + format_real(ff.Q) + ")");
  const MVec3 cross = lorentz_cross(j.Xu, j.Xv);
  ff.N = cross / timelike_norm(cross);
  ff.e = lorentz_dot(ff.N, j.Xuu);
  ff.f = lorentz_dot(ff.N, j.Xuv);
  ff.g = lorentz_dot(ff.N, j.Xvv);
  return ff;
}

FundamentalForms fundamental_forms(const SurfacePatch& patch, double u, double v) {
  return fundamental_forms(patch.jet(u, v));
}

CurvatureData curvature_data(const SurfaceJet& j) {
  require_finite(j);
  const DeterminantTerms t = determinant_terms(j);
  if (!(t.Q > 0))
    throw NotSpacelike("induced metric is not positive definite (Q = " + format_real(t.Q) + ")");
  CurvatureData cd;
  cd.Q = t.Q;
  cd.H1 = t.H1;
  cd.K1 = t.K1;
  const double sq = std::sqrt(t.Q);
  cd.H = t.H1 / (2 * t.Q * sq);
  cd.K = t.K1 / (t.Q * t.Q);
  // H^2 + K = (H1^2 + 4 Q K1) / (4 Q^3), with the numerator rearranged so
  // that each factor vanishes separately at umbilic points.
  const double E = lorentz_dot(j.Xu, j.Xu), F = lorentz_dot(j.Xu, j.Xv), G = lorentz_dot(j.Xv, j.Xv);
  const double a = triple_product(j.Xu, j.Xv, j.Xuu);
  const double b = triple_product(j.Xu, j.Xv, j.Xuv);
  const double c = triple_product(j.Xu, j.Xv, j.Xvv);
  const double num = (a * G - c * E) * (a * G - c * E) - 4 * (a * F - b * E) * (b * G - c * F);
  double disc = num / (4 * t.Q * t.Q * t.Q);
  // H^2 + K is a perfect square for spacelike surfaces; only rounding makes it negative.
  if (disc < 0) {
    if (disc < -1e-12 * (1 + cd.H * cd.H))
      throw DomainError("principal curvatures are not real (H^2 + K = " + format_real(disc) + ")");
    disc = 0;
  }
  const double root = std::sqrt(disc);
  cd.kappa1 = -cd.H + root;
  cd.kappa2 = -cd.H - root;
  return cd;
}

CurvatureData curvature_data(const SurfacePatch& patch, double u, double v) {
  return curvature_data(patch.jet(u, v));
}

double weingarten_residual(const CurvatureData& cd, const WeingartenSpec& spec) {
  const double a = std::abs(cd.kappa1 - spec.m() * cd.kappa2 - spec.n());
  const double b = std::abs(cd.kappa2 - spec.m() * cd.kappa1 - spec.n());
  return std::min(a, b) / (1 + std::abs(cd.kappa1) + std::abs(cd.kappa2));
}

double eq5_residual(const DeterminantTerms& t, const WeingartenSpec& spec) {
  return std::abs(eq5_lhs(t, spec)) / (eq5_scale(t, spec) + kTiny);
}

double eq5_residual(const CurvatureData& cd, const WeingartenSpec& spec) {
  return eq5_residual(DeterminantTerms{cd.Q, cd.H1, cd.K1}, spec);
}

bool is_umbilic(const CurvatureData& cd, double tol) {
  return cd.H * cd.H + cd.K <= tol * (1 + cd.H * cd.H);
}

FormCurvatures curvatures_from_forms(const FundamentalForms& ff) {
  return {-(ff.e * ff.G - 2 * ff.f * ff.F + ff.g * ff.E) / (2 * ff.Q),
          -(ff.e * ff.g - ff.f * ff.f) / ff.Q};
}

SurfaceJet finite_difference_jet(const PositionMap& X, double u, double v, double h) {
  if (!(h > 0)) throw DomainError("finite difference step must be positive");
  auto first = [&](double s, bool along_u) {
    const MVec3 p = along_u ? X(u + s, v) : X(u, v + s);
    const MVec3 m = along_u ? X(u - s, v) : X(u, v - s);
    return (p - m) / (2 * s);
  };
  auto second = [&](double s, bool along_u, const MVec3& c) {
    const MVec3 p = along_u ? X(u + s, v) : X(u, v + s);
    const MVec3 m = along_u ? X(u - s, v) : X(u, v - s);
    return (p - 2.0 * c + m) / (s * s);
  };
  auto mixed = [&](double s) {
    return (X(u + s, v + s) - X(u + s, v - s) - X(u - s, v + s) + X(u - s, v - s)) / (4 * s * s);
  };
  auto richardson = [](const MVec3& coarse, const MVec3& fine) { return (4.0 * fine - coarse) / 3.0; };

  SurfaceJet j;
  j.X = X(u, v);
  j.Xu = richardson(first(h, true), first(h / 2, true));
  j.Xv = richardson(first(h, false), first(h / 2, false));
  j.Xuu = richardson(second(h, true, j.X), second(h / 2, true, j.X));
  j.Xvv = richardson(second(h, false, j.X), second(h / 2, false, j.X));
  j.Xuv = richardson(mixed(h), mixed(h / 2));
  return j;
}

SurfacePatch transformed(const SurfacePatch& patch, const LinearMap3& map) {
  SurfacePatch out;
  out.domain = patch.domain;
  out.label = patch.label + " (transformed)";
  out.evaluator = [inner = patch.evaluator, map](double u, double v) {
    const SurfaceJet j = inner(u, v);
    return SurfaceJet{map(j.X), map(j.Xu), map(j.Xv), map(j.Xuu), map(j.Xuv), map(j.Xvv)};
  };
  return out;
}

}  // namespace lwsurf
