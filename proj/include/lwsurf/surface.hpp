#pragma once

// Fundamental forms and curvatures of parametrized surfaces in Minkowski
// 3-space, and residuals of the linear Weingarten relation k1 = m k2 + n.

#include <functional>
#include <string>

#include "lwsurf/minkowski.hpp"

namespace lwsurf {

/// Position and partial derivatives of an immersion X(u, v) at one point.
template <typename T>
struct BasicSurfaceJet {
  BasicVec3<T> X, Xu, Xv, Xuu, Xuv, Xvv;
};

using SurfaceJet = BasicSurfaceJet<double>;

struct ParamDomain {
  double u_min = 0, u_max = 1;
  double v_min = 0, v_max = 1;
};

using JetEvaluator = std::function<SurfaceJet(double u, double v)>;

/// A parametrized surface. The evaluator must be deterministic and reentrant.
struct SurfacePatch {
  ParamDomain domain;
  JetEvaluator evaluator;
  std::string label;

  SurfaceJet jet(double u, double v) const { return evaluator(u, v); }
};

struct FundamentalForms {
  double E = 0, F = 0, G = 0, Q = 0;
  double e = 0, f = 0, g = 0;
  MVec3 N;
};

/// Curvature invariants in the sign conventions H = -(k1 + k2)/2, K = -k1 k2,
/// with orientation N = Xu^Xv / |Xu^Xv|.
struct CurvatureData {
  double Q = 0, H1 = 0, K1 = 0;
  double H = 0, K = 0;
  double kappa1 = 0, kappa2 = 0;
};

/// Linear Weingarten relation k1 = m k2 + n, m != 0.
class WeingartenSpec {
 public:
  WeingartenSpec(double m, double n);
  double m() const { return m_; }
  double n() const { return n_; }

 private:
  double m_;
  double n_;
};

/// Q = EG - F^2 and the determinant quantities
///   H1 = -(G[Xu,Xv,Xuu] - 2F[Xu,Xv,Xuv] + E[Xu,Xv,Xvv])   (= 2 H Q^{3/2})
///   K1 = -([Xu,Xv,Xuu][Xu,Xv,Xvv] - [Xu,Xv,Xuv]^2)        (= K Q^2)
/// These are polynomial in the jet and defined whatever the sign of Q.
template <typename T>
struct BasicDeterminantTerms {
  T Q{}, H1{}, K1{};
};

using DeterminantTerms = BasicDeterminantTerms<double>;

template <typename T>
BasicDeterminantTerms<T> determinant_terms(const BasicSurfaceJet<T>& j) {
  const T E = lorentz_dot(j.Xu, j.Xu);
  const T F = lorentz_dot(j.Xu, j.Xv);
  const T G = lorentz_dot(j.Xv, j.Xv);
  const T duu = triple_product(j.Xu, j.Xv, j.Xuu);
  const T duv = triple_product(j.Xu, j.Xv, j.Xuv);
  const T dvv = triple_product(j.Xu, j.Xv, j.Xvv);
  return {E * G - F * F, -(G * duu - T(2) * F * duv + E * dvv), -(duu * dvv - duv * duv)};
}

/// Unnormalised left-hand side of
///   (m H1^2 + (1+m)^2 Q K1 - n^2 Q^3)^2 - n^2 (1-m)^2 H1^2 Q^3.
template <typename T>
T eq5_lhs(const BasicDeterminantTerms<T>& t, const WeingartenSpec& s) {
  const double m = s.m(), n = s.n();
  const T q3 = t.Q * t.Q * t.Q;
  const T inner = m * t.H1 * t.H1 + (1 + m) * (1 + m) * t.Q * t.K1 - n * n * q3;
  return inner * inner - n * n * (1 - m) * (1 - m) * t.H1 * t.H1 * q3;
}

/// The relation with n = 0 before squaring: m H1^2 + (1+m)^2 Q K1.
template <typename T>
T reduced_relation(const BasicDeterminantTerms<T>& t, double m) {
  return m * t.H1 * t.H1 + (1 + m) * (1 + m) * t.Q * t.K1;
}

/// Magnitude scale of eq5_lhs: the same polynomial with every term made
/// positive and the weights |m|, (1+m)^2 floored at 1.
double eq5_scale(const DeterminantTerms& t, const WeingartenSpec& s);
/// Magnitude scale of reduced_relation.
double reduced_scale(const DeterminantTerms& t, double m);

FundamentalForms fundamental_forms(const SurfaceJet& jet);
FundamentalForms fundamental_forms(const SurfacePatch& patch, double u, double v);

/// Throws NotSpacelike when Q <= 0.
CurvatureData curvature_data(const SurfaceJet& jet);
CurvatureData curvature_data(const SurfacePatch& patch, double u, double v);

/// min over both orderings of |k1 - m k2 - n|, divided by 1 + |k1| + |k2|.
double weingarten_residual(const CurvatureData& cd, const WeingartenSpec& spec);

/// eq5_lhs / (eq5_scale + tiny); dimensionless and unchanged by N -> -N.
double eq5_residual(const DeterminantTerms& t, const WeingartenSpec& spec);
double eq5_residual(const CurvatureData& cd, const WeingartenSpec& spec);

/// H^2 + K <= tol (1 + H^2).
bool is_umbilic(const CurvatureData& cd, double tol);

/// Mean curvature from the second fundamental form, -(eG - 2fF + gE) / (2Q),
/// and Gauss curvature -(eg - f^2)/Q. Independent of the determinant route.
struct FormCurvatures {
  double H = 0, K = 0;
};
FormCurvatures curvatures_from_forms(const FundamentalForms& ff);

using PositionMap = std::function<MVec3(double u, double v)>;

/// Central differences with one Richardson step for all derivative slots.
/// Test oracle only. Throws DomainError unless h > 0.
SurfaceJet finite_difference_jet(const PositionMap& position, double u, double v, double h);

/// Image of `patch` under a linear map (applied to position and all derivatives).
SurfacePatch transformed(const SurfacePatch& patch, const LinearMap3& map);

}  // namespace lwsurf
