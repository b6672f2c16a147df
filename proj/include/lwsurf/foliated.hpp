#pragma once

// Surfaces foliated by circles in parallel planes, and the v-expansion of the
// squared Weingarten relation along each circle.
//
//   spacelike planes  X = (x(u), y(u), 0) + (r cos v, r sin v, u),       x' = cos t, y' = sin t
//   timelike planes   X = (0, y(u), z(u)) + (u, r sinh v, r cosh v),     y' = cosh t, z' = sinh t
//   lightlike planes  X = (a(u), 0, 0) + (-2uv, b + u - u v^2, b - u - u v^2)
//
// where t = theta(u). Without theta the centre stays at the base point and
// the surface is rotational.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lwsurf/catalog.hpp"
#include "lwsurf/expr.hpp"
#include "lwsurf/numerics.hpp"
#include "lwsurf/surface.hpp"

namespace lwsurf {

enum class PlaneCase { SpacelikePlanes, TimelikePlanes, LightlikePlanes };

std::string_view to_string(PlaneCase c);
/// Accepts "spacelike", "timelike", "lightlike" (with or without "_planes").
PlaneCase parse_plane_case(std::string_view s);

struct FoliationFamily {
  PlaneCase plane_case = PlaneCase::SpacelikePlanes;
  std::optional<Expr> theta;       // planar cases
  Expr r = Expr::constant(1);      // planar cases
  double base1 = 0, base2 = 0;     // (x0, y0) or (y0, z0)
  double u0 = 0;                   // parameter of the base point
  Expr a = Expr::constant(0);      // lightlike case
  Expr b = Expr::constant(0);      // lightlike case
  Interval u_range{0.5, 2};
};

/// Jets in u of the centre curve and radius at one u.
struct FoliationComponents {
  Jet2 c1, c2;  // (x, y), (y, z) or (a, b)
  Jet2 r;       // unused for lightlike planes
};

/// Throws NonPositiveRadius when r(u) <= 0, DomainError from the expressions
/// or when u = 0 for lightlike planes.
FoliationComponents foliation_components(const FoliationFamily& family, double u);

/// Surface jet at (u, v) for already evaluated components.
template <typename T>
BasicSurfaceJet<T> foliated_jet(PlaneCase pc, const FoliationComponents& k, double u, T v);

SurfacePatch build_foliated_patch(const FoliationFamily& family, double v_max = 2.0);

/// Unnormalised left-hand side of the squared relation at (u, v). Defined
/// whatever the sign of Q.
double eq5_raw(const FoliationFamily& family, const WeingartenSpec& spec, double u, double v);

enum class BasisKind { Trig, Hyperbolic, Polynomial };
enum class HyperbolicMethod { Continuation, LeastSquares };

/// f(v) = sum_j A_j c_j(v) + B_j s_j(v) with (c_j, s_j) = (cos jv, sin jv),
/// (cosh jv, sinh jv) or (v^j, -).
///
/// With n = 0 the expanded function is the unsquared relation
/// m H1^2 + (1+m)^2 Q K1 (`reduced`), otherwise the full squared form.
struct CoefficientExpansion {
  BasisKind basis = BasisKind::Trig;
  double u = 0;
  bool reduced = false;
  std::vector<double> A, B;  // B is empty for the polynomial basis
  double condition = 1;      // 2-norm condition number of the extraction solve
  bool ill_conditioned = false;
  double scale = 0;                 // largest positive-term magnitude over the samples
  double reconstruction_error = 0;  // held-out error relative to max |coefficient|

  double evaluate(double v) const;
  double max_abs_coefficient() const;
};

CoefficientExpansion extract_coefficients(const FoliationFamily& family, const WeingartenSpec& spec, double u,
                                          HyperbolicMethod method = HyperbolicMethod::Continuation);

/// Closed-form coefficient names known for a case: A12 B12 A3 B3 A2 B2 A1 B1
/// A2_conditional B2_conditional (spacelike), A12 B12 A3 B3 A2 B2 A1 B1 A0
/// (timelike), A6 A2 A1 A0 (lightlike).
const std::vector<std::string>& paper_coefficient_names(PlaneCase c);

/// Evaluates a printed closed-form coefficient. Inputs by name:
///   planar cases: r, r1 (= r'), r2 (= r''), theta, kappa (= theta')
///   lightlike:    u, a1, a2, b1, b2, and c for A1 / A0
/// Throws UnknownName, MissingParam, PreconditionViolated.
double paper_coefficient(PlaneCase c, const std::string& name, const ParamMap& inputs, const WeingartenSpec& spec);

/// Inputs for paper_coefficient read off the family at u. For lightlike planes
/// c is taken as a' u^{2m}.
ParamMap paper_inputs(const FoliationFamily& family, const WeingartenSpec& spec, double u);

/// CSV report: case,u,j,A_extracted,B_extracted,A_paper,B_paper,rel_err.
/// The closed-form columns are empty where no formula applies.
void write_coefficient_csv(const FoliationFamily& family, const WeingartenSpec& spec,
                           const std::vector<double>& us, std::ostream& out);

}  // namespace lwsurf
