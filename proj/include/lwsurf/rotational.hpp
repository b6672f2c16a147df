#pragma once

// Rotational spacelike surfaces about timelike, spacelike and lightlike axes,
// and the profile curves that make them satisfy k1 = m k2.
//
//   timelike axis   X = (u cos v, u sin v, z(u)),                  z'^2 < 1
//   spacelike axis  X = (u, z(u) sinh v, z(u) cosh v),             z'^2 < 1
//   lightlike axis  X = (-2uv, z(u) + u - u v^2, z(u) - u - u v^2),  z' > 0
//
// With n = 0 the relation reduces to the profile ODEs
//   timelike   -z'(1 - z'^2) + m u z'' = 0   first integral  z'(1-z'^2)^{-1/2} u^{-1/m}
//   spacelike  -1 + z'^2 + m z z'' = 0       first integral  (1-z'^2)^{-1/2} z^{-1/m}
//   lightlike  2 z' + m u z'' = 0            first integral  z' u^{2/m}
// and in each case the constant c of the solved slope equals
// (first integral)^{-2} for the first two and the first integral itself
// for the lightlike axis.

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lwsurf/jet.hpp"
#include "lwsurf/numerics.hpp"
#include "lwsurf/surface.hpp"

namespace lwsurf {

enum class AxisKind { Timelike, Spacelike, Lightlike };

std::string_view to_string(AxisKind a);
/// Accepts "timelike", "spacelike", "lightlike". Throws UnknownName.
AxisKind parse_axis_kind(std::string_view s);

/// The rotation group fixing the axis of the given kind.
LinearMap3 rotation_group(AxisKind axis, double t);

/// Parameters of a profile integrated from its first integral.
struct ProfileSpec {
  double m = 1;
  double c = 1;
  int sign = 1;  // slope branch
  double u0 = 1;
  double z0 = 0;
  double lambda = 0;  // translation along the rotation axis
};

struct ProfileSample {
  double u, z, zp, zpp;
};

enum class ProfileSource { ClosedForm, Integrated };

/// Slope and its derivative.
struct SlopeJet {
  double zp;
  double zpp;
};

/// Exact (z', z'') as a function of (u, z) along a first-integral solution.
using SlopeLaw = std::function<SlopeJet(double u, double z)>;

/// z'' as a function of (u, z, z'), i.e. the second-order profile ODE.
using CurvatureLaw = std::function<double(double u, double z, double zp)>;

/// Generating curve z(u) of a rotational surface.
///
/// Integrated curves keep a dense sample table; z between samples is the
/// cubic Hermite interpolant of (z, z'). When a slope law is attached, z' and
/// z'' are then recomputed from it. Otherwise z' is the Hermite interpolant
/// of (z', z'') and z'' comes from the curvature law if there is one, else
/// linear interpolation.
class ProfileCurve {
 public:
  static ProfileCurve closed_form(AxisKind axis, std::function<Jet2(double)> z, Interval range,
                                  std::string description, std::size_t sample_count = 201);

  static ProfileCurve from_table(AxisKind axis, std::vector<ProfileSample> samples, SlopeLaw law,
                                 Interval requested, std::string description);
  static ProfileCurve from_table(AxisKind axis, std::vector<ProfileSample> samples, CurvatureLaw law,
                                 Interval requested, std::string description);

  AxisKind axis() const { return axis_; }
  ProfileSource source() const { return source_; }
  Interval range() const { return range_; }
  Interval requested_range() const { return requested_; }
  bool truncated() const { return range_.lo > requested_.lo || range_.hi < requested_.hi; }
  const std::vector<ProfileSample>& samples() const { return samples_; }
  const std::string& description() const { return description_; }

  /// (z, z', z'') at u. Throws DomainError outside range().
  Jet2 at(double u) const;

 private:
  ProfileCurve() = default;
  void validate() const;

  AxisKind axis_ = AxisKind::Timelike;
  ProfileSource source_ = ProfileSource::Integrated;
  Interval range_;
  Interval requested_;
  std::vector<ProfileSample> samples_;
  std::function<Jet2(double)> exact_;
  SlopeLaw law_;
  CurvatureLaw curvature_law_;
  std::string description_;
};

/// z' = sign / sqrt(1 + c u^{-2/m}) and its derivative. Requires u > 0, c > 0.
SlopeJet timelike_slope(double m, double c, int sign, double u);

/// z(u0) = z0 + lambda, then adaptive quadrature of timelike_slope.
ProfileCurve integrate_timelike_profile(const ProfileSpec& spec, Interval u_range, double tol);

/// z' = sign sqrt(1 - c z^{-2/m}) by fourth-order Runge-Kutta with step
/// halving. The result is z(u) = w(u + lambda) where w solves the equation
/// with w(u0) = z0. Stops (truncating the range) where z' or z reaches zero or the
/// slope comes within 1e-6 of null.
ProfileCurve integrate_spacelike_profile(const ProfileSpec& spec, Interval u_range, double tol);

/// Closed-form lightlike solution: c log u + lambda (m = 2) or
/// m c/(m-2) u^{(m-2)/m} + lambda.
ProfileCurve lightlike_profile(double m, double c, double lambda, Interval u_range);

struct InitialCondition {
  double u0, z0, zp0;
};

/// Direct fixed-step RK4 integration of the second-order profile ODE.
/// Throws BlowUp when the solution leaves the admissible slope band.
ProfileCurve integrate_raw_ode(AxisKind axis, double m, InitialCondition ics, Interval u_range,
                               double step);

/// Conserved quantity of the profile ODE. Throws DomainError outside its domain.
double first_integral(AxisKind axis, double m, double u, double z, double zp);

/// Surface jet of the rotational parametrization for profile jet z at (u, v).
SurfaceJet rotational_jet(AxisKind axis, double u, const Jet2& z, double v);

/// v ranges over [0, 2 pi] for the timelike axis, [-v_max, v_max] otherwise.
SurfacePatch build_rotational_patch(AxisKind axis, const ProfileCurve& profile, double v_max = 2.0);

/// CSV with header u,z,zp,zpp and 17 significant digits.
void write_profile_csv(const ProfileCurve& profile, std::ostream& out);

}  // namespace lwsurf
