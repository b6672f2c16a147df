#include "lwsurf/rotational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "lwsurf/errors.hpp"
#include "lwsurf/expr.hpp"

namespace lwsurf {

std::string_view to_string(AxisKind a) {
  switch (a) {
    case AxisKind::Timelike:
      return "timelike";
    case AxisKind::Spacelike:
      return "spacelike";
    case AxisKind::Lightlike:
      return "lightlike";
  }
  return "unknown";
}

AxisKind parse_axis_kind(std::string_view s) {
  if (s == "timelike") return AxisKind::Timelike;
  if (s == "spacelike") return AxisKind::Spacelike;
  if (s == "lightlike") return AxisKind::Lightlike;
  throw UnknownName("unknown axis kind '" + std::string(s) + "'");
}

LinearMap3 rotation_group(AxisKind axis, double t) {
  switch (axis) {
    case AxisKind::Timelike:
      return rotation_about_timelike_axis(t);
    case AxisKind::Spacelike:
      return rotation_about_spacelike_axis(t);
    case AxisKind::Lightlike:
      return rotation_about_lightlike_axis(t);
  }
  return {};
}

// ---------------------------------------------------------------------------
// ProfileCurve

ProfileCurve ProfileCurve::closed_form(AxisKind axis, std::function<Jet2(double)> z, Interval range,
                                       std::string description, std::size_t sample_count) {
  if (!(range.lo < range.hi)) throw DomainError("profile range must satisfy lo < hi");
  sample_count = std::max<std::size_t>(sample_count, 2);
  ProfileCurve p;
  p.axis_ = axis;
  p.source_ = ProfileSource::ClosedForm;
  p.range_ = p.requested_ = range;
  p.exact_ = std::move(z);
  p.description_ = std::move(description);
  p.samples_.reserve(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const double u = i + 1 == sample_count
                         ? range.hi
                         : range.lo + range.length() * static_cast<double>(i) / static_cast<double>(sample_count - 1);
    const Jet2 j = p.exact_(u);
    p.samples_.push_back({u, j.v0, j.v1, j.v2});
  }
  p.validate();
  return p;
}

ProfileCurve ProfileCurve::from_table(AxisKind axis, std::vector<ProfileSample> samples, CurvatureLaw law,
                                      Interval requested, std::string description) {
  ProfileCurve p = from_table(axis, std::move(samples), SlopeLaw{}, requested, std::move(description));
  p.curvature_law_ = std::move(law);
  return p;
}

ProfileCurve ProfileCurve::from_table(AxisKind axis, std::vector<ProfileSample> samples, SlopeLaw law,
                                      Interval requested, std::string description) {
  if (samples.size() < 2) throw DomainError("profile table needs at least two samples");
  ProfileCurve p;
  p.axis_ = axis;
  p.source_ = ProfileSource::Integrated;
  p.samples_ = std::move(samples);
  p.law_ = std::move(law);
  p.range_ = {p.samples_.front().u, p.samples_.back().u};
  p.requested_ = requested;
  p.description_ = std::move(description);
  p.validate();
  return p;
}

void ProfileCurve::validate() const {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!std::isfinite(s.u) || !std::isfinite(s.z) || !std::isfinite(s.zp) || !std::isfinite(s.zpp))
      throw DomainError("profile sample is not finite");
    if (s.u == 0 && axis_ != AxisKind::Spacelike) throw DomainError("profile samples must avoid u = 0");
    if (i > 0 && !(s.u > samples_[i - 1].u)) throw DomainError("profile samples must increase strictly in u");
    if (axis_ == AxisKind::Lightlike) {
      if (!(s.zp > 0)) throw DomainError("lightlike-axis profile needs z' > 0 (u = " + format_real(s.u) + ")");
    } else if (!(s.zp * s.zp < 1)) {
      throw DomainError("profile needs z'^2 < 1 (u = " + format_real(s.u) + ")");
    }
    if (axis_ == AxisKind::Spacelike && s.z == 0)
      throw DomainError("spacelike-axis profile must avoid z = 0");
  }
}

Jet2 ProfileCurve::at(double u) const {
  const double slack = 1e-12 * (1 + std::abs(range_.lo) + std::abs(range_.hi));
  if (!(u >= range_.lo - slack && u <= range_.hi + slack))
    throw DomainError("u = " + format_real(u) + " outside profile range [" + format_real(range_.lo) + ", " +
                      format_real(range_.hi) + "]");
  u = std::clamp(u, range_.lo, range_.hi);
  if (exact_) return exact_(u);

  auto it = std::upper_bound(samples_.begin(), samples_.end(), u,
                             [](double x, const ProfileSample& s) { return x < s.u; });
  if (it == samples_.end()) --it;
  if (it == samples_.begin()) ++it;
  const ProfileSample& a = *(it - 1);
  const ProfileSample& b = *it;
  const double z = cubic_hermite(a.u, b.u, a.z, b.z, a.zp, b.zp, u).value;
  if (law_) {
    const SlopeJet s = law_(u, z);
    return {z, s.zp, s.zpp};
  }
  const double zp = cubic_hermite(a.u, b.u, a.zp, b.zp, a.zpp, b.zpp, u).value;
  if (curvature_law_) return {z, zp, curvature_law_(u, z, zp)};
  const double t = (u - a.u) / (b.u - a.u);
  return {z, zp, a.zpp + t * (b.zpp - a.zpp)};
}

// ---------------------------------------------------------------------------
// Timelike axis

SlopeJet timelike_slope(double m, double c, int sign, double u) {
  if (!(u > 0)) throw DomainError("timelike slope needs u > 0");
  if (!(c > 0)) throw DomainError("timelike slope needs c > 0");
  if (m == 0) throw DomainError("m must be non-zero");
  const Jet2 U = Jet2::variable(u);
  const Jet2 w = 1.0 + c * pow(U, -2.0 / m);
  const Jet2 slope = (sign < 0 ? -1.0 : 1.0) / sqrt(w);
  return {slope.v0, slope.v1};
}

namespace {

void check_profile_spec(const ProfileSpec& spec) {
  if (spec.m == 0 || !std::isfinite(spec.m)) throw DomainError("m must be finite and non-zero");
  if (!(spec.c > 0)) throw DomainError("c must be positive");
  if (spec.sign != 1 && spec.sign != -1) throw DomainError("sign must be +1 or -1");
}

std::string spec_description(std::string_view axis, const ProfileSpec& s) {
  return std::string(axis) + " axis, m=" + format_real(s.m) + ", c=" + format_real(s.c) +
         ", sign=" + std::to_string(s.sign) + ", lambda=" + format_real(s.lambda);
}

constexpr double kQuadratureTol = 1e-12;

}  // namespace

ProfileCurve integrate_timelike_profile(const ProfileSpec& spec, Interval range, double tol) {
  check_profile_spec(spec);
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!(range.lo < range.hi)) throw DomainError("profile range must satisfy lo < hi");
  if (!(range.lo > 0) || !(spec.u0 > 0)) throw DomainError("timelike-axis profiles need u > 0");

  const auto slope = [&](double t) { return timelike_slope(spec.m, spec.c, spec.sign, t).zp; };
  const double z_start = spec.z0 + spec.lambda;
  const double z_lo = z_start + integrate_adaptive(slope, spec.u0, range.lo, kQuadratureTol);

  std::vector<ProfileSample> samples;
  for (std::size_t intervals = 32;; intervals *= 2) {
    const double h = range.length() / static_cast<double>(intervals);
    samples.clear();
    samples.reserve(intervals + 1);
    double z = z_lo;
    for (std::size_t i = 0; i <= intervals; ++i) {
      const double u = i == intervals ? range.hi : range.lo + h * static_cast<double>(i);
      if (i > 0) z += integrate_adaptive(slope, samples.back().u, u, kQuadratureTol);
      const SlopeJet s = timelike_slope(spec.m, spec.c, spec.sign, u);
      samples.push_back({u, z, s.zp, s.zpp});
    }
    double worst = 0;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      const auto& a = samples[i];
      const auto& b = samples[i + 1];
      const double mid = 0.5 * (a.u + b.u);
      const double exact = a.z + integrate_adaptive(slope, a.u, mid, kQuadratureTol);
      const double interp = cubic_hermite(a.u, b.u, a.z, b.z, a.zp, b.zp, mid).value;
      worst = std::max(worst, std::abs(exact - interp));
    }
    if (worst <= 0.25 * tol || intervals >= (1u << 16)) break;
  }

  SlopeLaw law = [m = spec.m, c = spec.c, sign = spec.sign](double u, double) {
    return timelike_slope(m, c, sign, u);
  };
  return ProfileCurve::from_table(AxisKind::Timelike, std::move(samples), std::move(law), range,
                                  spec_description("timelike", spec));
}

// ---------------------------------------------------------------------------
// Spacelike axis

namespace {

struct SpacelikeLaw {
  double m, c;
  int sign;

  // 1 - c z^{-2/m}; the slope is sign * sqrt of it.
  double slope_squared(double z) const { return 1 - c * std::pow(z, -2 / m); }
  double curvature(double z) const { return c / m * std::pow(z, -2 / m - 1); }
  SlopeJet operator()(double, double z) const {
    return {sign * std::sqrt(std::max(0.0, slope_squared(z))), curvature(z)};
  }
};

constexpr double kTurningSlope = 1e-6;  // |z'| below this counts as a turning point
constexpr double kZeroHeight = 1e-6;    // relative to 1 + |z0|
constexpr double kNullMargin = 1e-6;    // stop once 1 - z'^2 falls below this

/// Integrates dz/ds = law(z) from (s0, z0) towards `s_end`, appending
/// accepted nodes (excluding the start) to `out`. Returns false when it
/// stopped before reaching s_end.
bool march_spacelike(const SpacelikeLaw& law, double s0, double z0, double s_end, double tol,
                     std::vector<std::array<double, 2>>& out) {
  const double span = std::abs(s_end - s0);
  if (span == 0) return true;
  const double dir = s_end > s0 ? 1.0 : -1.0;
  const double h_max = std::min(0.02, span / 16);
  const double h_min = 1e-10 * (1 + span);
  const double z_floor = kZeroHeight * (1 + std::abs(z0));
  const auto rhs = [&](double, const std::array<double, 1>& y) -> std::array<double, 1> {
    if (!(y[0] > 0)) return {std::numeric_limits<double>::quiet_NaN()};
    return {law.sign * std::sqrt(std::max(0.0, law.slope_squared(y[0])))};
  };

  double s = s0;
  double z = z0;
  double h = std::min(1e-3, h_max);

  // Starting exactly at a turning point: the first-order equation cannot
  // leave z = z0, so take the first step from the second-order Taylor term.
  if (law.slope_squared(z0) <= kTurningSlope * kTurningSlope) {
    const double zpp = law.curvature(z0);
    // Moving in direction dir, z' = zpp * dir * h must carry the branch sign.
    if (!(zpp * dir * law.sign > 0)) return false;
    const double h0 = std::min(1e-4, 0.5 * span);
    s += dir * h0;
    z += 0.5 * zpp * h0 * h0;
    out.push_back({s, z});
  }

  while (dir * (s_end - s) > 0) {
    if (h < h_min) return false;
    const double step = std::min(h, dir * (s_end - s));
    const auto full = rk4_step<1>(rhs, s, {z}, dir * step);
    const auto half = rk4_step<1>(rhs, s, {z}, dir * step / 2);
    const auto two = rk4_step<1>(rhs, s + dir * step / 2, half, dir * step / 2);
    const double err = std::abs(two[0] - full[0]) / 15;
    const double allowed = std::max(tol * step / span, 1e-16 * (1 + std::abs(z)));
    if (!std::isfinite(two[0]) || !std::isfinite(err) || err > allowed) {
      h = step * (std::isfinite(err) && err > 0 ? std::clamp(0.9 * std::pow(allowed / err, 0.2), 0.1, 0.5) : 0.25);
      continue;
    }
    const double z_new = two[0];
    if (!(z_new > z_floor) || law.slope_squared(z_new) <= kTurningSlope * kTurningSlope) return false;
    const double margin_new = 1 - law.slope_squared(z_new);
    if (margin_new < kNullMargin && margin_new < 1 - law.slope_squared(z)) return false;
    s = step == dir * (s_end - s) ? s_end : s + dir * step;
    z = z_new;
    out.push_back({s, z});
    h = std::min(h_max, step * (err > 0 ? std::clamp(0.9 * std::pow(allowed / err, 0.2), 1.0, 2.0) : 2.0));
  }
  return true;
}

}  // namespace

ProfileCurve integrate_spacelike_profile(const ProfileSpec& spec, Interval range, double tol) {
  check_profile_spec(spec);
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!(range.lo < range.hi)) throw DomainError("profile range must satisfy lo < hi");
  if (!(spec.z0 > 0)) throw DomainError("spacelike-axis profiles need z0 > 0");
  const SpacelikeLaw law{spec.m, spec.c, spec.sign};
  const double g0 = law.slope_squared(spec.z0);
  if (!(g0 >= 0 && g0 < 1))
    throw DomainError("initial condition needs 0 <= 1 - c z0^{-2/m} < 1 (got " + format_real(g0) + ")");

  // Integrate in s = u + lambda, then shift back.
  const double lam = spec.lambda;
  const double s0 = spec.u0;
  const double s_lo = range.lo + lam, s_hi = range.hi + lam;
  if (s0 < s_lo || s0 > s_hi) throw DomainError("u0 + lambda must lie inside the requested range");

  std::vector<std::array<double, 2>> forward, backward;
  march_spacelike(law, s0, spec.z0, s_hi, tol, forward);
  march_spacelike(law, s0, spec.z0, s_lo, tol, backward);

  std::vector<ProfileSample> samples;
  samples.reserve(forward.size() + backward.size() + 1);
  auto push = [&](double s, double z) {
    const SlopeJet sj = law(s, z);
    samples.push_back({s - lam, z, sj.zp, sj.zpp});
  };
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) push((*it)[0], (*it)[1]);
  push(s0, spec.z0);
  for (const auto& node : forward) push(node[0], node[1]);

  if (samples.size() < 2)
    throw DomainError("spacelike-axis profile could not leave its initial condition");
  return ProfileCurve::from_table(AxisKind::Spacelike, std::move(samples), law, range,
                                  spec_description("spacelike", spec));
}

// ---------------------------------------------------------------------------
// Lightlike axis

ProfileCurve lightlike_profile(double m, double c, double lambda, Interval range) {
  if (m == 0 || !std::isfinite(m)) throw DomainError("m must be finite and non-zero");
  if (!(c > 0)) throw DomainError("c must be positive");
  if (!(range.lo > 0)) throw DomainError("lightlike-axis profiles need u > 0");
  std::function<Jet2(double)> z;
  std::string text;
  if (m == 2) {
    z = [c, lambda](double u) { return c * log(Jet2::variable(u)) + lambda; };
    text = format_real(c) + "*log(u) + " + format_real(lambda);
  } else {
    const double k = (m - 2) / m;
    const double a = m * c / (m - 2);
    z = [a, k, lambda](double u) { return a * pow(Jet2::variable(u), k) + lambda; };
    text = format_real(a) + "*u^" + format_real(k) + " + " + format_real(lambda);
  }
  return ProfileCurve::closed_form(AxisKind::Lightlike, std::move(z), range,
                                   "lightlike axis, m=" + format_real(m) + ", z=" + text);
}

// ---------------------------------------------------------------------------
// Raw second-order ODE

namespace {

bool admissible(AxisKind axis, double u, double z, double zp) {
  if (!std::isfinite(z) || !std::isfinite(zp)) return false;
  switch (axis) {
    case AxisKind::Timelike:
      return u > 0 && zp * zp < 1;
    case AxisKind::Spacelike:
      return z > 0 && zp * zp < 1;
    case AxisKind::Lightlike:
      return u > 0 && zp > 0;
  }
  return false;
}

double raw_zpp(AxisKind axis, double m, double u, double z, double zp) {
  switch (axis) {
    case AxisKind::Timelike:
      return zp * (1 - zp * zp) / (m * u);
    case AxisKind::Spacelike:
      return (1 - zp * zp) / (m * z);
    case AxisKind::Lightlike:
      return -2 * zp / (m * u);
  }
  return 0;
}

}  // namespace

ProfileCurve integrate_raw_ode(AxisKind axis, double m, InitialCondition ics, Interval range, double step) {
  if (m == 0 || !std::isfinite(m)) throw DomainError("m must be finite and non-zero");
  if (!(step > 0)) throw DomainError("step must be positive");
  if (!(range.lo < range.hi)) throw DomainError("profile range must satisfy lo < hi");
  if (!range.contains(ics.u0)) throw DomainError("u0 must lie inside the range");
  if (axis != AxisKind::Spacelike && !(range.lo > 0))
    throw DomainError("timelike- and lightlike-axis profiles need u > 0");
  if (!admissible(axis, ics.u0, ics.z0, ics.zp0))
    throw DomainError("initial condition violates the admissible slope band");

  const auto rhs = [axis, m](double u, const std::array<double, 2>& y) -> std::array<double, 2> {
    return {y[1], raw_zpp(axis, m, u, y[0], y[1])};
  };

  auto march = [&](double target) {
    std::vector<ProfileSample> out;
    const double span = target - ics.u0;
    if (span == 0) return out;
    const auto n = static_cast<std::size_t>(std::ceil(std::abs(span) / step));
    const double h = span / static_cast<double>(n);
    std::array<double, 2> y{ics.z0, ics.zp0};
    double u = ics.u0;
    for (std::size_t i = 1; i <= n; ++i) {
      const double u_next = i == n ? target : ics.u0 + h * static_cast<double>(i);
      const auto y_next = rk4_step<2>(rhs, u, y, u_next - u);
      if (!admissible(axis, u_next, y_next[0], y_next[1]))
        throw BlowUp("profile left the admissible slope band after u = " + format_real(u), u);
      u = u_next;
      y = y_next;
      out.push_back({u, y[0], y[1], raw_zpp(axis, m, u, y[0], y[1])});
    }
    return out;
  };

  auto backward = march(range.lo);
  auto forward = march(range.hi);
  std::vector<ProfileSample> samples;
  samples.reserve(backward.size() + forward.size() + 1);
  samples.assign(backward.rbegin(), backward.rend());
  samples.push_back({ics.u0, ics.z0, ics.zp0, raw_zpp(axis, m, ics.u0, ics.z0, ics.zp0)});
  samples.insert(samples.end(), forward.begin(), forward.end());
  CurvatureLaw law = [axis, m](double u, double z, double zp) { return raw_zpp(axis, m, u, z, zp); };
  return ProfileCurve::from_table(axis, std::move(samples), std::move(law), range,
                                  std::string(to_string(axis)) + " axis raw ODE, m=" + format_real(m));
}

double first_integral(AxisKind axis, double m, double u, double z, double zp) {
  if (m == 0) throw DomainError("m must be non-zero");
  switch (axis) {
    case AxisKind::Timelike:
      if (!(zp * zp < 1)) throw DomainError("first integral needs |z'| < 1");
      if (!(u > 0)) throw DomainError("first integral needs u > 0");
      return zp / std::sqrt(1 - zp * zp) * std::pow(u, -1 / m);
    case AxisKind::Spacelike:
      if (!(zp * zp < 1)) throw DomainError("first integral needs |z'| < 1");
      if (!(z > 0)) throw DomainError("first integral needs z > 0");
      return 1 / std::sqrt(1 - zp * zp) * std::pow(z, -1 / m);
    case AxisKind::Lightlike:
      if (!(u > 0)) throw DomainError("first integral needs u > 0");
      return zp * std::pow(u, 2 / m);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Surfaces

SurfaceJet rotational_jet(AxisKind axis, double u, const Jet2& z, double v) {
  switch (axis) {
    case AxisKind::Timelike: {
      const double c = std::cos(v), s = std::sin(v);
      return {{u * c, u * s, z.v0}, {c, s, z.v1}, {-u * s, u * c, 0},
              {0, 0, z.v2},         {-s, c, 0},   {-u * c, -u * s, 0}};
    }
    case AxisKind::Spacelike: {
      const double c = std::cosh(v), s = std::sinh(v);
      return {{u, z.v0 * s, z.v0 * c}, {1, z.v1 * s, z.v1 * c}, {0, z.v0 * c, z.v0 * s},
              {0, z.v2 * s, z.v2 * c}, {0, z.v1 * c, z.v1 * s}, {0, z.v0 * s, z.v0 * c}};
    }
    case AxisKind::Lightlike: {
      const double v2 = v * v;
      return {{-2 * u * v, z.v0 + u - u * v2, z.v0 - u - u * v2},
              {-2 * v, z.v1 + 1 - v2, z.v1 - 1 - v2},
              {-2 * u, -2 * u * v, -2 * u * v},
              {0, z.v2, z.v2},
              {-2, -2 * v, -2 * v},
              {0, -2 * u, -2 * u}};
    }
  }
  return {};
}

SurfacePatch build_rotational_patch(AxisKind axis, const ProfileCurve& profile, double v_max) {
  if (profile.axis() != axis) throw DomainError("profile was built for a different axis kind");
  if (!(v_max > 0)) throw DomainError("v_max must be positive");
  SurfacePatch patch;
  const Interval r = profile.range();
  if (axis == AxisKind::Timelike)
    patch.domain = {r.lo, r.hi, 0.0, 2 * std::numbers::pi};
  else
    patch.domain = {r.lo, r.hi, -v_max, v_max};
  patch.label = "rotational surface, " + profile.description();
  auto shared = std::make_shared<const ProfileCurve>(profile);
  patch.evaluator = [axis, shared](double u, double v) { return rotational_jet(axis, u, shared->at(u), v); };
  return patch;
}

void write_profile_csv(const ProfileCurve& profile, std::ostream& out) {
  out << "u,z,zp,zpp\n";
  for (const auto& s : profile.samples())
    out << format_real(s.u) << ',' << format_real(s.z) << ',' << format_real(s.zp) << ',' << format_real(s.zpp)
        << '\n';
}

}  // namespace lwsurf
