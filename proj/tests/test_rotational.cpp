#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lwsurf/catalog.hpp"
#include "lwsurf/errors.hpp"
#include "lwsurf/rotational.hpp"

using namespace lwsurf;

namespace {

double max_eq5(const SurfacePatch& p, const WeingartenSpec& spec, int n = 20) {
  const ParamDomain& d = p.domain;
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double u = d.u_min + (d.u_max - d.u_min) * i / (n - 1.0);
      const double v = d.v_min + (d.v_max - d.v_min) * j / (n - 1.0);
      worst = std::max(worst, eq5_residual(curvature_data(p, u, v), spec));
    }
  return worst;
}

double max_abs_h(const SurfacePatch& p, int n = 20) {
  const ParamDomain& d = p.domain;
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double u = d.u_min + (d.u_max - d.u_min) * i / (n - 1.0);
      const double v = d.v_min + (d.v_max - d.v_min) * j / (n - 1.0);
      worst = std::max(worst, std::abs(curvature_data(p, u, v).H));
    }
  return worst;
}

double drift(const ProfileCurve& p, double m) {
  const auto& s = p.samples();
  const double ref = first_integral(p.axis(), m, s.front().u, s.front().z, s.front().zp);
  double worst = 0;
  for (const auto& x : s) worst = std::max(worst, std::abs(first_integral(p.axis(), m, x.u, x.z, x.zp) - ref));
  return worst / (1 + std::abs(ref));
}

}  // namespace

TEST_CASE("timelike slope") {
  // d/du of sqrt(u(1+u)) - asinh(sqrt(u)) is sqrt(u/(1+u))
  CHECK(timelike_slope(2, 1, 1, 1).zp == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(timelike_slope(2, 1, 1, 3).zp == doctest::Approx(std::sqrt(3.0 / 4)).epsilon(1e-15));
  // 1/sqrt(1+u)
  CHECK(timelike_slope(-2, 1, 1, 3).zp == doctest::Approx(0.5).epsilon(1e-15));
  const double far = timelike_slope(1, 1, 1, 1e6).zp;
  CHECK(far < 1);
  CHECK(far > 1 - 1e-11);
  CHECK(timelike_slope(1, 1, -1, 2).zp == doctest::Approx(-2 / std::sqrt(5.0)));
  // z'' of sqrt(u^2+1) is (1+u^2)^{-3/2}
  CHECK(timelike_slope(1, 1, 1, 2).zpp == doctest::Approx(std::pow(5.0, -1.5)).epsilon(1e-14));
  CHECK_THROWS_AS(timelike_slope(1, 1, 1, 0), DomainError);
  CHECK_THROWS_AS(timelike_slope(1, 1, 1, -1), DomainError);
}

TEST_CASE("timelike profile integration") {
  {
    ProfileSpec s{1, 1, 1, 1, std::sqrt(2.0), 0};
    const auto p = integrate_timelike_profile(s, {0.5, 3}, 1e-11);
    CHECK(std::abs(p.at(2).v0 - std::sqrt(5.0)) <= 1e-9);
    CHECK(drift(p, 1) <= 1e-8);
  }
  {
    ProfileSpec s{-1, 1, 1, 1, std::asinh(1.0), 0};
    const auto p = integrate_timelike_profile(s, {0.5, 3}, 1e-11);
    CHECK(std::abs(p.at(2).v0 - std::asinh(2.0)) <= 1e-9);
  }
  {
    ProfileSpec s{2, 1, 1, 1, std::sqrt(2.0) - std::asinh(1.0), 0};
    const auto p = integrate_timelike_profile(s, {0.5, 5}, 1e-11);
    CHECK(std::abs(p.at(4).v0 - (std::sqrt(20.0) - std::asinh(2.0))) <= 1e-9);
    // between samples
    const double u = 3.3;
    CHECK(std::abs(p.at(u).v0 - (std::sqrt(u * (1 + u)) - std::asinh(std::sqrt(u)))) <= 1e-9);
  }
  {
    // lambda shifts along the axis
    ProfileSpec s{1, 1, 1, 1, std::sqrt(2.0), 0.75};
    const auto p = integrate_timelike_profile(s, {0.5, 3}, 1e-11);
    CHECK(std::abs(p.at(2).v0 - std::sqrt(5.0) - 0.75) <= 1e-9);
  }
  CHECK_THROWS_AS(integrate_timelike_profile({1, 1, 1, 1, 0, 0}, {0, 2}, 1e-9), DomainError);
  CHECK_THROWS_AS(integrate_timelike_profile({1, 1, 1, 1, 0, 0}, {-1, 2}, 1e-9), DomainError);
}

TEST_CASE("spacelike profile integration") {
  {
    ProfileSpec s{1, 1, 1, 0, 1, 0};
    const auto p = integrate_spacelike_profile(s, {0, 2}, 1e-11);
    CHECK(std::abs(p.at(1).v0 - std::sqrt(2.0)) <= 1e-8);
    CHECK(drift(p, 1) <= 1e-8);
  }
  {
    ProfileSpec s{-2, 1, -1, 1, 0.75, 0};
    const auto p = integrate_spacelike_profile(s, {1, 1.9}, 1e-11);
    CHECK(std::abs(p.at(1.5).v0 - 0.4375) <= 1e-8);
    CHECK(std::abs(p.at(1.5).v1 + 0.75) <= 1e-8);
  }
  {
    const double z0 = 1e-7;
    ProfileSpec s{-1, 1, 1, 0, z0, 0};
    const auto p = integrate_spacelike_profile(s, {0, 3}, 1e-11);
    CHECK(std::abs(p.at(M_PI / 4).v0 - std::sin(M_PI / 4)) <= 1e-6);
    // stops cleanly before the turning point at pi/2
    CHECK(p.truncated());
    CHECK(p.range().hi < M_PI / 2);
    CHECK(p.range().hi > M_PI / 2 - 0.01);
  }
  {
    // start exactly at a turning point; lambda shifts the parameter
    ProfileSpec s{-1, 1, -1, 0, 1, 0.5};
    const auto p = integrate_spacelike_profile(s, {-0.5, 0.5}, 1e-11);
    CHECK(std::abs(p.at(0).v0 - std::cos(0.5)) <= 1e-8);
  }
  CHECK_THROWS_AS(integrate_spacelike_profile({1, 1, 1, 0, 0.5, 0}, {0, 1}, 1e-9), DomainError);
  CHECK_THROWS_AS(integrate_spacelike_profile({1, 1, 1, 0, -1, 0}, {0, 1}, 1e-9), DomainError);
}

TEST_CASE("lightlike profiles") {
  CHECK(lightlike_profile(2, 1, 0, {0.5, 3}).at(M_E).v0 == doctest::Approx(1).epsilon(1e-15));
  CHECK(lightlike_profile(-1, 3, 0, {0.5, 3}).at(2).v0 == doctest::Approx(8).epsilon(1e-14));
  CHECK(lightlike_profile(1, 1, 0, {0.5, 3}).at(2).v0 == doctest::Approx(-0.5).epsilon(1e-15));
  const Jet2 z = lightlike_profile(3, 2, 0, {0.5, 3}).at(1.7);
  CHECK(z.v1 == doctest::Approx(2 * std::pow(1.7, -2.0 / 3)).epsilon(1e-14));
  CHECK_THROWS_AS(lightlike_profile(1, 1, 0, {0, 1}), DomainError);
  CHECK_THROWS_AS(lightlike_profile(1, -1, 0, {1, 2}), DomainError);
}

TEST_CASE("raw ODE") {
  const auto t = integrate_raw_ode(AxisKind::Timelike, 1, {1, std::sqrt(2.0), 1 / std::sqrt(2.0)}, {1, 2}, 1e-3);
  CHECK(std::abs(t.at(2).v0 - std::sqrt(5.0)) <= 1e-6);
  const auto l = integrate_raw_ode(AxisKind::Lightlike, 2, {1, 0, 1}, {1, 3}, 1e-3);
  CHECK(std::abs(l.at(M_E).v0 - 1) <= 1e-6);
  const auto flat = integrate_raw_ode(AxisKind::Timelike, 1.5, {1, 0.3, 0}, {0.5, 3}, 1e-2);
  for (const auto& s : flat.samples()) {
    CHECK(s.z == 0.3);
    CHECK(s.zp == 0);
  }
  // z'' = (1 - z'^2)/(m z) with m < 0 drives z to 0 in finite time
  try {
    integrate_raw_ode(AxisKind::Spacelike, -1, {0, 0.5, 0}, {0, 5}, 1e-3);
    FAIL("expected BlowUp");
  } catch (const BlowUp& e) {
    // exact solution 0.5 cos(2u) reaches z = 0 at u = pi/4
    CHECK(e.last_valid_u() > 0.7);
    CHECK(e.last_valid_u() < M_PI / 4);
  }
  CHECK_THROWS_AS(integrate_raw_ode(AxisKind::Timelike, 1, {1, 0, 1.2}, {1, 2}, 1e-3), DomainError);
}

TEST_CASE("first integral examples") {
  for (double u : {0.5, 1.0, 2.0, 7.0}) {
    const double z = std::sqrt(u * u + 1), zp = u / z;
    CHECK(first_integral(AxisKind::Timelike, 1, u, z, zp) == doctest::Approx(1).epsilon(1e-14));
    CHECK(first_integral(AxisKind::Spacelike, 1, u, z, zp) == doctest::Approx(1).epsilon(1e-14));
    CHECK(first_integral(AxisKind::Lightlike, 2, u, std::log(u), 1 / u) == doctest::Approx(1).epsilon(1e-15));
  }
  CHECK_THROWS_AS(first_integral(AxisKind::Timelike, 1, 1, 0, 1), DomainError);
  CHECK_THROWS_AS(first_integral(AxisKind::Lightlike, 1, 0, 0, 1), DomainError);
}

TEST_CASE("first integral constants match c") {
  // timelike: value^-2 = c; spacelike: value^-2 = c; lightlike: value = c
  for (double m : {2.0, -2.0, 3.0, 0.5}) {
    const ProfileSpec s{m, 2.5, 1, 1, 0, 0};
    const auto p = integrate_timelike_profile(s, {1, 2}, 1e-10);
    const auto& x = p.samples()[3];
    CHECK(std::pow(first_integral(AxisKind::Timelike, m, x.u, x.z, x.zp), -2) == doctest::Approx(2.5));
  }
  const auto l = lightlike_profile(3, 2.5, 0, {1, 2});
  CHECK(first_integral(AxisKind::Lightlike, 3, 1.4, l.at(1.4).v0, l.at(1.4).v1) == doctest::Approx(2.5));
}

TEST_CASE("raw ODE and first-integral paths agree") {
  for (double m : {1.0, -1.0, 2.0, -2.0, 3.0, -3.0, 0.5}) {
    INFO("m = " << m);
    const auto t = integrate_timelike_profile({m, 1, 1, 1, 0, 0}, {1, 3}, 1e-11);
    const Jet2 t0 = t.at(1);
    const auto tr = integrate_raw_ode(AxisKind::Timelike, m, {1, t0.v0, t0.v1}, {1, 3}, 1e-3);
    double z0 = m > 0 ? 1.5 : 1;
    const auto s = integrate_spacelike_profile({m, 1, m > 0 ? 1 : -1, 1, z0, 0}, {1, 3}, 1e-11);
    const Jet2 s0 = s.at(1);
    const Interval shared{1, std::min(3.0, s.range().hi - 0.05)};
    const auto sr = integrate_raw_ode(AxisKind::Spacelike, m, {1, s0.v0, s0.v1}, shared, 1e-3);
    const auto l = lightlike_profile(m, 1, 0, {1, 3});
    const Jet2 l0 = l.at(1);
    const auto lr = integrate_raw_ode(AxisKind::Lightlike, m, {1, l0.v0, l0.v1}, {1, 3}, 1e-3);
    for (double u = 1; u <= 3; u += 0.125) {
      CHECK(std::abs(t.at(u).v0 - tr.at(u).v0) <= 1e-6);
      CHECK(std::abs(l.at(u).v0 - lr.at(u).v0) <= 1e-6);
      if (shared.contains(u)) CHECK(std::abs(s.at(u).v0 - sr.at(u).v0) <= 1e-6);
    }
    CHECK(drift(t, m) <= 1e-8);
    CHECK(drift(s, m) <= 1e-8);
    CHECK(drift(tr, m) <= 1e-8);
    CHECK(drift(sr, m) <= 1e-8);
    CHECK(drift(lr, m) <= 1e-8);
  }
}

TEST_CASE("rotational patches") {
  // rot3 with z = -1/u: x1^2 + x2^2 - x3^2 = -4
  const auto p = build_rotational_patch(AxisKind::Lightlike, lightlike_profile(1, 1, 0, {0.5, 2}));
  const MVec3 X = p.jet(1, 1).X;
  CHECK(X == MVec3{-2, -1, -3});
  CHECK(lorentz_dot(X, X) == -4);
  // horizontal plane
  const auto plane = build_rotational_patch(
      AxisKind::Timelike, ProfileCurve::closed_form(AxisKind::Timelike, [](double) { return Jet2::constant(2); },
                                                    {0.5, 2}, "plane"));
  for (double u : {0.5, 1.0, 2.0})
    for (double v : {0.0, 1.0, 4.0}) {
      const auto cd = curvature_data(plane, u, v);
      CHECK(cd.H == 0);
      CHECK(cd.K == 0);
    }
  CHECK(plane.domain.v_min == 0);
  CHECK(plane.domain.v_max == doctest::Approx(2 * M_PI));
  // rot2 pseudohyperbolic is umbilic
  const auto ph = build_rotational_patch(AxisKind::Spacelike,
                                         ProfileCurve::closed_form(
                                             AxisKind::Spacelike,
                                             [](double u) { return sqrt(Jet2::variable(u) * Jet2::variable(u) + 1.0); },
                                             {0.5, 2}, "ph"));
  CHECK(ph.domain.v_min == -2);
  CHECK(ph.domain.v_max == 2);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) CHECK(is_umbilic(curvature_data(ph, 0.5 + 1.5 * i / 19, -2 + 4.0 * j / 19), 1e-10));
  CHECK_THROWS_AS(build_rotational_patch(AxisKind::Timelike, lightlike_profile(1, 1, 0, {0.5, 2})), DomainError);
}

TEST_CASE("profile invariants are enforced") {
  auto steep = [](double u) { return 2.0 * Jet2::variable(u); };
  CHECK_THROWS_AS(ProfileCurve::closed_form(AxisKind::Timelike, steep, {0.5, 1}, "steep"), DomainError);
  auto falling = [](double u) { return -1.0 * Jet2::variable(u); };
  CHECK_THROWS_AS(ProfileCurve::closed_form(AxisKind::Lightlike, falling, {0.5, 1}, "falling"), DomainError);
  auto gentle = [](double u) { return 0.5 * Jet2::variable(u); };
  CHECK_THROWS_AS(ProfileCurve::closed_form(AxisKind::Timelike, gentle, {-1, 1}, "through 0", 3), DomainError);
  const auto p = ProfileCurve::closed_form(AxisKind::Timelike, gentle, {0.5, 1}, "ok");
  CHECK_THROWS_AS(p.at(2), DomainError);
}

TEST_CASE("profile CSV") {
  std::ostringstream out;
  write_profile_csv(lightlike_profile(2, 1, 0, {1, 2}), out);
  const std::string s = out.str();
  CHECK(s.rfind("u,z,zp,zpp\n1,0,1,-1\n", 0) == 0);
  CHECK(s.find('\r') == std::string::npos);
}

TEST_CASE("catalog") {
  CHECK(catalog_entries().size() == 11);
  const double expected_m[] = {1, -1, 2, -2, 1, -1, -2, 1, -1, 2};
  for (std::size_t i = 0; i < 10; ++i) {
    const auto s = catalog(catalog_entries()[i].name);
    CHECK(s.relation.m() == expected_m[i]);
    CHECK(s.relation.n() == 0);
  }
  CHECK(catalog("lightlike_power", {{"m", 3}}).relation.m() == 3);
  CHECK_THROWS_AS(catalog("lightlike_power"), MissingParam);
  CHECK_THROWS_AS(catalog("no_such_surface"), UnknownName);
  CHECK_THROWS_AS(catalog("catenoid_first_kind", {{"r", 1}}), UnknownName);
  CHECK_THROWS_AS(catalog("catenoid_first_kind", {{"c", -1}}), DomainError);

  const auto cat = catalog("catenoid_first_kind", {{"c", 1}});
  CHECK(cat.profile.at(1.5).v0 == doctest::Approx(std::asinh(1.5)).epsilon(1e-15));
  CHECK(max_abs_h(cat.patch) <= 1e-9);
  const auto enn = catalog("enneper_second_kind", {{"c", 1}});
  CHECK(enn.profile.at(1.5).v0 == doctest::Approx(1.125).epsilon(1e-15));
  CHECK(max_abs_h(enn.patch) <= 1e-9);
  CHECK(max_abs_h(catalog("catenoid_second_kind").patch) <= 1e-9);
  const auto m2 = catalog("timelike_m2", {{"c", 1}});
  CHECK(m2.profile.at(1.5).v0 == doctest::Approx(std::sqrt(1.5 * 2.5) - std::asinh(std::sqrt(1.5))).epsilon(1e-15));
  CHECK(max_eq5(m2.patch, {2, 0}) <= 1e-9);
}

TEST_CASE("catalog entries satisfy their relation for several parameters") {
  for (const auto& e : catalog_entries()) {
    for (double c : {0.5, 1.0, 2.0}) {
      for (double lambda : {0.0, 0.3}) {
        ParamMap p{{"lambda", lambda}};
        if (e.name.find("pseudohyperbolic") == 0 && e.name != "pseudohyperbolic_lightlike")
          p["r"] = c;
        else
          p["c"] = c;
        if (e.name == "lightlike_power") p["m"] = 3;
        const auto s = catalog(e.name, p);
        INFO(e.name << " c=" << c << " lambda=" << lambda);
        CHECK(max_eq5(s.patch, s.relation) <= 1e-9);
        CHECK(max_eq5(s.patch, {s.relation.m() == 3 ? 2.0 : 3.0, 0}) > 1e-3);
      }
    }
  }
}

TEST_CASE("integrated profiles close the relation") {
  for (double m : {2.0, -2.0, 3.0, -3.0, 0.5}) {
    INFO("m = " << m);
    const auto t = integrate_timelike_profile({m, 1, 1, 1, 0, 0}, {1, 3}, 1e-11);
    CHECK(max_eq5(build_rotational_patch(AxisKind::Timelike, t), {m, 0}) <= 1e-6);
    const auto s = integrate_spacelike_profile({m, 1, m > 0 ? 1 : -1, 1, m > 0 ? 1.5 : 1, 0}, {1, 3}, 1e-11);
    CHECK(max_eq5(build_rotational_patch(AxisKind::Spacelike, s), {m, 0}) <= 1e-6);
    const auto l0 = lightlike_profile(m, 1, 0, {1, 3}).at(1);
    const auto l = integrate_raw_ode(AxisKind::Lightlike, m, {1, l0.v0, l0.v1}, {1, 3}, 1e-3);
    CHECK(max_eq5(build_rotational_patch(AxisKind::Lightlike, l), {m, 0}) <= 1e-6);
  }
}
