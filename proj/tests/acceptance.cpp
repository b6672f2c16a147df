// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli.hpp"
#include "lwsurf/catalog.hpp"
#include "lwsurf/errors.hpp"
#include "lwsurf/foliated.hpp"
#include "lwsurf/rotational.hpp"
#include "lwsurf/surface.hpp"

using namespace lwsurf;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

template <typename F>
void grid(const SurfacePatch& p, int n, F&& f) {
  const ParamDomain& d = p.domain;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      f(d.u_min + (d.u_max - d.u_min) * i / (n - 1.0), d.v_min + (d.v_max - d.v_min) * j / (n - 1.0));
}

double max_eq5(const SurfacePatch& p, const WeingartenSpec& spec) {
  double worst = 0;
  grid(p, 20, [&](double u, double v) { worst = std::max(worst, eq5_residual(curvature_data(p, u, v), spec)); });
  return worst;
}

double drift(const ProfileCurve& p, double m) {
  const auto& s = p.samples();
  const double ref = first_integral(p.axis(), m, s.front().u, s.front().z, s.front().zp);
  double worst = 0;
  for (const auto& x : s) worst = std::max(worst, std::abs(first_integral(p.axis(), m, x.u, x.z, x.zp) - ref));
  return worst / (1 + std::abs(ref));
}

void umbilical(Outcome& o) {
  const char* names[] = {"pseudohyperbolic_timelike", "pseudohyperbolic_spacelike", "pseudohyperbolic_lightlike"};
  for (const char* name : names)
    for (double r : {0.5, 1.0, 2.0}) {
      const auto s = catalog(name, {{"r", r}});
      double worst_gap = 0, worst_h = 0, worst_k = 0;
      int k_sign = 0;
      grid(s.patch, 20, [&](double u, double v) {
        const auto cd = curvature_data(s.patch, u, v);
        worst_gap = std::max(worst_gap, std::abs(cd.kappa1 - cd.kappa2) / (1 + std::abs(cd.kappa1)));
        worst_h = std::max(worst_h, std::abs(std::abs(cd.H) * r - 1));
        worst_k = std::max(worst_k, std::abs(std::abs(cd.K) * r * r - 1));
        k_sign = cd.K < 0 ? -1 : 1;
      });
      const std::string tag = std::string(name) + " r=" + format_real(r);
      o.require(worst_gap <= 1e-8, tag + " umbilic gap " + format_real(worst_gap));
      o.require(worst_h <= 1e-8, tag + " |H| r - 1 = " + format_real(worst_h));
      o.require(worst_k <= 1e-8, tag + " |K| r^2 - 1 = " + format_real(worst_k));
      if (r == 1)
        o.detail << name << " K sign " << (k_sign < 0 ? "-" : "+") << " (max |H|r-1 " << worst_h << "); ";
    }
}

void maximality(Outcome& o) {
  for (const char* name : {"catenoid_first_kind", "catenoid_second_kind", "enneper_second_kind"}) {
    const auto s = catalog(name);
    double worst = 0;
    grid(s.patch, 20, [&](double u, double v) { worst = std::max(worst, std::abs(curvature_data(s.patch, u, v).H)); });
    o.require(worst <= 1e-9, std::string(name) + " max |H| " + format_real(worst));
    o.detail << name << " max|H|=" << worst << "; ";
  }
}

void closure(Outcome& o) {
  double worst_integrated = 0;
  for (double m : {2.0, -2.0, 3.0, -3.0, 0.5}) {
    const auto t = integrate_timelike_profile({m, 1, 1, 1, 0, 0}, {1, 3}, 1e-11);
    const auto s = integrate_spacelike_profile({m, 1, m > 0 ? 1 : -1, 1, m > 0 ? 1.5 : 1, 0}, {1, 3}, 1e-11);
    const auto l0 = lightlike_profile(m, 1, 0, {1, 3}).at(1);
    const auto l = integrate_raw_ode(AxisKind::Lightlike, m, {1, l0.v0, l0.v1}, {1, 3}, 1e-3);
    const double e[] = {max_eq5(build_rotational_patch(AxisKind::Timelike, t), {m, 0}),
                        max_eq5(build_rotational_patch(AxisKind::Spacelike, s), {m, 0}),
                        max_eq5(build_rotational_patch(AxisKind::Lightlike, l), {m, 0})};
    for (double x : e) {
      o.require(x <= 1e-6, "integrated profile m=" + format_real(m) + " residual " + format_real(x));
      worst_integrated = std::max(worst_integrated, x);
    }
    if (s.truncated()) o.detail << "spacelike m=" << m << " truncated to [1, " << s.range().hi << "]; ";
  }
  double worst_closed = 0;
  for (const char* name : {"timelike_m2", "timelike_m_neg2", "spacelike_m_neg2", "lightlike_log"}) {
    const auto c = catalog(name);
    const double x = max_eq5(c.patch, c.relation);
    o.require(x <= 1e-9, std::string(name) + " residual " + format_real(x));
    worst_closed = std::max(worst_closed, x);
  }
  o.detail << "integrated max " << worst_integrated << ", closed-form max " << worst_closed << "; ";
}

void conservation(Outcome& o) {
  double worst_drift = 0, worst_gap = 0;
  for (double m : {1.0, -1.0, 2.0, -2.0, 3.0, -3.0, 0.5}) {
    const auto t = integrate_timelike_profile({m, 1, 1, 1, 0, 0}, {1, 3}, 1e-11);
    const Jet2 t0 = t.at(1);
    const auto tr = integrate_raw_ode(AxisKind::Timelike, m, {1, t0.v0, t0.v1}, {1, 3}, 1e-3);
    const auto s = integrate_spacelike_profile({m, 1, m > 0 ? 1 : -1, 1, m > 0 ? 1.5 : 1, 0}, {1, 3}, 1e-11);
    const Jet2 s0 = s.at(1);
    const Interval shared{1, std::min(3.0, s.range().hi - 0.05)};
    const auto sr = integrate_raw_ode(AxisKind::Spacelike, m, {1, s0.v0, s0.v1}, shared, 1e-3);
    const auto l = lightlike_profile(m, 1, 0, {1, 3});
    const Jet2 l0 = l.at(1);
    const auto lr = integrate_raw_ode(AxisKind::Lightlike, m, {1, l0.v0, l0.v1}, {1, 3}, 1e-3);
    for (const ProfileCurve* p : {&t, &tr, &s, &sr, &lr}) {
      const double d = drift(*p, m);
      worst_drift = std::max(worst_drift, d);
      o.require(d <= 1e-8, std::string(to_string(p->axis())) + " m=" + format_real(m) + " drift " + format_real(d));
    }
    for (double u = 1; u <= 3; u += 0.125) {
      double gap = std::max(std::abs(t.at(u).v0 - tr.at(u).v0), std::abs(l.at(u).v0 - lr.at(u).v0));
      if (shared.contains(u)) gap = std::max(gap, std::abs(s.at(u).v0 - sr.at(u).v0));
      worst_gap = std::max(worst_gap, gap);
    }
  }
  o.require(worst_gap <= 1e-6, "raw vs quadrature gap " + format_real(worst_gap));
  o.detail << "max drift " << worst_drift << ", max path gap " << worst_gap << "; ";
}

FoliationFamily planar(PlaneCase pc, const std::string& r, const std::string& theta, Interval range = {0.5, 2}) {
  FoliationFamily f;
  f.plane_case = pc;
  f.r = parse(r);
  if (!theta.empty()) f.theta = parse(theta);
  f.u0 = 1;
  f.u_range = range;
  return f;
}

FoliationFamily lightlike(const std::string& a, const std::string& b) {
  FoliationFamily f;
  f.plane_case = PlaneCase::LightlikePlanes;
  f.a = parse(a);
  f.b = parse(b);
  return f;
}

bool ratio_constant(const std::vector<double>& r, double tol) {
  for (double x : r)
    if (!std::isfinite(x) || std::abs(x - r.front()) > tol * std::abs(r.front())) return false;
  return true;
}

void coefficients(Outcome& o) {
  const auto a12 = extract_coefficients(planar(PlaneCase::SpacelikePlanes, "2", "0"), {1, 1}, 1);
  o.require(std::abs(a12.A[12] - 2) <= 2e-6, "A12 = " + format_real(a12.A[12]));
  const auto a2 = extract_coefficients(lightlike("u^2", "u"), {1, 0}, 1);
  o.require(std::abs(a2.A[2] / 9216 - 1) <= 1e-6, "lightlike A2 = " + format_real(a2.A[2]));
  const double a3 = paper_coefficient(PlaneCase::SpacelikePlanes, "A3", {{"r", 1}, {"kappa", 1}, {"theta", M_PI / 6}},
                                      {1, 0});
  o.require(std::abs(a3 + 1) <= 1e-6, "spacelike A3 formula = " + format_real(a3));
  // same fixture extracted from a family with r = 1, theta = u - 1 + pi/6 at u = 1
  const auto a3x = extract_coefficients(planar(PlaneCase::SpacelikePlanes, "1", "u - 1 + " + format_real(M_PI / 6)),
                                        {1, 0}, 1);
  o.require(std::abs(a3x.A[3] + 1) <= 1e-6, "spacelike A3 extracted = " + format_real(a3x.A[3]));
  o.detail << "A12=" << a12.A[12] << " A2=" << a2.A[2] << " A3=" << a3x.A[3] << "; ";

  // A6: vanishes with a' = 0, proportional otherwise
  std::vector<double> r6;
  const WeingartenSpec s6(2, 0.8);
  for (double u : {0.5, 1.0, 2.0}) {
    const auto moving = lightlike("0.7*u^2", "u");
    const double p = paper_coefficient(PlaneCase::LightlikePlanes, "A6", paper_inputs(moving, s6, u), s6);
    r6.push_back(extract_coefficients(moving, s6, u).A[6] / p);
    const auto fixed = lightlike("0.7", "u");
    const auto ez = extract_coefficients(fixed, s6, u);
    o.require(paper_coefficient(PlaneCase::LightlikePlanes, "A6", paper_inputs(fixed, s6, u), s6) == 0 &&
                  std::abs(ez.A[6]) <= 1e-9 * ez.scale,
              "A6 vanishing locus at u=" + format_real(u));
  }
  o.require(ratio_constant(r6, 1e-6), "A6 ratio not constant");
  o.detail << "A6 ratio " << r6.front() << "; ";

  // lightlike A1 with a' = c u^{-2m}
  for (double m : {2.0, -2.0, 3.0}) {
    const double c = 1.3;
    const std::string a = format_real(c / (1 - 2 * m)) + "*u^" + format_real(1 - 2 * m);
    const std::string tuned = format_real(-c * c / (2 * (m - 1) * (1 - 4 * m))) + "*u^" + format_real(1 - 4 * m);
    const WeingartenSpec spec(m, 0);
    std::vector<double> r1;
    for (double u : {0.5, 1.0, 2.0}) {
      const auto generic = lightlike(a, "u^2");
      const double p = paper_coefficient(PlaneCase::LightlikePlanes, "A1", paper_inputs(generic, spec, u), spec);
      r1.push_back(extract_coefficients(generic, spec, u).A[1] / p);
      const auto vanishing = lightlike(a, tuned);
      const auto ev = extract_coefficients(vanishing, spec, u);
      const double pv = paper_coefficient(PlaneCase::LightlikePlanes, "A1", paper_inputs(vanishing, spec, u), spec);
      o.require(std::abs(pv) <= 1e-9 * ev.scale && std::abs(ev.A[1]) <= 1e-9 * ev.scale,
                "A1 vanishing locus m=" + format_real(m) + " u=" + format_real(u));
    }
    o.require(ratio_constant(r1, 1e-6), "A1 ratio not constant for m=" + format_real(m));
  }
}

void rotational_symmetry(Outcome& o) {
  struct Fixture {
    FoliationFamily f;
    double m;
  };
  const Fixture fixtures[] = {
      {planar(PlaneCase::SpacelikePlanes, "sqrt(u^2 - 1)", "", {1.5, 3}), 1},
      {planar(PlaneCase::SpacelikePlanes, "sinh(u)", ""), -1},
      {planar(PlaneCase::TimelikePlanes, "sqrt(u^2 + 1)", ""), 1},
      {planar(PlaneCase::TimelikePlanes, "sin(u)", "", {0.3, 2.8}), -1},
      {lightlike("1.5", "-1/u"), 1},
      {lightlike("1.5", "u^3/3"), -1},
      {lightlike("1.5", "log(u)"), 2},
  };
  double worst = 0;
  for (const auto& fx : fixtures)
    for (double t : {0.2, 0.5, 0.8}) {
      const double u = fx.f.u_range.lo + t * (fx.f.u_range.hi - fx.f.u_range.lo);
      for (double n : {0.0, 0.7}) {
        const auto ex = extract_coefficients(fx.f, {fx.m, n}, u);
        double high = 0;
        for (std::size_t j = 1; j < ex.A.size(); ++j) high = std::max(high, std::abs(ex.A[j]));
        for (std::size_t j = 1; j < ex.B.size(); ++j) high = std::max(high, std::abs(ex.B[j]));
        worst = std::max(worst, high / ex.scale);
        o.require(high <= 1e-9 * ex.scale, std::string(to_string(fx.f.plane_case)) + " fixture at u=" +
                                               format_real(u) + " has " + format_real(high / ex.scale));
      }
    }
  const auto bent = extract_coefficients(planar(PlaneCase::SpacelikePlanes, "sqrt(u^2 - 1)", "0.3*u^2", {1.5, 3}),
                                         {1, 0}, 2);
  double high = 0;
  for (std::size_t j = 1; j < bent.A.size(); ++j) high = std::max({high, std::abs(bent.A[j]), std::abs(bent.B[j])});
  o.require(high > 1e-3 * bent.scale, "perturbed fixture looks rotational");
  o.detail << "rotational max " << worst << ", perturbed " << high / bent.scale << " (relative to scale); ";
}

void quadric(Outcome& o) {
  std::mt19937_64 rng(7);
  double worst = 0;
  for (double c : {0.5, 1.0, 2.0})
    for (double lambda : {0.0, 0.6}) {
      const auto s = catalog("pseudohyperbolic_lightlike", {{"c", c}, {"lambda", lambda}});
      const ParamDomain& d = s.patch.domain;
      std::uniform_real_distribution<double> du(d.u_min, d.u_max), dv(d.v_min, d.v_max);
      for (int k = 0; k < 100; ++k) {
        const MVec3 X = s.patch.jet(du(rng), dv(rng)).X;
        const double q = X.x1 * X.x1 + (X.x2 - lambda) * (X.x2 - lambda) - (X.x3 - lambda) * (X.x3 - lambda);
        worst = std::max(worst, std::abs(q + 4 * c));
      }
    }
  o.require(worst <= 1e-9, "quadric deviation " + format_real(worst));
  o.detail << "max deviation " << worst << "; ";
}

double vec_rel(const MVec3& a, const MVec3& b) {
  return std::sqrt(euclidean_norm_squared(a - b)) / std::max(1.0, std::sqrt(euclidean_norm_squared(b)));
}

void hygiene(Outcome& o) {
  std::mt19937_64 rng(2024);
  const LinearMap3 maps[] = {rotation_about_timelike_axis(0.7), rotation_about_spacelike_axis(-0.4),
                             rotation_about_lightlike_axis(0.3)};
  double worst_fd = 0, worst_dual = 0, worst_iso = 0;
  for (const auto& e : catalog_entries()) {
    ParamMap params;
    if (e.name == "lightlike_power") params["m"] = 3;
    const auto s = catalog(e.name, params);
    const auto& p = s.patch;
    const PositionMap position = [p](double u, double v) { return p.jet(u, v).X; };
    grid(p, 20, [&](double u, double v) {
      const SurfaceJet jet = p.jet(u, v);
      const auto cd = curvature_data(jet);
      const auto alt = curvatures_from_forms(fundamental_forms(jet));
      const double hs = std::abs(cd.H) + std::sqrt(std::abs(cd.K)) + 1e-300;
      worst_dual = std::max({worst_dual, std::abs(alt.H - cd.H) / std::max(std::abs(cd.H), hs),
                             std::abs(alt.K - cd.K) / std::max(std::abs(cd.K), hs * hs)});
    });
    const ParamDomain& d = p.domain;
    std::uniform_real_distribution<double> du(d.u_min + 0.01, d.u_max - 0.01), dv(d.v_min, d.v_max);
    for (int k = 0; k < 50; ++k) {
      const double u = du(rng), v = dv(rng);
      const SurfaceJet an = p.jet(u, v);
      const SurfaceJet fd = finite_difference_jet(position, u, v, 4e-3);
      worst_fd = std::max({worst_fd, vec_rel(fd.Xu, an.Xu), vec_rel(fd.Xv, an.Xv), vec_rel(fd.Xuu, an.Xuu),
                           vec_rel(fd.Xuv, an.Xuv), vec_rel(fd.Xvv, an.Xvv)});
      const auto cd = curvature_data(an);
      const double sc = 1 + std::abs(cd.kappa1) + std::abs(cd.kappa2);
      for (const auto& R : maps) {
        const auto moved = curvature_data(transformed(p, R), u, v);
        worst_iso = std::max({worst_iso, std::abs(moved.H - cd.H) / sc, std::abs(moved.K - cd.K) / (sc * sc),
                              std::abs(moved.kappa1 - cd.kappa1) / sc, std::abs(moved.kappa2 - cd.kappa2) / sc});
      }
    }
  }
  o.require(worst_fd <= 1e-6, "finite difference " + format_real(worst_fd));
  o.require(worst_dual <= 1e-10, "dual path " + format_real(worst_dual));
  o.require(worst_iso <= 1e-10, "isometry " + format_real(worst_iso));
  o.detail << "fd " << worst_fd << ", dual " << worst_dual << ", isometry " << worst_iso << "; ";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void cli_contract(Outcome& o) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "lwsurf_acceptance";
  fs::create_directories(dir);
  const auto good = dir / "good.json", bad = dir / "bad.json", out = dir / "out.txt";
  std::ofstream(good) << R"({"kind": "catalog", "name": "timelike_m2", "weingarten": {"m": 2, "n": 0}})";
  std::ofstream(bad) << R"({"kind": "catalog", "name": "catenoid_first_kind", "weingarten": {"m": 2, "n": 0}})";

  auto run = [&](const std::string& args, std::string& text) {
    const std::string cmd = std::string(LWSURF_BINARY) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    text = slurp(out);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  std::string a, b, c;
  const int ca = run("verify --config " + good.string(), a);
  const int cb = run("verify --config " + good.string(), b);
  o.require(ca == 0 && cb == 0, "positive fixture exit " + std::to_string(ca));
  o.require(a == b, "repeat runs differ");
  try {
    const double r = nlohmann::json::parse(a).at("max_eq5_residual").get<double>();
    o.require(r <= 1e-9, "positive fixture residual " + format_real(r));
  } catch (const std::exception& e) {
    o.require(false, std::string("unparseable verify output: ") + e.what());
  }
  o.require(run("verify --config " + bad.string(), c) == 1, "negative fixture did not exit 1");
  o.require(run("catalog", c) == 0 && c.find("enneper_second_kind m=-1 n=0\n") != std::string::npos,
            "catalog listing");
  o.require(run("verify", c) == 2, "usage error did not exit 2");

  const auto obj1 = dir / "a.obj", obj2 = dir / "b.obj";
  std::string ignored;
  run("mesh --config " + good.string() + " --grid 12x9 --out " + obj1.string(), ignored);
  run("mesh --config " + good.string() + " --grid 12x9 --out " + obj2.string(), ignored);
  const std::string m1 = slurp(obj1);
  o.require(!m1.empty() && m1 == slurp(obj2), "mesh files differ");
  o.detail << "exit codes 0/1/2 on positive, negative and usage fixtures; repeat outputs identical; ";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {"umbilical suite", umbilical},
      {"maximality suite", maximality},
      {"Weingarten closure", closure},
      {"first-integral conservation", conservation},
      {"coefficient reproduction", coefficients},
      {"rotational symmetry", rotational_symmetry},
      {"lightlike m=1 quadric identity", quadric},
      {"numerical hygiene", hygiene},
      {"CLI contract", cli_contract},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << ++index << " (" << c.name << "): " << o.detail.str()
              << '\n';
  }
  return failed == 0 ? 0 : 1;
}
