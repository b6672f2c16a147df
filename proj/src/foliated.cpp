#include "lwsurf/foliated.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <ostream>

#include "lwsurf/errors.hpp"

namespace lwsurf {

std::string_view to_string(PlaneCase c) {
  switch (c) {
    case PlaneCase::SpacelikePlanes:
      return "spacelike_planes";
    case PlaneCase::TimelikePlanes:
      return "timelike_planes";
    case PlaneCase::LightlikePlanes:
      return "lightlike_planes";
  }
  return "unknown";
}

PlaneCase parse_plane_case(std::string_view s) {
  if (s == "spacelike" || s == "spacelike_planes") return PlaneCase::SpacelikePlanes;
  if (s == "timelike" || s == "timelike_planes") return PlaneCase::TimelikePlanes;
  if (s == "lightlike" || s == "lightlike_planes") return PlaneCase::LightlikePlanes;
  throw UnknownName("unknown plane case '" + std::string(s) + "'");
}

namespace {

constexpr double kQuadratureTol = 1e-12;

// Centre coordinate by quadrature of g(theta(t)) from u0, with exact
// derivatives g(theta), g'(theta) theta'.
Jet2 centre_component(const FoliationFamily& f, double base, double u, double (*g)(double),
                      double (*dg)(double)) {
  const Jet2 th = f.theta->eval_jet(u);
  double value;
  if (f.theta->is_constant()) {
    value = base + (u - f.u0) * g(th.v0);
  } else {
    const Expr& theta = *f.theta;
    value = base + integrate_adaptive([&](double t) { return g(theta.eval(t)); }, f.u0, u, kQuadratureTol);
  }
  return {value, g(th.v0), dg(th.v0) * th.v1};
}

double neg_sin(double x) { return -std::sin(x); }
double sin_fn(double x) { return std::sin(x); }
double cos_fn(double x) { return std::cos(x); }
double sinh_fn(double x) { return std::sinh(x); }
double cosh_fn(double x) { return std::cosh(x); }

}  // namespace

FoliationComponents foliation_components(const FoliationFamily& f, double u) {
  FoliationComponents k;
  if (f.plane_case == PlaneCase::LightlikePlanes) {
    if (u == 0) throw DomainError("lightlike-plane foliations need u != 0");
    k.c1 = f.a.eval_jet(u);
    k.c2 = f.b.eval_jet(u);
    return k;
  }
  k.r = f.r.eval_jet(u);
  if (!(k.r.v0 > 0)) throw NonPositiveRadius("r(" + format_real(u) + ") = " + format_real(k.r.v0) + " is not positive");
  if (!f.theta) {
    k.c1 = Jet2::constant(f.base1);
    k.c2 = Jet2::constant(f.base2);
  } else if (f.plane_case == PlaneCase::SpacelikePlanes) {
    k.c1 = centre_component(f, f.base1, u, cos_fn, neg_sin);
    k.c2 = centre_component(f, f.base2, u, sin_fn, cos_fn);
  } else {
    k.c1 = centre_component(f, f.base1, u, cosh_fn, sinh_fn);
    k.c2 = centre_component(f, f.base2, u, sinh_fn, cosh_fn);
  }
  return k;
}

template <typename T>
BasicSurfaceJet<T> foliated_jet(PlaneCase pc, const FoliationComponents& k, double u, T v) {
  using std::cos, std::sin, std::cosh, std::sinh;
  using V = BasicVec3<T>;
  const T zero(0), one(1);
  switch (pc) {
    case PlaneCase::SpacelikePlanes: {
      const T c = cos(v), s = sin(v);
      const Jet2 &x = k.c1, &y = k.c2, &r = k.r;
      return {V{x.v0 + r.v0 * c, y.v0 + r.v0 * s, T(u)},
              V{x.v1 + r.v1 * c, y.v1 + r.v1 * s, one},
              V{-r.v0 * s, r.v0 * c, zero},
              V{x.v2 + r.v2 * c, y.v2 + r.v2 * s, zero},
              V{-r.v1 * s, r.v1 * c, zero},
              V{-r.v0 * c, -r.v0 * s, zero}};
    }
    case PlaneCase::TimelikePlanes: {
      const T c = cosh(v), s = sinh(v);
      const Jet2 &y = k.c1, &z = k.c2, &r = k.r;
      return {V{T(u), y.v0 + r.v0 * s, z.v0 + r.v0 * c},
              V{one, y.v1 + r.v1 * s, z.v1 + r.v1 * c},
              V{zero, r.v0 * c, r.v0 * s},
              V{zero, y.v2 + r.v2 * s, z.v2 + r.v2 * c},
              V{zero, r.v1 * c, r.v1 * s},
              V{zero, r.v0 * s, r.v0 * c}};
    }
    case PlaneCase::LightlikePlanes: {
      const Jet2 &a = k.c1, &b = k.c2;
      const T v2 = v * v;
      return {V{a.v0 - 2 * u * v, b.v0 + u - u * v2, b.v0 - u - u * v2},
              V{a.v1 - 2.0 * v, b.v1 + 1 - v2, b.v1 - 1 - v2},
              V{T(-2 * u), -2 * u * v, -2 * u * v},
              V{T(a.v2), T(b.v2), T(b.v2)},
              V{T(-2), -2.0 * v, -2.0 * v},
              V{zero, T(-2 * u), T(-2 * u)}};
    }
  }
  return {};
}

template BasicSurfaceJet<double> foliated_jet(PlaneCase, const FoliationComponents&, double, double);
template BasicSurfaceJet<std::complex<double>> foliated_jet(PlaneCase, const FoliationComponents&, double,
                                                            std::complex<double>);

SurfacePatch build_foliated_patch(const FoliationFamily& family, double v_max) {
  if (!(family.u_range.lo < family.u_range.hi)) throw DomainError("u range must satisfy lo < hi");
  if (!(v_max > 0)) throw DomainError("v_max must be positive");
  // Fail early on radius and domain problems at the range ends and centre.
  for (double u : {family.u_range.lo, 0.5 * (family.u_range.lo + family.u_range.hi), family.u_range.hi})
    foliation_components(family, u);

  SurfacePatch patch;
  if (family.plane_case == PlaneCase::SpacelikePlanes)
    patch.domain = {family.u_range.lo, family.u_range.hi, 0.0, 2 * std::numbers::pi};
  else
    patch.domain = {family.u_range.lo, family.u_range.hi, -v_max, v_max};
  patch.label = std::string(to_string(family.plane_case)) + " foliation";
  auto shared = std::make_shared<const FoliationFamily>(family);
  patch.evaluator = [shared](double u, double v) {
    return foliated_jet(shared->plane_case, foliation_components(*shared, u), u, v);
  };
  return patch;
}

double eq5_raw(const FoliationFamily& family, const WeingartenSpec& spec, double u, double v) {
  const auto k = foliation_components(family, u);
  return eq5_lhs(determinant_terms(foliated_jet(family.plane_case, k, u, v)), spec);
}

// ---------------------------------------------------------------------------
// Coefficient extraction

double CoefficientExpansion::evaluate(double v) const {
  double sum = 0;
  for (std::size_t j = 0; j < A.size(); ++j) {
    const double jd = static_cast<double>(j);
    switch (basis) {
      case BasisKind::Trig:
        sum += A[j] * std::cos(jd * v) + B[j] * std::sin(jd * v);
        break;
      case BasisKind::Hyperbolic:
        sum += A[j] * std::cosh(jd * v) + B[j] * std::sinh(jd * v);
        break;
      case BasisKind::Polynomial:
        sum += A[j] * std::pow(v, jd);
        break;
    }
  }
  return sum;
}

double CoefficientExpansion::max_abs_coefficient() const {
  double m = 0;
  for (double a : A) m = std::max(m, std::abs(a));
  for (double b : B) m = std::max(m, std::abs(b));
  return m;
}

namespace {

constexpr int kTrigSamples = 100;
constexpr int kHyperbolicSamples = 100;
constexpr int kChebyshevSamples = 13;
constexpr int kHeldOut = 50;
constexpr int kMaxHarmonic = 12;
constexpr int kMaxPower = 6;
constexpr double kIllConditioned = 1e12;

struct Target {
  PlaneCase pc;
  FoliationComponents k;
  double u;
  const WeingartenSpec& spec;
  bool reduced;

  template <typename T>
  T operator()(T v) const {
    const auto terms = determinant_terms(foliated_jet(pc, k, u, v));
    return reduced ? reduced_relation(terms, spec.m()) : eq5_lhs(terms, spec);
  }
  double scale(double v) const {
    const auto terms = determinant_terms(foliated_jet(pc, k, u, v));
    return reduced ? reduced_scale(terms, spec.m()) : eq5_scale(terms, spec);
  }
};

double condition_number(const Eigen::MatrixXd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  const double lo = s(s.size() - 1);
  return lo > 0 ? s(0) / lo : std::numeric_limits<double>::infinity();
}

}  // namespace

CoefficientExpansion extract_coefficients(const FoliationFamily& family, const WeingartenSpec& spec, double u,
                                          HyperbolicMethod method) {
  const Target f{family.plane_case, foliation_components(family, u), u, spec, spec.n() == 0};
  CoefficientExpansion out;
  out.u = u;
  out.reduced = f.reduced;
  const double two_pi = 2 * std::numbers::pi;
  std::vector<double> held_out;

  switch (family.plane_case) {
    case PlaneCase::SpacelikePlanes: {
      out.basis = BasisKind::Trig;
      out.A.assign(kMaxHarmonic + 1, 0.0);
      out.B.assign(kMaxHarmonic + 1, 0.0);
      for (int k = 0; k < kTrigSamples; ++k) {
        const double v = two_pi * k / kTrigSamples;
        const double fv = f(v);
        out.scale = std::max(out.scale, f.scale(v));
        for (int j = 0; j <= kMaxHarmonic; ++j) {
          out.A[j] += fv * std::cos(j * v);
          out.B[j] += fv * std::sin(j * v);
        }
      }
      out.A[0] /= kTrigSamples;
      out.B[0] = 0;
      for (int j = 1; j <= kMaxHarmonic; ++j) {
        out.A[j] *= 2.0 / kTrigSamples;
        out.B[j] *= 2.0 / kTrigSamples;
      }
      for (int k = 0; k < kHeldOut; ++k) held_out.push_back(two_pi * (k + 0.37) / kHeldOut);
      break;
    }
    case PlaneCase::TimelikePlanes: {
      out.basis = BasisKind::Hyperbolic;
      out.A.assign(kMaxHarmonic + 1, 0.0);
      out.B.assign(kMaxHarmonic + 1, 0.0);
      for (int k = 0; k < kHyperbolicSamples; ++k) {
        const double v = -1 + 2.0 * k / (kHyperbolicSamples - 1);
        out.scale = std::max(out.scale, f.scale(v));
      }
      if (method == HyperbolicMethod::Continuation) {
        // At v = i phi: cosh(j v) = cos(j phi), sinh(j v) = i sin(j phi).
        for (int k = 0; k < kTrigSamples; ++k) {
          const double phi = two_pi * k / kTrigSamples;
          const std::complex<double> g = f(std::complex<double>(0, phi));
          for (int j = 0; j <= kMaxHarmonic; ++j) {
            out.A[j] += g.real() * std::cos(j * phi);
            out.B[j] += g.imag() * std::sin(j * phi);
          }
        }
        out.A[0] /= kTrigSamples;
        out.B[0] = 0;
        for (int j = 1; j <= kMaxHarmonic; ++j) {
          out.A[j] *= 2.0 / kTrigSamples;
          out.B[j] *= 2.0 / kTrigSamples;
        }
      } else {
        const int cols = 2 * kMaxHarmonic + 1;
        Eigen::MatrixXd M(kHyperbolicSamples, cols);
        Eigen::VectorXd rhs(kHyperbolicSamples);
        for (int k = 0; k < kHyperbolicSamples; ++k) {
          const double v = -1 + 2.0 * k / (kHyperbolicSamples - 1);
          M(k, 0) = 1;
          for (int j = 1; j <= kMaxHarmonic; ++j) {
            M(k, 2 * j - 1) = std::cosh(j * v);
            M(k, 2 * j) = std::sinh(j * v);
          }
          rhs(k) = f(v);
        }
        out.condition = condition_number(M);
        const Eigen::VectorXd x = M.colPivHouseholderQr().solve(rhs);
        out.A[0] = x(0);
        for (int j = 1; j <= kMaxHarmonic; ++j) {
          out.A[j] = x(2 * j - 1);
          out.B[j] = x(2 * j);
        }
      }
      for (int k = 0; k < kHeldOut; ++k) held_out.push_back(-1 + 2.0 * (k + 0.37) / kHeldOut);
      break;
    }
    case PlaneCase::LightlikePlanes: {
      out.basis = BasisKind::Polynomial;
      Eigen::MatrixXd M(kChebyshevSamples, kMaxPower + 1);
      Eigen::VectorXd rhs(kChebyshevSamples);
      for (int k = 0; k < kChebyshevSamples; ++k) {
        const double v = std::cos(std::numbers::pi * (k + 0.5) / kChebyshevSamples);
        for (int j = 0; j <= kMaxPower; ++j) M(k, j) = std::pow(v, j);
        rhs(k) = f(v);
        out.scale = std::max(out.scale, f.scale(v));
      }
      out.condition = condition_number(M);
      const Eigen::VectorXd x = M.colPivHouseholderQr().solve(rhs);
      out.A.assign(x.data(), x.data() + x.size());
      for (int k = 0; k < kHeldOut; ++k) held_out.push_back(-1 + 2.0 * (k + 0.37) / kHeldOut);
      break;
    }
  }

  out.ill_conditioned = out.condition > kIllConditioned;
  const double denom = std::max(out.max_abs_coefficient(), DBL_MIN);
  for (double v : held_out)
    out.reconstruction_error = std::max(out.reconstruction_error, std::abs(out.evaluate(v) - f(v)) / denom);
  return out;
}

// ---------------------------------------------------------------------------
// Printed closed forms

const std::vector<std::string>& paper_coefficient_names(PlaneCase c) {
  static const std::vector<std::string> spacelike{"A12", "B12", "A3", "B3", "A2", "B2", "A1", "B1",
                                                  "A2_conditional", "B2_conditional"};
  static const std::vector<std::string> timelike{"A12", "B12", "A3", "B3", "A2", "B2", "A1", "B1", "A0"};
  static const std::vector<std::string> lightlike{"A6", "A2", "A1", "A0"};
  switch (c) {
    case PlaneCase::SpacelikePlanes:
      return spacelike;
    case PlaneCase::TimelikePlanes:
      return timelike;
    case PlaneCase::LightlikePlanes:
      return lightlike;
  }
  return lightlike;
}

namespace {

double input(const ParamMap& in, const std::string& key) {
  const auto it = in.find(key);
  if (it == in.end()) throw MissingParam("coefficient formula needs input '" + key + "'");
  return it->second;
}

bool near_zero(double x, double scale) { return std::abs(x) <= 1e-9 * std::max(1.0, scale); }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionViolated(what);
}

double planar_coefficient(PlaneCase c, const std::string& name, const ParamMap& in, const WeingartenSpec& spec) {
  const bool spacelike = c == PlaneCase::SpacelikePlanes;
  const double m = spec.m(), n = spec.n();
  const double r = input(in, "r"), th = input(in, "theta");
  const double r4 = std::pow(r, 4);
  // Trigonometric functions become hyperbolic for timelike planes.
  const auto C = [&](double x) { return spacelike ? std::cos(x) : std::cosh(x); };
  const auto S = [&](double x) { return spacelike ? std::sin(x) : std::sinh(x); };

  if (name == "A12") return std::pow(n, 4) * std::pow(r, 12) * C(12 * th) / 2048;
  if (name == "B12") return (spacelike ? 1 : -1) * std::pow(n, 4) * std::pow(r, 12) * S(12 * th) / 2048;

  require(n == 0, name + " formula assumes n = 0");
  const double kappa = input(in, "kappa");
  if (name == "A3")
    return spacelike ? -0.25 * (1 + m) * (1 + m) * std::pow(r, 5) * kappa * std::sin(3 * th)
                     : 0.25 * (1 + m) * (1 + m) * std::pow(r, 5) * kappa * std::cosh(3 * th);
  if (name == "B3")
    return spacelike ? 0.25 * (1 + m) * (1 + m) * std::pow(r, 5) * kappa * std::cos(3 * th)
                     : -0.25 * (1 + m) * (1 + m) * std::pow(r, 5) * kappa * std::sinh(3 * th);

  require(near_zero(kappa, 0), name + " formula assumes theta is constant (kappa = 0)");
  const double r1 = input(in, "r1"), r2 = input(in, "r2");
  const double p2 = 4 * m * r1 * r1 + (m + 1) * (m + 1) * r * r2;
  if (name == "A2") return 0.5 * C(2 * th) * r4 * p2;
  if (name == "B2") return (spacelike ? 0.5 : -0.5) * S(2 * th) * r4 * p2;
  if (spacelike) {
    const double p1 = 2 * m * r1 * r1 + (1 + m * m) * r * r2;
    if (name == "A1") return 2 * std::cos(th) * r4 * r1 * p1;
    if (name == "B1") return 2 * std::sin(th) * r4 * r1 * p1;
    if (name == "A2_conditional" || name == "B2_conditional") {
      require(near_zero(r1 * r1 + r * r2, std::max(r1 * r1, std::abs(r * r2))),
              name + " formula assumes r'^2 + r r'' = 0");
      const double base = 0.5 * (1 - m) * (1 - m) * r4 * r1 * r1;
      return name[0] == 'A' ? base * std::cos(2 * th) : base * std::sin(2 * th);
    }
  } else {
    const double p1 = -4 * m + 2 * m * r1 * r1 + (1 + m * m) * r * r2;
    if (name == "A1") return 2 * std::sinh(th) * r4 * r1 * p1;
    if (name == "B1") return 2 * std::cosh(th) * r4 * r1 * p1;
    if (name == "A0") {
      require(near_zero(r1, 0) && near_zero(r2, 0), "A0 formula assumes r is constant");
      return 4 * m * r4;
    }
  }
  throw UnknownName("no printed formula '" + name + "' for " + std::string(to_string(c)));
}

double lightlike_coefficient(const std::string& name, const ParamMap& in, const WeingartenSpec& spec) {
  const double m = spec.m(), n = spec.n();
  const double u = input(in, "u");
  const double a1 = input(in, "a1");
  if (name == "A6") return std::pow(n, 4) * std::pow(u, 12) * std::pow(a1, 6);
  require(n == 0, name + " formula assumes n = 0");
  const double a2 = input(in, "a2");
  if (name == "A2") return 256 * std::pow(u, 4) * (2 * m * a1 + u * a2) * (2 * a1 + m * u * a2);
  if (name != "A1" && name != "A0") throw UnknownName("no printed formula '" + name + "' for lightlike_planes");

  const double c = input(in, "c");
  const double b1 = input(in, "b1"), b2 = input(in, "b2");
  require(c > 0, name + " formula assumes c > 0");
  const double expected_a1 = c * std::pow(u, -2 * m);
  const double expected_a2 = -2 * m * c * std::pow(u, -2 * m - 1);
  require(near_zero(a1 - expected_a1, std::abs(expected_a1)) && near_zero(a2 - expected_a2, std::abs(expected_a2)),
          name + " formula assumes a' = c u^{-2m}");
  const double w = 2 * m * b1 + u * b2;
  if (name == "A1")
    return 512 * c * std::pow(u, 4 - 6 * m) * (m + 1) * (-m * c * c + (m - 1) * std::pow(u, 4 * m) * w);
  const double lhs = m * c * c, rhs = (m - 1) * std::pow(u, 4 * m) * w;
  require(near_zero(lhs - rhs, std::max(std::abs(lhs), std::abs(rhs))), "A0 formula assumes A1 = 0");
  return (m + 1) * (m + 1) * std::pow(u, 4) * w * w;
}

}  // namespace

double paper_coefficient(PlaneCase c, const std::string& name, const ParamMap& inputs, const WeingartenSpec& spec) {
  const auto& names = paper_coefficient_names(c);
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UnknownName("no printed formula '" + name + "' for " + std::string(to_string(c)));
  if (c == PlaneCase::LightlikePlanes) return lightlike_coefficient(name, inputs, spec);
  return planar_coefficient(c, name, inputs, spec);
}

ParamMap paper_inputs(const FoliationFamily& family, const WeingartenSpec& spec, double u) {
  const auto k = foliation_components(family, u);
  if (family.plane_case == PlaneCase::LightlikePlanes) {
    ParamMap in{{"u", u}, {"a1", k.c1.v1}, {"a2", k.c1.v2}, {"b1", k.c2.v1}, {"b2", k.c2.v2}};
    const double c = k.c1.v1 * std::pow(u, 2 * spec.m());
    if (c > 0 && std::isfinite(c)) in["c"] = c;
    return in;
  }
  ParamMap in{{"r", k.r.v0}, {"r1", k.r.v1}, {"r2", k.r.v2}};
  if (family.theta) {
    const Jet2 th = family.theta->eval_jet(u);
    in["theta"] = th.v0;
    in["kappa"] = th.v1;
  }
  return in;
}

void write_coefficient_csv(const FoliationFamily& family, const WeingartenSpec& spec, const std::vector<double>& us,
                           std::ostream& out) {
  out << "case,u,j,A_extracted,B_extracted,A_paper,B_paper,rel_err\n";
  for (double u : us) {
    const auto ex = extract_coefficients(family, spec, u);
    const auto in = paper_inputs(family, spec, u);
    const auto try_formula = [&](const std::string& name) -> std::optional<double> {
      const auto& names = paper_coefficient_names(family.plane_case);
      if (std::find(names.begin(), names.end(), name) == names.end()) return std::nullopt;
      try {
        return paper_coefficient(family.plane_case, name, in, spec);
      } catch (const PreconditionViolated&) {
        return std::nullopt;
      } catch (const MissingParam&) {
        return std::nullopt;
      }
    };
    const double floor = std::max(1e-9 * ex.scale, DBL_MIN);
    for (std::size_t j = 0; j < ex.A.size(); ++j) {
      const std::string idx = std::to_string(j);
      const auto ap = try_formula("A" + idx);
      std::optional<double> bp;
      if (!ex.B.empty()) bp = try_formula("B" + idx);
      double rel = 0;
      bool any = false;
      if (ap) {
        rel = std::max(rel, std::abs(ex.A[j] - *ap) / std::max(std::abs(*ap), floor));
        any = true;
      }
      if (bp) {
        rel = std::max(rel, std::abs(ex.B[j] - *bp) / std::max(std::abs(*bp), floor));
        any = true;
      }
      out << to_string(family.plane_case) << ',' << format_real(u) << ',' << j << ',' << format_real(ex.A[j]) << ','
          << (ex.B.empty() ? std::string() : format_real(ex.B[j])) << ',' << (ap ? format_real(*ap) : "") << ','
          << (bp ? format_real(*bp) : "") << ',' << (any ? format_real(rel) : "") << '\n';
    }
  }
}

}  // namespace lwsurf
