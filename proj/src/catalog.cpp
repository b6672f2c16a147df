#include "lwsurf/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lwsurf/errors.hpp"

namespace lwsurf {

namespace {

constexpr double kCallerM = std::numeric_limits<double>::quiet_NaN();

}  // namespace

const std::vector<CatalogInfo>& catalog_entries() {
  static const std::vector<CatalogInfo> entries{
      {"pseudohyperbolic_timelike", AxisKind::Timelike, 1, {"r", "lambda"}},
      {"catenoid_first_kind", AxisKind::Timelike, -1, {"c", "lambda"}},
      {"timelike_m2", AxisKind::Timelike, 2, {"c", "lambda"}},
      {"timelike_m_neg2", AxisKind::Timelike, -2, {"c", "lambda"}},
      {"pseudohyperbolic_spacelike", AxisKind::Spacelike, 1, {"r", "lambda"}},
      {"catenoid_second_kind", AxisKind::Spacelike, -1, {"c", "lambda"}},
      {"spacelike_m_neg2", AxisKind::Spacelike, -2, {"c", "lambda"}},
      {"pseudohyperbolic_lightlike", AxisKind::Lightlike, 1, {"c", "r", "lambda"}},
      {"enneper_second_kind", AxisKind::Lightlike, -1, {"c", "lambda"}},
      {"lightlike_log", AxisKind::Lightlike, 2, {"c", "lambda"}},
      {"lightlike_power", AxisKind::Lightlike, kCallerM, {"m", "c", "lambda"}},
  };
  return entries;
}

namespace {

double get(const ParamMap& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

double positive(const ParamMap& p, const std::string& key, double fallback) {
  const double x = get(p, key, fallback);
  if (!(x > 0) || !std::isfinite(x)) throw DomainError(key + " must be positive");
  return x;
}

std::string num(double x) {
  const std::string s = format_real(x);
  return x < 0 ? "(" + s + ")" : s;
}

}  // namespace

CatalogSurface catalog(const std::string& name, const ParamMap& params) {
  const auto& entries = catalog_entries();
  const auto info = std::find_if(entries.begin(), entries.end(), [&](const CatalogInfo& e) { return e.name == name; });
  if (info == entries.end()) throw UnknownName("unknown catalog entry '" + name + "'");
  for (const auto& [key, value] : params) {
    const bool known = key == "u_min" || key == "u_max" || key == "v_max" ||
                       std::find(info->params.begin(), info->params.end(), key) != info->params.end();
    if (!known) throw UnknownName("catalog entry '" + name + "' has no parameter '" + key + "'");
    if (!std::isfinite(value)) throw DomainError("parameter '" + key + "' must be finite");
  }

  const double lambda = get(params, "lambda", 0);
  const std::string L = num(lambda);
  double m = info->m;
  double lo = 0.5, hi = 2.0;
  std::string text;

  if (name == "pseudohyperbolic_timelike") {
    const double r = positive(params, "r", 1);
    text = L + " + sqrt(u^2 + " + num(r * r) + ")";
  } else if (name == "catenoid_first_kind") {
    const double c = positive(params, "c", 1);
    const std::string s = num(std::sqrt(c));
    text = "asinh(" + s + "*u)/" + s + " + " + L;
  } else if (name == "timelike_m2") {
    const double c = positive(params, "c", 1);
    text = "sqrt(u*(u + " + num(c) + ")) - " + num(c) + "*asinh(sqrt(u/" + num(c) + ")) + " + L;
  } else if (name == "timelike_m_neg2") {
    const double c = positive(params, "c", 1);
    text = "2*sqrt(1 + " + num(c) + "*u)/" + num(c) + " + " + L;
  } else if (name == "pseudohyperbolic_spacelike") {
    const double r = positive(params, "r", 1);
    text = "sqrt((u + " + L + ")^2 + " + num(r * r) + ")";
  } else if (name == "catenoid_second_kind") {
    const double c = positive(params, "c", 1);
    const double s = std::sqrt(c);
    text = "sin(" + num(s) + "*(u + " + L + "))/" + num(s);
    lo = 0.3 / s - lambda;
    hi = 2.8 / s - lambda;
  } else if (name == "spacelike_m_neg2") {
    const double c = positive(params, "c", 1);
    text = "(4 - " + num(c * c) + "*(u + " + L + ")^2)/" + num(4 * c);
    lo = 0.25 / c - lambda;
    hi = 1.75 / c - lambda;
  } else if (name == "pseudohyperbolic_lightlike") {
    if (params.count("c") && params.count("r")) throw DomainError("give either c or r, not both");
    const double c = params.count("r") ? std::pow(positive(params, "r", 1), 2) / 4 : positive(params, "c", 1);
    text = "-" + num(c) + "/u + " + L;
  } else if (name == "enneper_second_kind") {
    const double c = positive(params, "c", 1);
    text = num(c) + "*u^3/3 + " + L;
  } else if (name == "lightlike_log") {
    const double c = positive(params, "c", 1);
    text = num(c) + "*log(u) + " + L;
  } else {  // lightlike_power
    if (!params.count("m")) throw MissingParam("catalog entry 'lightlike_power' requires parameter 'm'");
    m = get(params, "m", 0);
    if (m == 0) throw DomainError("m must be non-zero");
    const double c = positive(params, "c", 1);
    if (m == 2)
      text = num(c) + "*log(u) + " + L;
    else
      text = num(m * c / (m - 2)) + "*u^" + num((m - 2) / m) + " + " + L;
  }

  lo = get(params, "u_min", lo);
  hi = get(params, "u_max", hi);
  const double v_max = get(params, "v_max", 2.0);

  Expr expr = Expr::parse(text);
  ProfileCurve profile = ProfileCurve::closed_form(
      info->axis, [expr](double u) { return expr.eval_jet(u); }, {lo, hi}, name + ": z(u) = " + text);
  SurfacePatch patch = build_rotational_patch(info->axis, profile, v_max);
  patch.label = name;
  return {name, info->axis, WeingartenSpec(m, 0), std::move(expr), std::move(profile), std::move(patch)};
}

}  // namespace lwsurf
