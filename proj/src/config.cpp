#include "lwsurf/config.hpp"

#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>

#include "lwsurf/errors.hpp"

namespace lwsurf {

namespace {

using nlohmann::json;

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return j[key].get<double>();
}

double required_number(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing required key '") + key + "'");
  return number(j, key, 0);
}

std::string text(const json& j, const char* key) {
  if (!j[key].is_string()) throw ConfigError(std::string("'") + key + "' must be a string");
  return j[key].get<std::string>();
}

std::array<double, 2> pair(const json& j, const char* key) {
  const json& p = j[key];
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
    throw ConfigError(std::string("'") + key + "' must be a two-element numeric array");
  const std::array<double, 2> r{p[0].get<double>(), p[1].get<double>()};
  if (!(r[0] < r[1])) throw ConfigError(std::string("'") + key + "' must satisfy lo < hi");
  return r;
}

std::size_t count(const json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer() || j[key].get<long long>() < 2)
    throw ConfigError(std::string("'") + key + "' must be an integer >= 2");
  return j[key].get<std::size_t>();
}

Expr expression(const json& j, const char* key) {
  try {
    return Expr::parse(text(j, key));
  } catch (const ParseError& e) {
    throw ConfigError(std::string("'") + key + "': " + e.what());
  }
}

}  // namespace

SurfaceConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  if (!j.contains("kind")) throw ConfigError("missing required key 'kind'");

  SurfaceConfig c;
  const std::string kind = text(j, "kind");
  if (kind == "catalog") {
    c.kind = SurfaceKind::Catalog;
    only_keys(j, {"kind", "name", "params", "weingarten", "grid", "v_max"}, "catalog configuration");
    if (!j.contains("name")) throw ConfigError("missing required key 'name'");
    c.name = text(j, "name");
    if (j.contains("params")) {
      if (!j["params"].is_object()) throw ConfigError("'params' must be an object");
      for (const auto& [key, value] : j["params"].items()) {
        if (!value.is_number()) throw ConfigError("parameter '" + key + "' must be a number");
        c.params[key] = value.get<double>();
      }
    }
  } else if (kind == "rotational") {
    c.kind = SurfaceKind::Rotational;
    only_keys(j, {"kind", "axis", "m", "c", "sign", "u0", "z0", "lambda", "u_range", "tol", "weingarten", "grid",
                  "v_max"},
              "rotational configuration");
    if (!j.contains("axis")) throw ConfigError("missing required key 'axis'");
    try {
      c.axis = parse_axis_kind(text(j, "axis"));
    } catch (const UnknownName& e) {
      throw ConfigError(e.what());
    }
    c.profile.m = required_number(j, "m");
    c.profile.c = number(j, "c", 1);
    const double sign = number(j, "sign", 1);
    if (sign != 1 && sign != -1) throw ConfigError("'sign' must be 1 or -1");
    c.profile.sign = static_cast<int>(sign);
    c.profile.u0 = number(j, "u0", 1);
    c.profile.z0 = number(j, "z0", c.axis == AxisKind::Spacelike ? 1 : 0);
    c.profile.lambda = number(j, "lambda", 0);
    if (j.contains("u_range")) {
      const auto r = pair(j, "u_range");
      c.u_range = {r[0], r[1]};
    }
    c.tol = number(j, "tol", 1e-10);
  } else if (kind == "foliated") {
    c.kind = SurfaceKind::Foliated;
    only_keys(j, {"kind", "case", "theta", "r", "base", "u0", "a", "b", "u_range", "weingarten", "grid", "v_max"},
              "foliated configuration");
    if (!j.contains("case")) throw ConfigError("missing required key 'case'");
    try {
      c.family.plane_case = parse_plane_case(text(j, "case"));
    } catch (const UnknownName& e) {
      throw ConfigError(e.what());
    }
    const bool lightlike = c.family.plane_case == PlaneCase::LightlikePlanes;
    for (const char* key : {"theta", "r", "base", "u0"})
      if (lightlike && j.contains(key)) throw ConfigError(std::string("'") + key + "' does not apply to lightlike planes");
    for (const char* key : {"a", "b"})
      if (!lightlike && j.contains(key)) throw ConfigError(std::string("'") + key + "' applies only to lightlike planes");
    if (j.contains("theta")) c.family.theta = expression(j, "theta");
    if (j.contains("r")) c.family.r = expression(j, "r");
    if (j.contains("a")) c.family.a = expression(j, "a");
    if (j.contains("b")) c.family.b = expression(j, "b");
    if (j.contains("base")) {
      const json& b = j["base"];
      if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number())
        throw ConfigError("'base' must be a two-element numeric array");
      c.family.base1 = b[0].get<double>();
      c.family.base2 = b[1].get<double>();
    }
    c.family.u0 = number(j, "u0", 0);
    if (j.contains("u_range")) {
      const auto r = pair(j, "u_range");
      c.family.u_range = {r[0], r[1]};
    }
    if (!j.contains("weingarten")) throw ConfigError("foliated configurations need 'weingarten'");
  } else {
    throw ConfigError("unknown kind '" + kind + "'");
  }

  c.v_max = number(j, "v_max", 2);
  if (!(c.v_max > 0)) throw ConfigError("'v_max' must be positive");
  if (j.contains("weingarten")) {
    const json& w = j["weingarten"];
    if (!w.is_object()) throw ConfigError("'weingarten' must be an object");
    only_keys(w, {"m", "n"}, "'weingarten'");
    try {
      c.weingarten = WeingartenSpec(required_number(w, "m"), number(w, "n", 0));
    } catch (const DomainError& e) {
      throw ConfigError(std::string("'weingarten': ") + e.what());
    }
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_object()) throw ConfigError("'grid' must be an object");
    only_keys(g, {"nu", "nv", "v_range"}, "'grid'");
    c.grid.nu = count(g, "nu", c.grid.nu);
    c.grid.nv = count(g, "nv", c.grid.nv);
    if (g.contains("v_range")) c.grid.v_range = pair(g, "v_range");
  }
  return c;
}

SurfaceConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return parse_config(s.str());
}

ResolvedSurface resolve(const SurfaceConfig& c) {
  std::optional<ResolvedSurface> out;
  switch (c.kind) {
    case SurfaceKind::Catalog: {
      ParamMap params = c.params;
      if (!params.count("v_max")) params["v_max"] = c.v_max;
      CatalogSurface s = catalog(c.name, params);
      out = ResolvedSurface{s.patch, c.weingarten.value_or(s.relation), std::nullopt, s.profile};
      break;
    }
    case SurfaceKind::Rotational: {
      std::optional<ProfileCurve> profile;
      switch (c.axis) {
        case AxisKind::Timelike:
          profile = integrate_timelike_profile(c.profile, c.u_range, c.tol);
          break;
        case AxisKind::Spacelike:
          profile = integrate_spacelike_profile(c.profile, c.u_range, c.tol);
          break;
        case AxisKind::Lightlike:
          profile = lightlike_profile(c.profile.m, c.profile.c, c.profile.lambda, c.u_range);
          break;
      }
      out = ResolvedSurface{build_rotational_patch(c.axis, *profile, c.v_max),
                            c.weingarten.value_or(WeingartenSpec(c.profile.m, 0)), std::nullopt, profile};
      break;
    }
    case SurfaceKind::Foliated:
      out = ResolvedSurface{build_foliated_patch(c.family, c.v_max), *c.weingarten, c.family, std::nullopt};
      break;
  }
  if (c.grid.v_range) {
    out->patch.domain.v_min = (*c.grid.v_range)[0];
    out->patch.domain.v_max = (*c.grid.v_range)[1];
  }
  return *out;
}

}  // namespace lwsurf
