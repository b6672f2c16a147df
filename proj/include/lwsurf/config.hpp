#pragma once

// JSON surface descriptions shared by the command-line tool.
//
//   {"kind": "catalog", "name": "timelike_m2", "params": {"c": 1}}
//   {"kind": "rotational", "axis": "spacelike", "m": -2, "c": 1, "sign": -1,
//    "u0": 1, "z0": 1, "lambda": 0, "u_range": [1, 3], "tol": 1e-10}
//   {"kind": "foliated", "case": "spacelike", "theta": "0.3*u^2", "r": "2",
//    "base": [0, 0], "u0": 1, "u_range": [0.5, 2]}
//   {"kind": "foliated", "case": "lightlike", "a": "u^2", "b": "u"}
//
// Optional for every kind: "weingarten": {"m": .., "n": ..} (required for
// foliated), "grid": {"nu": .., "nv": .., "v_range": [lo, hi]}, "v_max".

#include <array>
#include <optional>
#include <string>

#include "lwsurf/catalog.hpp"
#include "lwsurf/foliated.hpp"
#include "lwsurf/rotational.hpp"

namespace lwsurf {

enum class SurfaceKind { Catalog, Rotational, Foliated };

struct GridSpec {
  std::size_t nu = 20, nv = 20;
  std::optional<std::array<double, 2>> v_range;
};

struct SurfaceConfig {
  SurfaceKind kind = SurfaceKind::Catalog;
  // catalog
  std::string name;
  ParamMap params;
  // rotational
  AxisKind axis = AxisKind::Timelike;
  ProfileSpec profile;
  Interval u_range{1, 3};
  double tol = 1e-10;
  // foliated
  FoliationFamily family;

  double v_max = 2;
  std::optional<WeingartenSpec> weingarten;
  GridSpec grid;
};

/// Validates the schema; unknown keys and wrong types raise ConfigError.
SurfaceConfig parse_config(const std::string& json_text);
/// Reads and parses a file. Throws IoError or ConfigError.
SurfaceConfig load_config(const std::string& path);

struct ResolvedSurface {
  SurfacePatch patch;
  WeingartenSpec spec;
  std::optional<FoliationFamily> family;
  std::optional<ProfileCurve> profile;
};

/// Builds the surface. The relation defaults to the catalog entry's or the
/// profile's (m, 0).
ResolvedSurface resolve(const SurfaceConfig& config);

}  // namespace lwsurf
