#pragma once

// Closed-form rotational linear Weingarten surfaces (n = 0).

#include <map>
#include <string>
#include <vector>

#include "lwsurf/expr.hpp"
#include "lwsurf/rotational.hpp"
#include "lwsurf/surface.hpp"

namespace lwsurf {

using ParamMap = std::map<std::string, double>;

struct CatalogInfo {
  std::string name;
  AxisKind axis;
  double m;  // NaN when supplied by the caller
  std::vector<std::string> params;
};

/// All entries in a fixed order.
const std::vector<CatalogInfo>& catalog_entries();

struct CatalogSurface {
  std::string name;
  AxisKind axis;
  WeingartenSpec relation;
  Expr profile_expr;  // z(u)
  ProfileCurve profile;
  SurfacePatch patch;
};

/// Builds an entry. Every entry also accepts u_min, u_max and v_max.
/// Throws UnknownName for unknown entries or parameters, MissingParam when a
/// required parameter is absent, DomainError for out-of-range values.
CatalogSurface catalog(const std::string& name, const ParamMap& params = {});

}  // namespace lwsurf
