#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lwsurf/surface.hpp"

namespace lwsurf {

struct VertexCurvature {
  double H, K, kappa1, kappa2;
};

/// nu x nv samples in row-major order (index i * nv + j, i along u).
struct MeshGrid {
  std::size_t nu = 0, nv = 0;
  std::vector<MVec3> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<std::optional<VertexCurvature>> curvature;  // empty where Q <= 0

  std::size_t flagged_count() const;
};

/// Uniform grid over patch.domain including both ends. Requires nu, nv >= 2.
MeshGrid sample_mesh(const SurfacePatch& patch, std::size_t nu, std::size_t nv);

/// Wavefront OBJ text: `v x1 x2 x3` then 1-based `f i j k`. Throws IoError.
void export_obj(const MeshGrid& mesh, const std::string& path);
std::string obj_text(const MeshGrid& mesh);

}  // namespace lwsurf
