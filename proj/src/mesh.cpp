#include "lwsurf/mesh.hpp"

#include <fstream>

#include "lwsurf/errors.hpp"
#include "lwsurf/expr.hpp"

namespace lwsurf {

std::size_t MeshGrid::flagged_count() const {
  std::size_t n = 0;
  for (const auto& c : curvature) n += !c.has_value();
  return n;
}

MeshGrid sample_mesh(const SurfacePatch& patch, std::size_t nu, std::size_t nv) {
  if (nu < 2 || nv < 2) throw DomainError("mesh grids need at least 2 x 2 samples");
  const ParamDomain& d = patch.domain;
  MeshGrid mesh;
  mesh.nu = nu;
  mesh.nv = nv;
  mesh.vertices.reserve(nu * nv);
  mesh.curvature.reserve(nu * nv);
  const auto at = [](double lo, double hi, std::size_t i, std::size_t n) {
    return i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  for (std::size_t i = 0; i < nu; ++i) {
    const double u = at(d.u_min, d.u_max, i, nu);
    for (std::size_t j = 0; j < nv; ++j) {
      const double v = at(d.v_min, d.v_max, j, nv);
      const SurfaceJet jet = patch.jet(u, v);
      mesh.vertices.push_back(jet.X);
      try {
        const CurvatureData cd = curvature_data(jet);
        mesh.curvature.push_back(VertexCurvature{cd.H, cd.K, cd.kappa1, cd.kappa2});
      } catch (const NotSpacelike&) {
        mesh.curvature.push_back(std::nullopt);
      } catch (const DomainError&) {
        mesh.curvature.push_back(std::nullopt);
      }
    }
  }
  mesh.triangles.reserve(2 * (nu - 1) * (nv - 1));
  for (std::size_t i = 0; i + 1 < nu; ++i) {
    for (std::size_t j = 0; j + 1 < nv; ++j) {
      const std::size_t a = i * nv + j, b = (i + 1) * nv + j, c = (i + 1) * nv + j + 1, e = i * nv + j + 1;
      mesh.triangles.push_back({a, b, c});
      mesh.triangles.push_back({a, c, e});
    }
  }
  return mesh;
}

std::string obj_text(const MeshGrid& mesh) {
  std::string out;
  for (const auto& p : mesh.vertices)
    out += "v " + format_real(p.x1) + ' ' + format_real(p.x2) + ' ' + format_real(p.x3) + '\n';
  for (const auto& t : mesh.triangles)
    out += "f " + std::to_string(t[0] + 1) + ' ' + std::to_string(t[1] + 1) + ' ' + std::to_string(t[2] + 1) + '\n';
  return out;
}

void export_obj(const MeshGrid& mesh, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << obj_text(mesh);
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace lwsurf
