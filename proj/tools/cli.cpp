#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "lwsurf/catalog.hpp"
#include "lwsurf/config.hpp"
#include "lwsurf/errors.hpp"
#include "lwsurf/foliated.hpp"
#include "lwsurf/mesh.hpp"
#include "lwsurf/rotational.hpp"

namespace lwsurf {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<double> split_reals(const std::string& s, char sep, std::size_t expected, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size() || !std::isfinite(x)) throw UsageError("malformed " + what + " '" + s + "'");
    out.push_back(x);
  }
  if (expected && out.size() != expected) throw UsageError("malformed " + what + " '" + s + "'");
  return out;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& s) {
  const auto x = s.find('x');
  std::size_t a = 0, b = 0;
  try {
    std::size_t ua = 0, ub = 0;
    a = std::stoul(s.substr(0, x), &ua);
    b = x == std::string::npos ? 0 : std::stoul(s.substr(x + 1), &ub);
    if (ua != x || ub != s.size() - x - 1) a = 0;
  } catch (const std::exception&) {
    a = 0;
  }
  if (a < 2 || b < 2) throw UsageError("grid must look like NUxNV with NU, NV >= 2 (got '" + s + "')");
  return {a, b};
}

double grid_at(double lo, double hi, std::size_t i, std::size_t n) {
  return i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

int cmd_catalog(std::ostream& out) {
  for (const auto& e : catalog_entries())
    out << e.name << " m=" << (std::isnan(e.m) ? std::string("<m>") : format_real(e.m)) << " n=0\n";
  return kOk;
}

int cmd_curvature(const std::string& config, const std::string& at, std::ostream& out) {
  const auto uv = split_reals(at, ',', 2, "point");
  const ResolvedSurface s = resolve(load_config(config));
  const CurvatureData cd = curvature_data(s.patch, uv[0], uv[1]);
  nlohmann::ordered_json j;
  j["u"] = uv[0];
  j["v"] = uv[1];
  j["Q"] = cd.Q;
  j["H1"] = cd.H1;
  j["K1"] = cd.K1;
  j["H"] = cd.H;
  j["K"] = cd.K;
  j["kappa1"] = cd.kappa1;
  j["kappa2"] = cd.kappa2;
  j["umbilic"] = is_umbilic(cd, 1e-10);
  j["weingarten_residual"] = weingarten_residual(cd, s.spec);
  j["eq5_residual"] = eq5_residual(cd, s.spec);
  out << j.dump(2) << '\n';
  return kOk;
}

struct ProfileArgs {
  std::string axis, range, out;
  double m = 1, c = 1, u0 = 1, z0 = 0, lambda = 0, tol = 1e-10;
  int sign = 1;
  bool z0_given = false;
};

int cmd_profile(const ProfileArgs& a, std::ostream& stdout_stream) {
  AxisKind axis;
  try {
    axis = parse_axis_kind(a.axis);
  } catch (const UnknownName& e) {
    throw UsageError(e.what());
  }
  if (a.sign != 1 && a.sign != -1) throw UsageError("--sign must be 1 or -1");
  const auto r = split_reals(a.range, ',', 2, "range");
  const Interval range{r[0], r[1]};
  ProfileSpec spec{a.m, a.c, a.sign, a.u0, a.z0, a.lambda};
  if (!a.z0_given && axis == AxisKind::Spacelike) spec.z0 = 1;
  std::optional<ProfileCurve> p;
  switch (axis) {
    case AxisKind::Timelike:
      p = integrate_timelike_profile(spec, range, a.tol);
      break;
    case AxisKind::Spacelike:
      p = integrate_spacelike_profile(spec, range, a.tol);
      break;
    case AxisKind::Lightlike:
      p = lightlike_profile(a.m, a.c, a.lambda, range);
      break;
  }
  std::ofstream file;
  std::ostream& out = open_output(a.out, file, stdout_stream);
  write_profile_csv(*p, out);
  return kOk;
}

int cmd_verify(const std::string& config, const std::string& grid, double tol, std::ostream& out) {
  const SurfaceConfig cfg = load_config(config);
  std::size_t nu = cfg.grid.nu, nv = cfg.grid.nv;
  if (!grid.empty()) std::tie(nu, nv) = parse_grid(grid);
  if (!(tol >= 0)) throw UsageError("--tol must be non-negative");
  const ResolvedSurface s = resolve(cfg);
  const ParamDomain& d = s.patch.domain;

  double max_eq5 = 0, max_weingarten = 0, max_abs_h = 0;
  std::size_t not_spacelike = 0, failures = 0;
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      const double u = grid_at(d.u_min, d.u_max, i, nu), v = grid_at(d.v_min, d.v_max, j, nv);
      try {
        const CurvatureData cd = curvature_data(s.patch, u, v);
        const double e = eq5_residual(cd, s.spec);
        max_eq5 = std::max(max_eq5, e);
        max_weingarten = std::max(max_weingarten, weingarten_residual(cd, s.spec));
        max_abs_h = std::max(max_abs_h, std::abs(cd.H));
        failures += !(e <= tol);
      } catch (const NotSpacelike&) {
        ++not_spacelike;
      }
    }
  }
  const bool pass = failures == 0 && not_spacelike == 0;
  nlohmann::ordered_json j;
  j["surface"] = s.patch.label;
  j["m"] = s.spec.m();
  j["n"] = s.spec.n();
  j["grid"] = {nu, nv};
  j["tol"] = tol;
  j["max_eq5_residual"] = max_eq5;
  j["max_weingarten_residual"] = max_weingarten;
  j["max_abs_H"] = max_abs_h;
  j["points_above_tol"] = failures;
  j["non_spacelike_points"] = not_spacelike;
  j["pass"] = pass;
  out << j.dump(2) << '\n';
  return pass ? kOk : kFailed;
}

int cmd_coeffs(const std::string& config, const std::string& us, std::ostream& out) {
  const SurfaceConfig cfg = load_config(config);
  if (cfg.kind != SurfaceKind::Foliated) throw UsageError("coeffs needs a foliated configuration");
  const auto values = split_reals(us, ',', 0, "u list");
  if (values.empty()) throw UsageError("--u needs at least one value");
  write_coefficient_csv(cfg.family, *cfg.weingarten, values, out);
  return kOk;
}

int cmd_mesh(const std::string& config, const std::string& grid, const std::string& path, std::ostream& out) {
  const SurfaceConfig cfg = load_config(config);
  std::size_t nu = cfg.grid.nu, nv = cfg.grid.nv;
  if (!grid.empty()) std::tie(nu, nv) = parse_grid(grid);
  const ResolvedSurface s = resolve(cfg);
  const MeshGrid mesh = sample_mesh(s.patch, nu, nv);
  export_obj(mesh, path);
  out << "wrote " << mesh.vertices.size() << " vertices, " << mesh.triangles.size() << " triangles, "
      << mesh.flagged_count() << " non-spacelike vertices to " << path << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature and linear Weingarten tools for spacelike surfaces in Minkowski 3-space", "lwsurf"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "List closed-form catalog entries and their relation");

  std::string config, at, grid, out_path, us;
  double tol = 1e-6;

  auto* curvature_cmd = app.add_subcommand("curvature", "Print curvature data at one point as JSON");
  curvature_cmd->add_option("--config", config, "Surface configuration (JSON)")->required();
  curvature_cmd->add_option("--at", at, "Parameter point u,v")->required();

  ProfileArgs pa;
  auto* profile_cmd = app.add_subcommand("profile", "Integrate a rotational profile and write CSV");
  profile_cmd->add_option("--axis", pa.axis, "timelike, spacelike or lightlike")->required();
  profile_cmd->add_option("--m", pa.m, "Ratio m in k1 = m k2")->required();
  profile_cmd->add_option("--c", pa.c, "First-integral constant c > 0");
  profile_cmd->add_option("--sign", pa.sign, "Slope branch, 1 or -1");
  profile_cmd->add_option("--u0", pa.u0, "Initial parameter");
  auto* z0_opt = profile_cmd->add_option("--z0", pa.z0, "Initial height");
  profile_cmd->add_option("--lambda", pa.lambda, "Translation along the axis");
  profile_cmd->add_option("--range", pa.range, "Parameter range a,b")->required();
  profile_cmd->add_option("--tol", pa.tol, "Integration tolerance");
  profile_cmd->add_option("--out", pa.out, "Output CSV (default standard output)");

  auto* verify_cmd = app.add_subcommand("verify", "Check the Weingarten relation on a grid");
  verify_cmd->add_option("--config", config, "Surface configuration (JSON)")->required();
  verify_cmd->add_option("--grid", grid, "Grid NUxNV (default from the configuration)");
  verify_cmd->add_option("--tol", tol, "Residual tolerance");

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Extract expansion coefficients of a foliated surface");
  coeffs_cmd->add_option("--config", config, "Foliated surface configuration (JSON)")->required();
  coeffs_cmd->add_option("--u", us, "Comma-separated u values")->required();

  auto* mesh_cmd = app.add_subcommand("mesh", "Export a Wavefront OBJ mesh");
  mesh_cmd->add_option("--config", config, "Surface configuration (JSON)")->required();
  mesh_cmd->add_option("--grid", grid, "Grid NUxNV (default from the configuration)");
  mesh_cmd->add_option("--out", out_path, "Output OBJ path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lwsurf: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(out);
    if (curvature_cmd->parsed()) return cmd_curvature(config, at, out);
    if (profile_cmd->parsed()) {
      pa.z0_given = z0_opt->count() > 0;
      return cmd_profile(pa, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(config, grid, tol, out);
    if (coeffs_cmd->parsed()) return cmd_coeffs(config, us, out);
    if (mesh_cmd->parsed()) return cmd_mesh(config, grid, out_path, out);
  } catch (const UsageError& e) {
    err << "lwsurf: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "lwsurf: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownName& e) {
    err << "lwsurf: " << e.what() << '\n';
    return kUsage;
  } catch (const MissingParam& e) {
    err << "lwsurf: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "lwsurf: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "lwsurf: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace lwsurf
