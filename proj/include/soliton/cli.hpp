#ifndef SOLITON_CLI_HPP
#define SOLITON_CLI_HPP

// Command orchestration behind the `soliton` executable. One command per
// run; reports are JSON, geometry is OBJ (meshes) or CSV (profiles).
//
// Exit status: 0 success, 2 invalid configuration, 3 error raised by a
// numerical module, 4 I/O failure. On failure a JSON object
// {"error": <kind>, "param": <name, when known>, "message": <text>} is written
// to the error stream.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "soliton/comparison.hpp"
#include "soliton/errors.hpp"
#include "soliton/families.hpp"
#include "soliton/fixtures.hpp"
#include "soliton/height_bound.hpp"
#include "soliton/io.hpp"
#include "soliton/verify.hpp"

namespace soliton::cli {

using json = nlohmann::json;

struct RunConfig {
  std::string command;
  /// Flag name without leading dashes -> raw value.
  std::map<std::string, std::string> parameters;
  std::string output_path;
  std::uint64_t seed = 0;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_config = 2;
inline constexpr int exit_domain = 3;
inline constexpr int exit_io = 4;

/// Invalid or missing command-line parameter.
class ConfigError : public Error {
public:
  ConfigError(std::string param, const std::string& what) : Error("invalid_config", what), param_(std::move(param)) {}
  const std::string& param() const noexcept { return param_; }

private:
  std::string param_;
};

namespace detail {

class Params {
public:
  explicit Params(const RunConfig& cfg) : cfg_(cfg) {}

  bool has(const std::string& key) const { return cfg_.parameters.count(key) != 0; }

  std::string str(const std::string& key) const {
    const auto it = cfg_.parameters.find(key);
    if (it == cfg_.parameters.end()) throw ConfigError(key, "missing required parameter --" + key);
    return it->second;
  }

  std::string str(const std::string& key, const std::string& fallback) const {
    return has(key) ? str(key) : fallback;
  }

  double real(const std::string& key) const { return parse_real(key, str(key)); }
  double real(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }

  std::size_t count(const std::string& key, std::size_t fallback) const {
    if (!has(key)) return fallback;
    const std::string s = str(key);
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(s, &pos);
      if (pos != s.size() || v < 0) throw std::invalid_argument(s);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ConfigError(key, "--" + key + " expects a non-negative integer, got '" + s + "'");
    }
  }

  Point3 vec(const std::string& key, const Point3& fallback) const {
    if (!has(key)) return fallback;
    const std::string s = str(key);
    std::stringstream ss(s);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c) )
      throw ConfigError(key, "--" + key + " expects x,y,z");
    return {parse_real(key, a), parse_real(key, b), parse_real(key, c)};
  }

  std::pair<double, double> interval(const std::string& key, std::pair<double, double> fallback) const {
    if (!has(key)) return fallback;
    const std::string s = str(key);
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ConfigError(key, "--" + key + " expects lo,hi");
    return {parse_real(key, s.substr(0, comma)), parse_real(key, s.substr(comma + 1))};
  }

private:
  static double parse_real(const std::string& key, const std::string& s) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError(key, "--" + key + " expects a number, got '" + s + "'");
    }
  }

  const RunConfig& cfg_;
};

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline json pairs_json(const std::vector<std::pair<double, double>>& v) {
  json a = json::array();
  for (const auto& [x, y] : v) a.push_back({x, y});
  return a;
}

inline json point_json(const Point3& p) { return json::array({p.x, p.y, p.z}); }

inline void emit_json(const RunConfig& cfg, const json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  write_file(cfg.output_path, [&](std::ostream& os) { os << text; });
}

inline void require_output(const RunConfig& cfg) {
  if (cfg.output_path.empty()) throw ConfigError("out", "missing required parameter --out");
}

inline void emit_mesh(const RunConfig& cfg, const SurfaceMesh& m) {
  require_output(cfg);
  write_file(cfg.output_path, [&](std::ostream& os) { write_mesh(os, m); });
}

inline void emit_profiles(const RunConfig& cfg, const std::vector<ProfileCurve>& p) {
  require_output(cfg);
  write_file(cfg.output_path, [&](std::ostream& os) { write_profiles(os, p); });
}

inline void run_gen(const RunConfig& cfg, const Params& p) {
  const std::string family = p.str("family");
  require_output(cfg);
  const bool csv = ends_with(cfg.output_path, ".csv");
  if (family == "plane" || family == "grim" || family == "tilted") {
    if (csv) throw ConfigError("out", "family '" + family + "' produces a mesh; use an .obj path");
  }
  if (family == "plane") {
    const double h = p.real("h", 0.05);
    if (!(h > 0.0 && h <= 1.0)) throw DomainError("h", "h must lie in (0, 1]");
    emit_mesh(cfg, vertical_plane_mesh(1.0, static_cast<std::size_t>(std::llround(2.0 / h)) + 1));
  } else if (family == "grim") {
    const double h = p.real("h", 0.01);
    if (!(h > 0.0 && h <= 0.5)) throw DomainError("h", "h must lie in (0, 0.5]");
    emit_mesh(cfg, graph_mesh(grim_reaper_field(1.5, 0.0, 1.0, h)));
  } else if (family == "tilted") {
    const double lambda = p.real("lambda");
    const double h = p.real("h", 0.02);
    if (!(h > 0.0 && h <= 0.5)) throw DomainError("h", "h must lie in (0, 0.5]");
    const auto params = TiltParams::from_lambda(lambda, p.real("d", 0.5 * pi * lambda));
    const auto n = static_cast<std::size_t>(std::llround(3.0 / h)) + 1;
    emit_mesh(cfg, tilted_grim_reaper_mesh(params, 1.5, -1.0, 1.0, n, static_cast<std::size_t>(std::llround(2.0 / h)) + 1));
  } else if (family == "bowl") {
    const auto profile = bowl_profile(p.real("rmax", 2.0), p.real("h", 0.01));
    if (csv) return emit_profiles(cfg, {profile});
    auto mesh = revolve(profile, p.count("ntheta", 64));
    if (p.has("bump")) {
      const double amp = p.real("bump");
      if (!std::isfinite(amp)) throw DomainError("bump", "bump amplitude must be finite");
      mesh = add_seeded_bump(mesh, {amp, p.vec("plane-normal", {1.0, 0.0, 0.0}), cfg.seed});
    }
    emit_mesh(cfg, mesh);
  } else if (family == "wing") {
    const auto wing = wing_profile(p.real("R", 1.0), p.real("rmax", 3.0), p.real("h", 0.01));
    if (csv) return emit_profiles(cfg, {wing.upper, wing.lower});
    emit_mesh(cfg, revolve(wing, p.count("ntheta", 64)));
  } else {
    throw ConfigError("family", "unknown family '" + family + "'");
  }
}

inline json bound_json(const HeightBoundReport& r) {
  json j;
  j["d"] = r.d;
  j["regime"] = to_string(r.regime);
  j["bound"] = r.bound;
  if (r.regime == Regime::wide) j["s_star"] = r.s_star;
  j["c_samples"] = pairs_json(r.c_samples);
  return j;
}

inline json intersect_json(const TiltParams& tp, std::size_t n) {
  const auto ext = gamma_height_extrema(tp);
  json j;
  j["d"] = tp.d();
  j["lambda"] = tp.lambda();
  j["s"] = tp.s();
  j["alpha"] = tp.alpha();
  j["min_z"] = ext.min_z;
  j["max_z"] = ext.max_z;
  j["span"] = ext.span();
  j["c_of_s"] = c_of_s(tp.s(), tp.d());
  json plus = json::array(), minus = json::array();
  for (const auto& g : sample_gamma(tp, n))
    (g.sign == GammaSign::plus ? plus : minus).push_back({g.x, g.position.x, g.position.y, g.position.z});
  j["gamma_plus"] = std::move(plus);
  j["gamma_minus"] = std::move(minus);
  return j;
}

inline json residual_json(const std::string& kind, const ResidualReport& r) {
  return {{"kind", kind}, {"h", r.h}, {"max_residual", r.max_residual}, {"l2_residual", r.l2_residual},
          {"n_interior", r.n_interior}};
}

/// Recovers the grid field of a mesh written by graph_mesh.
inline GridField field_from_graph_mesh(const SurfaceMesh& m) {
  if (m.periodic_v() || m.nu() < 2 || m.nv() < 2)
    throw DomainError("in", "mesh is not a graph over a rectangular grid");
  GridField f;
  f.nx = m.nu();
  f.ny = m.nv();
  f.x0 = m.vertex(0, 0).x;
  f.y0 = m.vertex(0, 0).y;
  f.hx = (m.vertex(f.nx - 1, 0).x - f.x0) / static_cast<double>(f.nx - 1);
  f.hy = (m.vertex(0, f.ny - 1).y - f.y0) / static_cast<double>(f.ny - 1);
  const double tol = 1e-9 * std::max(std::abs(f.hx), std::abs(f.hy));
  f.values.resize(f.nx * f.ny);
  for (std::size_t i = 0; i < f.nx; ++i)
    for (std::size_t j = 0; j < f.ny; ++j) {
      const Point3& v = m.vertex(i, j);
      if (std::abs(v.x - f.x(i)) > tol || std::abs(v.y - f.y(j)) > tol)
        throw DomainError("in", "mesh vertices are not on a uniform rectangular grid");
      f(i, j) = v.z;
    }
  if (!(f.hx > 0.0 && f.hy > 0.0)) throw DomainError("in", "grid spacing must be positive");
  return f;
}

inline AsymptoticModel model_by_name(const std::string& name) {
  if (name == "linear") return linear_log_model();
  if (name == "quadratic") return quarter_square_log_model();
  throw ConfigError("model", "unknown asymptotic model '" + name + "' (expected linear|quadratic)");
}

inline json run_verify(const Params& p) {
  const std::string kind = p.str("kind");
  const std::string in = p.str("in");
  if (kind == "pde" || kind == "identity") {
    const auto field = field_from_graph_mesh(read_mesh_file(in));
    return residual_json(kind, kind == "pde" ? graph_translator_residual(field) : height_identity_residual(field));
  }
  if (kind == "meanCurvature") return residual_json(kind, mesh_translator_residual(read_mesh_file(in)));
  if (kind == "asymptotic") {
    const auto profiles = read_profile_file(in);
    if (profiles.empty()) throw DomainError("in", "profile file has no samples");
    const auto model = model_by_name(p.str("model", "quadratic"));
    const auto rep = asymptotic_defect(profiles.front(), model);
    std::vector<double> defects;
    for (const auto& s : rep.samples) defects.push_back(s.second);
    auto summary = summarize_residuals(defects, radial_equation_residual(profiles.front()).h);
    json j = residual_json(kind, summary);
    const auto growth = scaled_defect_growth(rep, asymptotic_min_reach, 100.0);
    j["model"] = rep.model;
    j["scaled_defect_exponent"] = growth.exponent;
    j["scaled_defect_bounded"] = growth.bounded();
    j["samples"] = pairs_json(rep.samples);
    return j;
  }
  throw ConfigError("kind", "unknown verify kind '" + kind + "'");
}

inline json sweep_json(const SweepReport& r) {
  return {{"t0", r.t0},           {"n_steps", r.n_steps},     {"t_samples", r.t_samples},
          {"defects", r.defects}, {"symmetric", r.symmetric}, {"tolerance", r.tolerance}};
}

inline json touch_json(const ContactResult& r) {
  return {{"parameter", r.parameter},
          {"witness", point_json(r.witness)},
          {"gap", r.gap},
          {"clearance_curve", pairs_json(r.clearance_curve)},
          {"tolerance", r.tolerance}};
}

inline void dispatch(const RunConfig& cfg, std::ostream& out) {
  const Params p(cfg);
  if (cfg.command == "gen") return run_gen(cfg, p);
  if (cfg.command == "bound") return emit_json(cfg, bound_json(height_bound(p.real("d"))), out);
  if (cfg.command == "intersect") {
    const double d = p.real("d");
    const auto tp = TiltParams::from_lambda(p.real("lambda"), d);
    return emit_json(cfg, intersect_json(tp, std::max<std::size_t>(2, p.count("steps", 101))), out);
  }
  if (cfg.command == "verify") return emit_json(cfg, run_verify(p), out);
  if (cfg.command == "sweep") {
    const auto mesh = read_mesh_file(p.str("in"));
    const auto rep = alexandrov_sweep(mesh, p.vec("plane-normal", {1.0, 0.0, 0.0}),
                                      p.count("steps", default_sweep_steps), p.real("tol", default_symmetry_tolerance));
    return emit_json(cfg, sweep_json(rep), out);
  }
  if (cfg.command == "touch") {
    const auto obstacle = read_mesh_file(p.str("in"));
    const auto slider = read_mesh_file(p.str("slider"));
    const auto [lo, hi] = p.interval("range", {0.0, 10.0});
    if (lo != 0.0) throw ConfigError("range", "slide range must start at 0");
    const double tol = p.real("tol", default_contact_tolerance(obstacle, slider));
    const auto res = first_touch_slide(obstacle, slider, p.vec("direction", {0.0, 0.0, -1.0}), hi, tol,
                                       std::max<std::size_t>(2, p.count("steps", 64)));
    return emit_json(cfg, touch_json(res), out);
  }
  throw ConfigError("command", "unknown command '" + cfg.command + "'");
}

inline void report_error(std::ostream& err, const std::string& kind, const std::string& param,
                         const std::string& message) {
  json j;
  j["error"] = kind;
  if (!param.empty()) j["param"] = param;
  j["message"] = message;
  err << j.dump() << "\n";
}

}  // namespace detail

/// Executes one command. Report output goes to `out` when no output path is set.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    detail::dispatch(cfg, out);
    return exit_ok;
  } catch (const ConfigError& e) {
    detail::report_error(err, e.kind(), e.param(), e.what());
    return exit_invalid_config;
  } catch (const IoError& e) {
    detail::report_error(err, e.kind(), "", e.what());
    return exit_io;
  } catch (const DomainError& e) {
    detail::report_error(err, e.kind(), e.param(), e.what());
    return exit_domain;
  } catch (const Error& e) {
    detail::report_error(err, e.kind(), "", e.what());
    return exit_domain;
  }
}

}  // namespace soliton::cli

#endif  // SOLITON_CLI_HPP
