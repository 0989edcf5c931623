#ifndef SOLITON_VERIFY_HPP
#define SOLITON_VERIFY_HPP

// Residuals of the translator equation H = <nu, v> (H the trace of the second
// fundamental form, nu the upward normal, v = e_z) and of the height identity
// Delta_M u + |grad_M u|^2 = 1 on sampled surfaces. All derivatives use
// centered second-order differences; boundary samples are never reported.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "soliton/errors.hpp"
#include "soliton/geometry.hpp"
#include "soliton/mesh.hpp"

namespace soliton {

struct ResidualReport {
  double h = 0.0;
  double max_residual = 0.0;
  /// Root mean square over the interior samples.
  double l2_residual = 0.0;
  std::size_t n_interior = 0;
};

/// Reduces pointwise residuals (NaN entries are skipped) to a report.
inline ResidualReport summarize_residuals(const std::vector<double>& r, double h) {
  ResidualReport rep;
  rep.h = h;
  double sum_sq = 0.0;
  for (const double v : r) {
    if (std::isnan(v)) continue;
    rep.max_residual = std::max(rep.max_residual, std::abs(v));
    sum_sq += v * v;
    ++rep.n_interior;
  }
  rep.l2_residual = rep.n_interior ? std::sqrt(sum_sq / static_cast<double>(rep.n_interior)) : 0.0;
  return rep;
}

namespace detail {

inline void require_grid(const GridField& u) {
  if (u.nx < 3 || u.ny < 3) throw GridTooSmallError("residuals need at least a 3x3 grid");
  if (u.values.size() != u.nx * u.ny) throw DomainError("u", "grid field has inconsistent dimensions");
  for (const double v : u.values)
    if (!std::isfinite(v)) throw DomainError("u", "grid field value is not finite");
}

}  // namespace detail

/// Pointwise div(grad u / W) - 1/W, W = sqrt(1 + |grad u|^2), at interior nodes
/// (NaN on the grid boundary).
inline std::vector<double> graph_translator_residual_field(const GridField& u) {
  detail::require_grid(u);
  std::vector<double> r(u.values.size(), std::numeric_limits<double>::quiet_NaN());
  const double hx = u.hx, hy = u.hy;
  for (std::size_t i = 1; i + 1 < u.nx; ++i)
    for (std::size_t j = 1; j + 1 < u.ny; ++j) {
      const double ux = (u(i + 1, j) - u(i - 1, j)) / (2.0 * hx);
      const double uy = (u(i, j + 1) - u(i, j - 1)) / (2.0 * hy);
      const double uxx = (u(i + 1, j) - 2.0 * u(i, j) + u(i - 1, j)) / (hx * hx);
      const double uyy = (u(i, j + 1) - 2.0 * u(i, j) + u(i, j - 1)) / (hy * hy);
      const double uxy =
          (u(i + 1, j + 1) - u(i + 1, j - 1) - u(i - 1, j + 1) + u(i - 1, j - 1)) / (4.0 * hx * hy);
      const double w2 = 1.0 + ux * ux + uy * uy;
      const double w = std::sqrt(w2);
      const double div = ((1.0 + uy * uy) * uxx - 2.0 * ux * uy * uxy + (1.0 + ux * ux) * uyy) / (w2 * w);
      r[i * u.ny + j] = div - 1.0 / w;
    }
  return r;
}

inline ResidualReport graph_translator_residual(const GridField& u) {
  return summarize_residuals(graph_translator_residual_field(u), std::max(u.hx, u.hy));
}

/// Pointwise Delta_M u + |grad_M u|^2 - 1 for the height function of the graph
/// of u. With metric g = I + grad u grad u^T, sqrt(det g) = W and
/// sqrt(det g) g^{-1} grad u = grad u / W, so
///   Delta_M u = (1/W) div(grad u / W),   |grad_M u|^2 = |grad u|^2 / W^2.
/// The flux grad u / W is evaluated at cell-edge midpoints.
inline std::vector<double> height_identity_residual_field(const GridField& u) {
  detail::require_grid(u);
  std::vector<double> r(u.values.size(), std::numeric_limits<double>::quiet_NaN());
  const double hx = u.hx, hy = u.hy;

  // Flux normal component across the edge between (i, j) and (i + 1, j).
  auto flux_x = [&](std::size_t i, std::size_t j) {
    const double ux = (u(i + 1, j) - u(i, j)) / hx;
    const double uy = (u(i, j + 1) - u(i, j - 1) + u(i + 1, j + 1) - u(i + 1, j - 1)) / (4.0 * hy);
    return ux / std::sqrt(1.0 + ux * ux + uy * uy);
  };
  // ... and between (i, j) and (i, j + 1).
  auto flux_y = [&](std::size_t i, std::size_t j) {
    const double uy = (u(i, j + 1) - u(i, j)) / hy;
    const double ux = (u(i + 1, j) - u(i - 1, j) + u(i + 1, j + 1) - u(i - 1, j + 1)) / (4.0 * hx);
    return uy / std::sqrt(1.0 + ux * ux + uy * uy);
  };

  for (std::size_t i = 1; i + 1 < u.nx; ++i)
    for (std::size_t j = 1; j + 1 < u.ny; ++j) {
      const double ux = (u(i + 1, j) - u(i - 1, j)) / (2.0 * hx);
      const double uy = (u(i, j + 1) - u(i, j - 1)) / (2.0 * hy);
      const double grad2 = ux * ux + uy * uy;
      const double w2 = 1.0 + grad2;
      const double div = (flux_x(i, j) - flux_x(i - 1, j)) / hx + (flux_y(i, j) - flux_y(i, j - 1)) / hy;
      r[i * u.ny + j] = div / std::sqrt(w2) + grad2 / w2 - 1.0;
    }
  return r;
}

inline ResidualReport height_identity_residual(const GridField& u) {
  return summarize_residuals(height_identity_residual_field(u), std::max(u.hx, u.hy));
}

/// Per-vertex curvature estimate on a structured mesh.
struct CurvatureField {
  /// Trace of the second fundamental form, kappa_1 + kappa_2, w.r.t. `normal`.
  /// The average of the principal curvatures is half of it. NaN on boundary vertices.
  std::vector<double> mean_curvature;
  /// Unit normal along X_i x X_j (upward for graph meshes and revolved profiles).
  std::vector<Point3> normal;
  std::vector<bool> interior;
};

/// Curvature from the first and second fundamental forms of the grid
/// parametrization (i, j) -> X(i, j), derivatives by centered differences in
/// index space. Interior vertices need their full 4-neighbourhood.
inline CurvatureField mesh_mean_curvature(const SurfaceMesh& m) {
  CurvatureField out;
  out.mean_curvature.assign(m.size(), std::numeric_limits<double>::quiet_NaN());
  out.normal.assign(m.size(), Point3{});
  out.interior.assign(m.size(), false);
  std::size_t count = 0;
  const std::size_t nv = m.nv();
  for (std::size_t i = 1; i + 1 < m.nu(); ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      if (m.is_boundary(i, j)) continue;
      const std::size_t jp = (j + 1) % nv, jm = (j + nv - 1) % nv;
      const Point3& c = m.vertex(i, j);
      const Point3 xu = (m.vertex(i + 1, j) - m.vertex(i - 1, j)) * 0.5;
      const Point3 xv = (m.vertex(i, jp) - m.vertex(i, jm)) * 0.5;
      const Point3 xuu = m.vertex(i + 1, j) - c * 2.0 + m.vertex(i - 1, j);
      const Point3 xvv = m.vertex(i, jp) - c * 2.0 + m.vertex(i, jm);
      const Point3 xuv = (m.vertex(i + 1, jp) - m.vertex(i + 1, jm) - m.vertex(i - 1, jp) +
                          m.vertex(i - 1, jm)) *
                         0.25;
      const Point3 nrm = cross(xu, xv);
      const double area = norm(nrm);
      if (!(area > 0.0)) continue;
      const Point3 nu = nrm * (1.0 / area);
      const double E = dot(xu, xu), F = dot(xu, xv), G = dot(xv, xv);
      const double e = dot(xuu, nu), f = dot(xuv, nu), g = dot(xvv, nu);
      const std::size_t k = m.index(i, j);
      out.mean_curvature[k] = (e * G - 2.0 * f * F + g * E) / (E * G - F * F);
      out.normal[k] = nu;
      out.interior[k] = true;
      ++count;
    }
  if (count == 0) throw GridTooSmallError("mesh has no interior vertices");
  return out;
}

/// Pointwise H - <nu, v> at interior vertices (NaN elsewhere).
inline std::vector<double> mesh_translator_residual_field(const SurfaceMesh& m) {
  const auto c = mesh_mean_curvature(m);
  std::vector<double> r(m.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t k = 0; k < m.size(); ++k)
    if (c.interior[k]) r[k] = c.mean_curvature[k] - c.normal[k].z;
  return r;
}

inline ResidualReport mesh_translator_residual(const SurfaceMesh& m) {
  return summarize_residuals(mesh_translator_residual_field(m), m.resolution());
}

/// Residual of the radial translator equation along a sampled profile,
/// expressed geometrically as (kappa_1 + kappa_2) - cos(phi), phi the tangent
/// angle. Where the samples are uniform in r it uses the graph form
/// (u''/(1+u'^2) + u'/r - 1)/sqrt(1+u'^2); where they are uniform in u it uses
/// the rotated form (r''/(1+r'^2) - 1/r + r')/sqrt(1+r'^2), r = r(u). Samples
/// uniform in neither (chart switches) are skipped.
inline std::vector<double> radial_equation_residual_field(const ProfileCurve& p) {
  std::vector<double> r(p.size(), std::numeric_limits<double>::quiet_NaN());
  auto uniform = [](double a, double b) {
    return a != 0.0 && std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
  };
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const auto &a = p.samples[i - 1], &c = p.samples[i], &b = p.samples[i + 1];
    if (!(c.r > 0.0)) continue;
    const double dr1 = c.r - a.r, dr2 = b.r - c.r;
    const double du1 = c.u - a.u, du2 = b.u - c.u;
    if (uniform(dr1, dr2)) {
      const double h = 0.5 * (dr1 + dr2);
      const double up = (b.u - a.u) / (2.0 * h);
      const double upp = (b.u - 2.0 * c.u + a.u) / (h * h);
      const double w2 = 1.0 + up * up;
      r[i] = (upp / w2 + up / c.r - 1.0) / std::sqrt(w2);
    } else if (uniform(du1, du2)) {
      const double h = 0.5 * (du1 + du2);
      const double q = (b.r - a.r) / (2.0 * h);
      const double qq = (b.r - 2.0 * c.r + a.r) / (h * h);
      const double w2 = 1.0 + q * q;
      r[i] = (qq / w2 - 1.0 / c.r + q) / std::sqrt(w2);
    }
  }
  return r;
}

inline ResidualReport radial_equation_residual(const ProfileCurve& p) {
  double h = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i)
    h = std::max(h, std::hypot(p.samples[i].r - p.samples[i - 1].r, p.samples[i].u - p.samples[i - 1].u));
  return summarize_residuals(radial_equation_residual_field(p), h);
}

// ---------------------------------------------------------------------------
// Asymptotic comparison
// ---------------------------------------------------------------------------

/// Comparison expansion r -> model(r), supplied as data.
struct AsymptoticModel {
  std::string name;
  std::function<double(double)> eval;
};

/// a2 r^2 + a1 r + b log r + c.
inline AsymptoticModel expansion_model(std::string name, double a2, double a1, double b, double c = 0.0) {
  return {std::move(name), [=](double r) { return a2 * r * r + a1 * r + b * std::log(r) + c; }};
}

/// (1/2) r - (1/2) log r.
inline AsymptoticModel linear_log_model() { return expansion_model("r/2 - log(r)/2", 0.0, 0.5, -0.5); }

/// (1/4) r^2 - (1/2) log r.
inline AsymptoticModel quarter_square_log_model() {
  return expansion_model("r^2/4 - log(r)/2", 0.25, 0.0, -0.5);
}

/// The profile itself, interpolated.
inline AsymptoticModel profile_model(ProfileCurve profile) {
  return {"profile", [p = std::move(profile)](double r) { return p.interpolate(r); }};
}

struct AsymptoticDefectReport {
  std::string model;
  std::vector<std::pair<double, double>> samples;  ///< (r, u(r) - model(r)), r increasing
};

inline constexpr double asymptotic_min_reach = 10.0;

/// u(r) - model(r) at every profile sample with r > 0.
inline AsymptoticDefectReport asymptotic_defect(const ProfileCurve& p, const AsymptoticModel& model) {
  if (p.empty() || p.r_max() < asymptotic_min_reach)
    throw PreconditionError("asymptotic defect needs a profile reaching r >= 10");
  AsymptoticDefectReport rep;
  rep.model = model.name;
  for (const auto& s : p.samples) {
    if (!(s.r > 0.0)) continue;
    const double d = s.u - model.eval(s.r);
    if (!std::isfinite(d)) throw DomainError("model", "model is not finite at r = " + std::to_string(s.r));
    rep.samples.emplace_back(s.r, d);
  }
  return rep;
}

/// Growth of r * defect(r) over [r_lo, r_hi]: the least-squares slope of
/// log|r defect| against log r, and the sup of |r defect|.
struct ScaledDefectGrowth {
  double exponent = 0.0;
  double sup = 0.0;
  /// r * defect = O(1) on the window: growth exponent below 1/2.
  bool bounded() const noexcept { return std::isfinite(sup) && exponent < 0.5; }
};

inline ScaledDefectGrowth scaled_defect_growth(const AsymptoticDefectReport& rep, double r_lo, double r_hi) {
  ScaledDefectGrowth g;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& [r, d] : rep.samples) {
    if (r < r_lo || r > r_hi) continue;
    const double v = std::abs(r * d);
    g.sup = std::max(g.sup, v);
    if (!(v > 0.0)) continue;
    const double x = std::log(r), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n >= 2) {
    const double den = static_cast<double>(n) * sxx - sx * sx;
    if (den > 0.0) g.exponent = (static_cast<double>(n) * sxy - sx * sy) / den;
  }
  return g;
}

}  // namespace soliton

#endif  // SOLITON_VERIFY_HPP
