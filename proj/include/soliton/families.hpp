#ifndef SOLITON_FAMILIES_HPP
#define SOLITON_FAMILIES_HPP

// Exact translator examples (grim reaper curve and cylinder, its tilted
// dilation) and the rotationally symmetric families obtained by integrating
// the radial translator equation u''/(1 + u'^2) + u'/r = 1 in R^3.

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "soliton/errors.hpp"
#include "soliton/geometry.hpp"
#include "soliton/mesh.hpp"

namespace soliton {

namespace detail {

inline void require_open_half_pi(double x, const char* param) {
  if (!(std::abs(x) < pi / 2)) throw DomainError(param, std::string(param) + " must lie in (-pi/2, pi/2)");
}

/// One classical fourth-order Runge-Kutta step for y' = f(t, y).
template <typename F>
std::array<double, 2> rk4_step(F&& f, double t, const std::array<double, 2>& y, double h) {
  auto axpy = [](const std::array<double, 2>& a, double s, const std::array<double, 2>& b) {
    return std::array<double, 2>{a[0] + s * b[0], a[1] + s * b[1]};
  };
  const auto k1 = f(t, y);
  const auto k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
  const auto k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
  const auto k4 = f(t + h, axpy(y, h, k3));
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

/// Graph chart: state (u, u') as functions of r.
inline std::array<double, 2> radial_graph_rhs(double r, const std::array<double, 2>& y) {
  const double p = y[1];
  return {p, (1.0 + p * p) * (1.0 - p / r)};
}

/// Rotated chart: state (r, dr/du) as functions of u; regular at a vertical tangent.
inline std::array<double, 2> radial_rotated_rhs(double /*u*/, const std::array<double, 2>& y) {
  const double r = y[0], q = y[1];
  return {q, (1.0 + q * q) * (1.0 / r - q)};
}

/// scale * d/dp[(1 + p^2)(k - p)]. Graph chart: k = r, scale = 1/r.
/// Rotated chart: k = 1/r, scale = 1.
inline double chart_stiffness(double p, double k, double scale) {
  return scale * (2.0 * p * (k - p) - (1.0 + p * p));
}

/// Largest |h * df/dy| for which the RK4 step stays inside its real stability interval.
inline constexpr double rk4_stability_limit = 2.5;

inline void check_state(const std::array<double, 2>& y, double h, double stiffness, const char* where) {
  constexpr double blowup = 1e12;
  if (!std::isfinite(y[0]) || !std::isfinite(y[1]) || std::abs(y[1]) > blowup)
    throw StepSizeError(std::string("integrator blow-up in ") + where + "; reduce h");
  if (std::abs(h * stiffness) > rk4_stability_limit)
    throw StepSizeError(std::string("step exceeds the RK4 stability limit in ") + where + "; reduce h");
}

}  // namespace detail

/// The grim reaper curve t -> (t, -log cos t).
inline Point2 grim_reaper_point(double t) {
  detail::require_open_half_pi(t, "t");
  return {t, -std::log(std::cos(t))};
}

/// Canonical grim reaper cylinder {(x, y, -log cos x)}.
inline Point3 grim_reaper_cylinder_point(double x, double y) {
  detail::require_open_half_pi(x, "x");
  return {x, y, -std::log(std::cos(x))};
}

inline Mat3 rotation_about_x(double alpha) noexcept {
  const double c = std::cos(alpha), s = std::sin(alpha);
  Mat3 r;
  r.m = {{{1.0, 0.0, 0.0}, {0.0, c, -s}, {0.0, s, c}}};
  return r;
}

/// Dilation factor and slab width of a tilted grim reaper cylinder.
/// The tilt angle alpha = arccos(1/lambda) rotates the dilated cylinder's
/// unit velocity (0, a0, 1/lambda) back onto +z.
class TiltParams {
public:
  static TiltParams from_lambda(double lambda, double d) { return TiltParams(lambda, d); }

  /// lambda(s) = (d / pi) s.
  static TiltParams from_s(double s, double d) { return TiltParams(d / pi * s, d); }

  double lambda() const noexcept { return lambda_; }
  double d() const noexcept { return d_; }
  double alpha() const noexcept { return std::acos(1.0 / lambda_); }
  /// a0 = sqrt(1 - 1/lambda^2) = sin(alpha).
  double a0() const noexcept { return std::sqrt(1.0 - 1.0 / (lambda_ * lambda_)); }
  /// sqrt(lambda^2 - 1) = lambda * a0.
  double tilt_slope() const noexcept { return std::sqrt(lambda_ * lambda_ - 1.0); }
  /// s = lambda pi / d.
  double s() const noexcept { return lambda_ * pi / d_; }
  /// Half-width of the parameter interval of the cylinder intersection, (d/2)/lambda.
  double x_limit() const noexcept { return 0.5 * d_ / lambda_; }

private:
  TiltParams(double lambda, double d) : lambda_(lambda), d_(d) {
    if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("d", "slab width d must be positive");
    if (!(lambda > 1.0) || !std::isfinite(lambda))
      throw DomainError("lambda", "dilation factor must exceed 1");
    if (!(lambda * pi > d)) throw DomainError("lambda", "dilated slab lambda*pi must exceed d");
  }

  double lambda_;
  double d_;
};

/// R_x(alpha)(lambda G) at pre-dilation parameters (x, y):
/// (lambda x, y + sqrt(lambda^2-1) log cos x, sqrt(lambda^2-1) y - log cos x).
inline Point3 tilted_grim_reaper_point(double x, double y, const TiltParams& p) {
  detail::require_open_half_pi(x, "x");
  const double lc = std::log(std::cos(x));
  const double k = p.tilt_slope();
  return {p.lambda() * x, y + k * lc, k * y - lc};
}

/// Regular-centre launch u = r^2/4 + r^4/128 is used on [0, 10 h].
inline constexpr int bowl_series_steps = 10;

/// Bowl soliton profile on [0, r_max]: u(0) = u'(0) = 0, integrated with RK4
/// at the uniform step r_max / ceil(r_max / h).
inline ProfileCurve bowl_profile(double r_max, double h) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("rmax", "r_max must be positive");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("h", "step must be positive");
  if (r_max / h < 10.0) throw DomainError("h", "step too coarse: need r_max / h >= 10");

  const auto n = static_cast<std::size_t>(std::ceil(r_max / h - 1e-9));
  const double step = r_max / static_cast<double>(n);

  ProfileCurve out;
  out.branch = Branch::single;
  out.samples.reserve(n + 1);

  std::array<double, 2> y{0.0, 0.0};
  for (std::size_t i = 0; i <= n; ++i) {
    const double r = step * static_cast<double>(i);
    if (static_cast<int>(i) <= bowl_series_steps) {
      const double r2 = r * r;
      y = {r2 / 4.0 + r2 * r2 / 128.0, r / 2.0 + r2 * r / 32.0};
    } else {
      y = detail::rk4_step(detail::radial_graph_rhs, r - step, y, step);
      detail::check_state(y, step, detail::chart_stiffness(y[1], r, 1.0 / r), "bowl_profile");
    }
    out.samples.push_back({r, y[0]});
  }
  return out;
}

/// The two graphical branches of a winglike translator with neck radius R.
struct WingProfile {
  double neck_radius = 0.0;
  ProfileCurve upper;
  ProfileCurve lower;
};

namespace detail {

/// Integrates one wing branch from the neck (R, 0). Starts in the rotated
/// chart r(u) and switches to the graph chart u(r) once |u'| <= 1.
inline ProfileCurve integrate_wing_branch(double R, double r_max, double h, Branch branch) {
  ProfileCurve out;
  out.branch = branch;
  const double du = branch == Branch::upper ? h : -h;

  double u = 0.0;
  std::array<double, 2> rq{R, 0.0};
  out.samples.push_back({R, 0.0});
  while (rq[0] < r_max && std::abs(rq[1]) < 1.0) {
    rq = rk4_step(radial_rotated_rhs, u, rq, du);
    check_state(rq, h, chart_stiffness(rq[1], 1.0 / rq[0], 1.0), "wing_profile (rotated chart)");
    u += du;
    out.samples.push_back({rq[0], u});
  }
  if (rq[0] >= r_max) return out;

  double r = rq[0];
  std::array<double, 2> up{u, 1.0 / rq[1]};
  while (r < r_max) {
    const double step = std::min(h, r_max - r);
    if (step <= 1e-12 * r_max) break;
    up = rk4_step(radial_graph_rhs, r, up, step);
    check_state(up, step, chart_stiffness(up[1], r + step, 1.0 / (r + step)), "wing_profile (graph chart)");
    r = step < h ? r_max : r + step;
    out.samples.push_back({r, up[0]});
  }
  return out;
}

}  // namespace detail

/// Winglike translator W_R with the neck circle at height 0.
inline WingProfile wing_profile(double R, double r_max, double h) {
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("R", "neck radius must be positive");
  if (!(r_max > R) || !std::isfinite(r_max)) throw DomainError("rmax", "r_max must exceed R");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("h", "step must be positive");
  if ((r_max - R) / h < 10.0) throw DomainError("h", "step too coarse: need (r_max - R) / h >= 10");
  return {R, detail::integrate_wing_branch(R, r_max, h, Branch::upper),
          detail::integrate_wing_branch(R, r_max, h, Branch::lower)};
}

/// Surface of revolution about the z axis generated by the planar curve
/// (r_k, u_k); row i of the mesh is the circle traced by curve point i.
inline SurfaceMesh revolve(std::span<const ProfileSample> curve, std::size_t n_theta) {
  if (curve.empty()) throw DomainError("profile", "cannot revolve an empty profile");
  if (n_theta < 3) throw DomainError("ntheta", "n_theta must be at least 3");
  std::vector<double> c(n_theta), s(n_theta);
  for (std::size_t j = 0; j < n_theta; ++j) {
    const double th = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n_theta);
    c[j] = std::cos(th);
    s[j] = std::sin(th);
  }
  std::vector<Point3> v;
  v.reserve(curve.size() * n_theta);
  for (const auto& p : curve)
    for (std::size_t j = 0; j < n_theta; ++j) v.push_back({p.r * c[j], p.r * s[j], p.u});
  return SurfaceMesh(std::move(v), curve.size(), n_theta, true);
}

inline SurfaceMesh revolve(const ProfileCurve& profile, std::size_t n_theta) {
  return revolve(std::span<const ProfileSample>(profile.samples), n_theta);
}

/// Generating curve of a whole wing: lower branch outside-in, then upper branch.
inline std::vector<ProfileSample> wing_generating_curve(const WingProfile& w) {
  std::vector<ProfileSample> c(w.lower.samples.rbegin(), w.lower.samples.rend());
  c.insert(c.end(), w.upper.samples.begin() + 1, w.upper.samples.end());
  return c;
}

inline SurfaceMesh revolve(const WingProfile& w, std::size_t n_theta) {
  return revolve(std::span<const ProfileSample>(wing_generating_curve(w)), n_theta);
}

/// Graph {(x_i, y_j, f_ij)} of a grid field.
inline SurfaceMesh graph_mesh(const GridField& f) {
  if (f.nx == 0 || f.ny == 0 || f.values.size() != f.nx * f.ny)
    throw DomainError("f", "grid field has inconsistent dimensions");
  std::vector<Point3> v;
  v.reserve(f.values.size());
  for (std::size_t i = 0; i < f.nx; ++i)
    for (std::size_t j = 0; j < f.ny; ++j) {
      if (!std::isfinite(f(i, j))) throw DomainError("f", "non-finite field value");
      v.push_back({f.x(i), f.y(j), f(i, j)});
    }
  return SurfaceMesh(std::move(v), f.nx, f.ny, false);
}

/// Grim reaper cylinder sampled as a graph on [-x_max, x_max] x [y0, y1].
inline GridField grim_reaper_field(double x_max, double y0, double y1, double h) {
  detail::require_open_half_pi(x_max, "x");
  const auto nx = static_cast<std::size_t>(std::llround(2.0 * x_max / h)) + 1;
  const auto ny = static_cast<std::size_t>(std::llround((y1 - y0) / h)) + 1;
  return GridField::sample([](double x, double) { return -std::log(std::cos(x)); }, -x_max, x_max,
                           nx, y0, y1, ny);
}

/// Tilted grim reaper sampled on the parameter grid [-x_max, x_max] x [y0, y1].
inline SurfaceMesh tilted_grim_reaper_mesh(const TiltParams& p, double x_max, double y0, double y1,
                                           std::size_t nx, std::size_t ny) {
  if (nx < 2 || ny < 2) throw GridTooSmallError("tilted mesh needs at least 2x2 nodes");
  std::vector<Point3> v;
  v.reserve(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = -x_max + 2.0 * x_max * static_cast<double>(i) / static_cast<double>(nx - 1);
    for (std::size_t j = 0; j < ny; ++j) {
      const double y = y0 + (y1 - y0) * static_cast<double>(j) / static_cast<double>(ny - 1);
      v.push_back(tilted_grim_reaper_point(x, y, p));
    }
  }
  return SurfaceMesh(std::move(v), nx, ny, false);
}

/// Vertical plane {x = 0} containing v, sampled on [-half, half]^2 in (y, z).
inline SurfaceMesh vertical_plane_mesh(double half, std::size_t n) {
  if (n < 2) throw GridTooSmallError("plane mesh needs at least 2 nodes per axis");
  std::vector<Point3> v;
  v.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double a = -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(n - 1);
      const double b = -half + 2.0 * half * static_cast<double>(j) / static_cast<double>(n - 1);
      v.push_back({0.0, a, b});
    }
  return SurfaceMesh(std::move(v), n, n, false);
}

}  // namespace soliton

#endif  // SOLITON_FAMILIES_HPP
