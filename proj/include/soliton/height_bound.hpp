#ifndef SOLITON_HEIGHT_BOUND_HPP
#define SOLITON_HEIGHT_BOUND_HPP

// Height estimate for a compact translator in R^3 whose boundary curve has
// diameter (or lies in a slab of width) d. For d < pi the bound is the height
// of the canonical grim reaper at half-width d/2; for d >= pi it is the
// minimum over s in (1, s0] of
//
//   C(s) = -lambda^2 log cos((pi/2)/s) + (d/2) sqrt(lambda^2 - 1),  lambda = (d/pi) s,
//
// the height span of the curve where the dilated, tilted grim reaper meets
// the vertical cylinder of diameter d.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "soliton/errors.hpp"
#include "soliton/families.hpp"
#include "soliton/geometry.hpp"
#include "soliton/minimize.hpp"

namespace soliton {

/// Clamp keeping s (and (d/2)/lambda) away from the log/sqrt singularities.
inline constexpr double boundary_epsilon = 1e-9;
inline constexpr std::size_t c_sample_count = 256;
inline constexpr std::size_t c_scan_points = 1000;

namespace detail {

inline void check_c_domain(double s, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("d", "d must be positive");
  if (!(s > 1.0 + boundary_epsilon) || !std::isfinite(s)) throw DomainError("s", "C(s) needs s > 1");
  if (!(d / pi * s > 1.0)) throw DomainError("s", "C(s) needs lambda = (d/pi) s > 1");
}

}  // namespace detail

inline double c_of_s(double s, double d) {
  detail::check_c_domain(s, d);
  const double lambda = d / pi * s;
  return -lambda * lambda * std::log(std::cos(0.5 * pi / s)) +
         0.5 * d * std::sqrt(lambda * lambda - 1.0);
}

/// Closed-form dC/ds.
inline double c_prime(double s, double d) {
  detail::check_c_domain(s, d);
  const double theta = 0.5 * pi / s;
  const double lambda = d / pi * s;
  return -2.0 * d * d / (pi * pi) * s * std::log(std::cos(theta)) -
         d * d / (2.0 * pi) * std::tan(theta) +
         d * d * d / (2.0 * pi * pi) * s / std::sqrt(lambda * lambda - 1.0);
}

/// s0 = (pi/2) / arctan((4 - sqrt 2)/2); C is increasing on (s0, inf).
inline double s0() noexcept { return 0.5 * pi / std::atan((4.0 - std::sqrt(2.0)) / 2.0); }

struct CMinimum {
  double s_star = 0.0;
  double bound = 0.0;
};

/// min over (1, s0] of C(s) for d >= pi.
inline CMinimum minimize_c(double d, double tol) {
  if (!(d >= pi) || !std::isfinite(d)) throw DomainError("d", "minimize_c needs d >= pi");
  if (!(tol > 1e-14 && tol < 1e-2)) throw DomainError("tol", "tol must lie in (1e-14, 1e-2)");
  auto c = [d](double s) { return c_of_s(s, d); };
  const auto m = scan_then_golden(c, 1.0 + 2.0 * boundary_epsilon, s0(), c_scan_points, tol);
  return {m.x, c_of_s(m.x, d)};
}

enum class Regime { narrow, wide };

inline const char* to_string(Regime r) noexcept { return r == Regime::narrow ? "narrow" : "wide"; }

struct HeightBoundReport {
  double d = 0.0;
  Regime regime = Regime::narrow;
  double bound = 0.0;
  double s_star = 0.0;  ///< meaningful in the wide regime only
  std::vector<std::pair<double, double>> c_samples;
};

inline HeightBoundReport height_bound(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("d", "d must be positive");
  HeightBoundReport rep;
  rep.d = d;
  if (d < pi) {
    rep.regime = Regime::narrow;
    const double q = std::sin(0.25 * d);
    rep.bound = -std::log1p(-2.0 * q * q);  // -log cos(d/2) without cancellation for small d
    return rep;
  }
  rep.regime = Regime::wide;
  const auto m = minimize_c(d, 1e-9);
  rep.bound = m.bound;
  rep.s_star = m.s_star;
  const double lo = 1.0 + 2.0 * boundary_epsilon, hi = s0();
  rep.c_samples.reserve(c_sample_count);
  for (std::size_t k = 0; k < c_sample_count; ++k) {
    const double s = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(c_sample_count - 1);
    rep.c_samples.emplace_back(s, c_of_s(s, d));
  }
  return rep;
}

enum class GammaSign { plus, minus };

struct GammaPoint {
  double x = 0.0;
  GammaSign sign = GammaSign::plus;
  Point3 position;
};

/// Point of the intersection of the tilted grim reaper with the vertical
/// cylinder x^2 + y^2 = (d/2)^2, for x in [-(d/2)/lambda, (d/2)/lambda].
inline GammaPoint gamma_pm(double x, GammaSign sign, const TiltParams& p) {
  const double lim = p.x_limit();
  if (!(std::abs(x) <= lim * (1.0 + 1e-15))) throw DomainError("x", "x outside [-(d/2)/lambda, (d/2)/lambda]");
  const double half = 0.5 * p.d();
  const bool endpoint = std::abs(x) >= lim;
  const double lx = endpoint ? std::copysign(half, x) : p.lambda() * x;
  const double root = endpoint ? 0.0 : std::sqrt(std::max(0.0, (half - lx) * (half + lx)));
  const double sg = sign == GammaSign::plus ? 1.0 : -1.0;
  const double lambda2 = p.lambda() * p.lambda();
  return {x, sign, {lx, sg * root, -lambda2 * std::log(std::cos(x)) + sg * p.tilt_slope() * root}};
}

struct HeightExtrema {
  double min_z = 0.0;
  double max_z = 0.0;
  double span() const noexcept { return max_z - min_z; }
};

/// Extremes of the third coordinate at the critical point x = 0 of gamma_-
/// and the endpoints x = +-(d/2)/lambda.
inline HeightExtrema gamma_height_extrema(const TiltParams& p) {
  if (!(p.x_limit() < 0.5 * pi - boundary_epsilon))
    throw DomainError("lambda", "(d/2)/lambda must stay below pi/2");
  const double lambda2 = p.lambda() * p.lambda();
  return {-0.5 * p.d() * p.tilt_slope(), -lambda2 * std::log(std::cos(p.x_limit()))};
}

/// n uniform samples of each branch over the full parameter interval.
inline std::vector<GammaPoint> sample_gamma(const TiltParams& p, std::size_t n) {
  if (n < 2) throw DomainError("n", "need at least two samples per branch");
  std::vector<GammaPoint> out;
  out.reserve(2 * n);
  const double lim = p.x_limit();
  for (const auto sign : {GammaSign::plus, GammaSign::minus})
    for (std::size_t k = 0; k < n; ++k) {
      const double x = k + 1 == n ? lim : -lim + 2.0 * lim * static_cast<double>(k) / static_cast<double>(n - 1);
      out.push_back(gamma_pm(x, sign, p));
    }
  return out;
}

}  // namespace soliton

#endif  // SOLITON_HEIGHT_BOUND_HPP
