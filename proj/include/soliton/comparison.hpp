#ifndef SOLITON_COMPARISON_HPP
#define SOLITON_COMPARISON_HPP

// Numerical comparison procedures: first contact between a surface and a
// moving translator (a one-parameter family or a rigid slide), and the
// moving-plane reflection sweep.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "soliton/errors.hpp"
#include "soliton/geometry.hpp"
#include "soliton/mesh.hpp"
#include "soliton/minimize.hpp"
#include "soliton/spatial.hpp"

namespace soliton {

// ---------------------------------------------------------------------------
// Distance between sampled surfaces
// ---------------------------------------------------------------------------

struct ClosestApproach {
  double distance = std::numeric_limits<double>::infinity();
  Point3 on_a;
  Point3 on_b;
  Point3 witness() const noexcept { return (on_a + on_b) * 0.5; }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> vertex_triangles(const SurfaceMesh& m,
                                                             const std::vector<Triangle>& tris) {
  std::vector<std::vector<std::size_t>> adj(m.size());
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (const auto v : tris[t]) adj[v].push_back(t);
  return adj;
}

/// Vertices of `from` ranked by distance to the nearest vertex of `to`, then the
/// best `refine` of them projected onto triangles of `to` around that vertex.
inline void one_sided_approach(const SurfaceMesh& from, const SurfaceMesh& to, bool from_is_a,
                               std::size_t refine, ClosestApproach& best) {
  const PointIndex index(to.vertices());
  std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> pairs;
  pairs.reserve(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    const auto nn = index.nearest(from[k]);
    pairs.push_back({nn.distance, {k, nn.index}});
  }
  const std::size_t keep = std::min(refine, pairs.size());
  std::partial_sort(pairs.begin(), pairs.begin() + static_cast<long>(keep), pairs.end());

  auto offer = [&](const Point3& p_from, const Point3& p_to) {
    const double d = distance(p_from, p_to);
    if (d < best.distance) {
      best.distance = d;
      best.on_a = from_is_a ? p_from : p_to;
      best.on_b = from_is_a ? p_to : p_from;
    }
  };

  const auto tris = to.triangles();
  const auto adj = vertex_triangles(to, tris);
  for (std::size_t r = 0; r < keep; ++r) {
    const auto [k, nearest] = pairs[r].second;
    const Point3& p = from[k];
    offer(p, to[nearest]);
    for (const auto t : adj[nearest]) {
      const auto& tri = tris[t];
      offer(p, closest_point_on_triangle(p, to[tri[0]], to[tri[1]], to[tri[2]]));
    }
  }
}

}  // namespace detail

/// Minimum vertex-to-vertex distance refined by point-to-triangle projection
/// for the `refine` closest vertex pairs in each direction.
inline ClosestApproach closest_approach(const SurfaceMesh& a, const SurfaceMesh& b,
                                        std::size_t refine = 32) {
  if (a.empty() || b.empty()) throw EmptyMeshError("min_gap needs two nonempty meshes");
  ClosestApproach best;
  detail::one_sided_approach(a, b, true, refine, best);
  detail::one_sided_approach(b, a, false, refine, best);
  return best;
}

inline double min_gap(const SurfaceMesh& a, const SurfaceMesh& b) {
  return closest_approach(a, b).distance;
}

// ---------------------------------------------------------------------------
// First contact
// ---------------------------------------------------------------------------

enum class SweepDirection { increasing, decreasing };

struct ContactResult {
  double parameter = 0.0;
  Point3 witness;
  double gap = 0.0;
  double tolerance = 0.0;
  /// (parameter, min_gap) pairs in sweep order: coarse samples then bisection probes.
  std::vector<std::pair<double, double>> clearance_curve;
};

using MeshFamily = std::function<SurfaceMesh(double)>;

/// Contact tolerance default: twice the larger sampling resolution.
inline double default_contact_tolerance(const SurfaceMesh& a, const SurfaceMesh& b) {
  return 2.0 * std::max(a.resolution(), b.resolution());
}

/// Sweeps `family` across [lo, hi] starting from the end selected by
/// `direction` and returns the first parameter where min_gap <= tol, located
/// by bisection to a parameter bracket of width <= tol / 2. `n_coarse` uniform
/// samples bracket the contact first. The gap is unsigned, so a family can
/// pass through the target between two samples; every sampled local minimum
/// of the gap is therefore refined by golden-section search before the scan
/// moves on.
inline ContactResult first_touch_family(const SurfaceMesh& target, const MeshFamily& family, double lo,
                                        double hi, SweepDirection direction, double tol,
                                        std::size_t n_coarse = 64) {
  if (!(hi > lo)) throw DomainError("range", "parameter range must satisfy lo < hi");
  if (!(tol > 0.0)) throw DomainError("tol", "contact tolerance must be positive");
  if (n_coarse < 2) throw DomainError("steps", "need at least two coarse samples");
  const double start = direction == SweepDirection::increasing ? lo : hi;
  const double end = direction == SweepDirection::increasing ? hi : lo;

  ContactResult res;
  res.tolerance = tol;
  auto gap_at = [&](double param) {
    const double g = min_gap(target, family(param));
    res.clearance_curve.emplace_back(param, g);
    return g;
  };

  if (gap_at(start) <= tol) throw PreconditionError("surfaces are already in contact at the sweep start");

  auto coarse = [&](std::size_t k) {
    return k + 1 == n_coarse ? end
                             : start + (end - start) * static_cast<double>(k) / static_cast<double>(n_coarse - 1);
  };
  // A dip of the gap inside [a, b] that reaches tol: returns the probe within
  // tol closest to a, the side the sweep arrives from.
  auto dip = [&](double a, double b) -> std::optional<double> {
    const std::size_t first_probe = res.clearance_curve.size();
    golden_section_minimize([&](double q) { return gap_at(q); }, std::min(a, b), std::max(a, b), 0.25 * tol);
    std::optional<double> touch;
    for (std::size_t k = first_probe; k < res.clearance_curve.size(); ++k) {
      const auto [q, g] = res.clearance_curve[k];
      if (g <= tol && (!touch || std::abs(q - a) < std::abs(*touch - a))) touch = q;
    }
    return touch;
  };

  double before = start, after = start;
  bool found = false;
  double prev_param = start, prev_gap = res.clearance_curve.front().second;
  double prev2_param = start;
  bool descending = false;
  for (std::size_t k = 1; k < n_coarse && !found; ++k) {
    const double param = coarse(k);
    const double g = gap_at(param);
    if (descending && g >= prev_gap) {
      if (const auto touch = dip(prev2_param, param)) {
        before = prev2_param;
        after = *touch;
        found = true;
        break;
      }
    }
    if (g <= tol) {
      before = prev_param;
      after = param;
      found = true;
      break;
    }
    descending = g < prev_gap;
    prev2_param = prev_param;
    prev_param = param;
    prev_gap = g;
  }
  if (!found) throw NoContactError("no contact within tolerance across the parameter range");

  while (std::abs(after - before) > 0.5 * tol) {
    const double mid = 0.5 * (before + after);
    if (gap_at(mid) <= tol) after = mid;
    else before = mid;
  }
  const auto approach = closest_approach(target, family(after));
  res.parameter = after;
  res.gap = approach.distance;
  res.witness = approach.witness();
  return res;
}

/// Rigidly translates `slider` by s * direction for s in [0, max_offset] until
/// it first comes within tol of `obstacle`.
inline ContactResult first_touch_slide(const SurfaceMesh& obstacle, const SurfaceMesh& slider,
                                       const Point3& direction, double max_offset, double tol,
                                       std::size_t n_coarse = 64) {
  if (!(norm(direction) > 0.0)) throw DomainError("direction", "slide direction must be nonzero");
  const Point3 dir = normalized(direction);
  return first_touch_family(
      obstacle, [&](double s) { return slider.translated(dir * s); }, 0.0, max_offset,
      SweepDirection::increasing, tol, n_coarse);
}

// ---------------------------------------------------------------------------
// Moving planes
// ---------------------------------------------------------------------------

/// One side of a mesh cut by a plane, seen as a graph over the plane:
/// `height[k]` is the coordinate of vertex k along the plane normal and
/// `projection[k]` its coordinates in the plane.
struct HalfGraph {
  Plane plane;
  std::vector<Point2> projection;
  std::vector<double> height;
  std::vector<bool> member;
  std::vector<Triangle> triangles;

  /// Mirror image across plane(t): heights h -> 2t - h.
  HalfGraph reflected(double t) const {
    HalfGraph r = *this;
    for (auto& h : r.height) h = 2.0 * t - h;
    return r;
  }
};

enum class Side { positive, negative };

namespace detail {

inline HalfGraph split_half(const SurfaceMesh& mesh, const Plane& plane, Side side) {
  const Point3 n = normalized(plane.normal);
  const auto basis = orthonormal_complement(n);
  HalfGraph g;
  g.plane = {n, plane.offset};
  g.projection.resize(mesh.size());
  g.height.resize(mesh.size());
  g.member.resize(mesh.size());
  for (std::size_t k = 0; k < mesh.size(); ++k) {
    const Point3& p = mesh[k];
    g.projection[k] = {dot(p, basis[0]), dot(p, basis[1])};
    g.height[k] = dot(p, n);
    const double s = g.height[k] - plane.offset;
    g.member[k] = side == Side::positive ? s >= 0.0 : s <= 0.0;
  }
  for (const auto& t : mesh.triangles())
    if (g.member[t[0]] && g.member[t[1]] && g.member[t[2]]) g.triangles.push_back(t);
  return g;
}

inline double projected_extent(const HalfGraph& g) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t k = 0; k < g.projection.size(); ++k)
    if (g.member[k]) {
      lo = std::min({lo, g.projection[k].x, g.projection[k].y});
      hi = std::max({hi, g.projection[k].x, g.projection[k].y});
    }
  return hi > lo ? hi - lo : 1.0;
}

/// A vertex of the half that projects inside a non-incident triangle whose
/// height range it misses means two sheets over one projection cell.
inline void require_graph(const HalfGraph& g, const PlanarTriangleLocator& loc, double t) {
  const double slack = 1e-9 * projected_extent(g);
  for (std::size_t k = 0; k < g.projection.size(); ++k) {
    if (!g.member[k]) continue;
    loc.locate(g.projection[k], [&](std::size_t ti, double, double, double) {
      const auto& tri = loc.triangles()[ti];
      if (tri[0] == k || tri[1] == k || tri[2] == k) return;
      const double h0 = std::min({g.height[tri[0]], g.height[tri[1]], g.height[tri[2]]});
      const double h1 = std::max({g.height[tri[0]], g.height[tri[1]], g.height[tri[2]]});
      if (g.height[k] < h0 - slack || g.height[k] > h1 + slack)
        throw NotAGraphError(t, g.projection[k].x, g.projection[k].y,
                             "half of the mesh beyond the plane is not a graph over it");
    });
  }
}

inline double interpolate(const HalfGraph& g, const Triangle& tri, double w0, double w1, double w2) {
  return w0 * g.height[tri[0]] + w1 * g.height[tri[1]] + w2 * g.height[tri[2]];
}

}  // namespace detail

/// The half M+(t) = {<p, n> >= t}, checked to be a graph over the plane, and
/// reflected across it.
inline HalfGraph reflect_half(const SurfaceMesh& mesh, const Plane& plane) {
  auto half = detail::split_half(mesh, plane, Side::positive);
  const PlanarTriangleLocator loc(half.projection, half.triangles);
  detail::require_graph(half, loc, plane.offset);
  return half.reflected(plane.offset);
}

/// Penetration of the reflected half M+*(t) past the other half M-(t), measured
/// along the plane normal over their common projection: max(0, g- - (2t - g+)).
/// Both halves are probed at the vertices of the other, with linear
/// interpolation inside the projected triangles.
inline double reflection_defect(const SurfaceMesh& mesh, const Plane& plane) {
  const double t = plane.offset;
  const auto plus = detail::split_half(mesh, plane, Side::positive);
  const auto minus = detail::split_half(mesh, plane, Side::negative);
  const PlanarTriangleLocator plus_loc(plus.projection, plus.triangles);
  const PlanarTriangleLocator minus_loc(minus.projection, minus.triangles);
  detail::require_graph(plus, plus_loc, t);

  double defect = 0.0;
  for (std::size_t k = 0; k < mesh.size(); ++k) {
    if (minus.member[k]) {
      plus_loc.locate(minus.projection[k], [&](std::size_t ti, double w0, double w1, double w2) {
        const double g_plus = detail::interpolate(plus, plus_loc.triangles()[ti], w0, w1, w2);
        defect = std::max(defect, minus.height[k] - (2.0 * t - g_plus));
      });
    }
    if (plus.member[k]) {
      minus_loc.locate(plus.projection[k], [&](std::size_t ti, double w0, double w1, double w2) {
        const double g_minus = detail::interpolate(minus, minus_loc.triangles()[ti], w0, w1, w2);
        defect = std::max(defect, g_minus - (2.0 * t - plus.height[k]));
      });
    }
  }
  return defect;
}

struct SweepReport {
  std::vector<double> t_samples;  ///< increasing, from 0 to t0
  std::vector<double> defects;
  double t0 = 0.0;
  std::size_t n_steps = 0;
  double tolerance = 0.0;
  bool symmetric = true;

  double max_defect() const {
    return defects.empty() ? 0.0 : *std::max_element(defects.begin(), defects.end());
  }
  double t_of_max_defect() const {
    if (defects.empty()) return 0.0;
    return t_samples[static_cast<std::size_t>(std::max_element(defects.begin(), defects.end()) -
                                              defects.begin())];
  }
};

inline constexpr std::size_t default_sweep_steps = 256;
inline constexpr double default_symmetry_tolerance = 1e-9;

/// Moves the plane {<p, n> = t} from t0 = max <p, n> down to 0 in n_steps
/// uniform steps and records the reflection defect at each position.
inline SweepReport alexandrov_sweep(const SurfaceMesh& mesh, const Point3& plane_normal,
                                    std::size_t n_steps = default_sweep_steps,
                                    double tolerance = default_symmetry_tolerance) {
  if (mesh.empty()) throw EmptyMeshError("cannot sweep an empty mesh");
  if (!(norm(plane_normal) > 0.0)) throw DomainError("plane-normal", "plane normal must be nonzero");
  if (n_steps < 1) throw DomainError("steps", "need at least one sweep step");
  const Point3 n = normalized(plane_normal);

  double t0 = -std::numeric_limits<double>::infinity();
  for (const auto& p : mesh.vertices()) t0 = std::max(t0, dot(p, n));
  if (!(t0 > 0.0)) throw PreconditionError("mesh does not reach the positive side of the plane");

  SweepReport rep;
  rep.t0 = t0;
  rep.n_steps = n_steps;
  rep.tolerance = tolerance;
  rep.t_samples.resize(n_steps + 1);
  rep.defects.resize(n_steps + 1);
  for (std::size_t k = n_steps + 1; k-- > 0;) {
    const double t = t0 * static_cast<double>(k) / static_cast<double>(n_steps);
    rep.t_samples[k] = t;
    rep.defects[k] = reflection_defect(mesh, {n, t});
  }
  rep.symmetric = rep.max_defect() <= tolerance;
  return rep;
}

}  // namespace soliton

#endif  // SOLITON_COMPARISON_HPP
