#ifndef SOLITON_SPATIAL_HPP
#define SOLITON_SPATIAL_HPP

// Uniform bucket grids: nearest-vertex queries in R^3 and point location in
// projected (planar) triangle soups.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "soliton/geometry.hpp"

namespace soliton {

struct Nearest {
  std::size_t index = 0;
  double distance = std::numeric_limits<double>::infinity();
};

class PointIndex {
public:
  explicit PointIndex(std::span<const Point3> points) : points_(points) {
    lo_ = hi_ = points.empty() ? Point3{} : points.front();
    for (const auto& p : points) {
      lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y), std::min(lo_.z, p.z)};
      hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y), std::max(hi_.z, p.z)};
    }
    const Point3 ext = hi_ - lo_;
    const double longest = std::max({ext.x, ext.y, ext.z});
    const double per_axis = std::max(1.0, std::cbrt(static_cast<double>(points.size())));
    cell_ = longest > 0.0 ? longest / per_axis : 1.0;
    dims_ = {axis_cells(ext.x), axis_cells(ext.y), axis_cells(ext.z)};
    buckets_.resize(dims_[0] * dims_[1] * dims_[2]);
    for (std::size_t k = 0; k < points.size(); ++k) {
      const auto c = cell_of(points[k]);
      buckets_[flat(c[0], c[1], c[2])].push_back(k);
    }
  }

  Nearest nearest(const Point3& q) const {
    Nearest best;
    if (points_.empty()) return best;
    const auto c = cell_of(q);
    const long max_ring = static_cast<long>(std::max({dims_[0], dims_[1], dims_[2]}));
    for (long ring = 0; ring <= max_ring; ++ring) {
      visit_ring(c, ring, [&](std::size_t k) {
        const double d = distance(points_[k], q);
        if (d < best.distance || (d == best.distance && k < best.index)) best = {k, d};
      });
      // Points in ring + 1 and beyond are at least `ring * cell_` away.
      if (best.distance <= static_cast<double>(ring) * cell_) break;
    }
    return best;
  }

private:
  std::size_t axis_cells(double extent) const {
    return static_cast<std::size_t>(std::floor(extent / cell_)) + 1;
  }

  std::array<long, 3> cell_of(const Point3& p) const {
    auto clampi = [](double v, std::size_t n) {
      const double c = std::floor(v);
      return static_cast<long>(std::clamp(c, 0.0, static_cast<double>(n - 1)));
    };
    return {clampi((p.x - lo_.x) / cell_, dims_[0]), clampi((p.y - lo_.y) / cell_, dims_[1]),
            clampi((p.z - lo_.z) / cell_, dims_[2])};
  }

  std::size_t flat(long i, long j, long k) const {
    return (static_cast<std::size_t>(i) * dims_[1] + static_cast<std::size_t>(j)) * dims_[2] +
           static_cast<std::size_t>(k);
  }

  template <typename Visit>
  void visit_ring(const std::array<long, 3>& c, long ring, Visit&& visit) const {
    const long n0 = static_cast<long>(dims_[0]), n1 = static_cast<long>(dims_[1]),
               n2 = static_cast<long>(dims_[2]);
    for (long i = std::max(0L, c[0] - ring); i <= std::min(n0 - 1, c[0] + ring); ++i)
      for (long j = std::max(0L, c[1] - ring); j <= std::min(n1 - 1, c[1] + ring); ++j)
        for (long k = std::max(0L, c[2] - ring); k <= std::min(n2 - 1, c[2] + ring); ++k) {
          const long cheb = std::max({std::abs(i - c[0]), std::abs(j - c[1]), std::abs(k - c[2])});
          if (cheb != ring) continue;
          for (const auto idx : buckets_[flat(i, j, k)]) visit(idx);
        }
  }

  std::span<const Point3> points_;
  Point3 lo_, hi_;
  double cell_ = 1.0;
  std::array<std::size_t, 3> dims_{1, 1, 1};
  std::vector<std::vector<std::size_t>> buckets_;
};

/// Closest point to p on triangle (a, b, c) (Ericson, Real-Time Collision Detection 5.1.5).
inline Point3 closest_point_on_triangle(const Point3& p, const Point3& a, const Point3& b,
                                        const Point3& c) {
  const Point3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = dot(ab, ap), d2 = dot(ac, ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;
  const Point3 bp = p - b;
  const double d3 = dot(ab, bp), d4 = dot(ac, bp);
  if (d3 >= 0.0 && d4 <= d3) return b;
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + ab * (d1 / (d1 - d3));
  const Point3 cp = p - c;
  const double d5 = dot(ab, cp), d6 = dot(ac, cp);
  if (d6 >= 0.0 && d5 <= d6) return c;
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + ac * (d2 / (d2 - d6));
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
    return b + (c - b) * ((d4 - d3) / ((d4 - d3) + (d5 - d6)));
  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

/// Planar triangle soup with bucketed point location.
class PlanarTriangleLocator {
public:
  using Tri = std::array<std::size_t, 3>;

  PlanarTriangleLocator(std::span<const Point2> points, std::vector<Tri> tris)
      : points_(points), tris_(std::move(tris)) {
    if (tris_.empty()) return;
    lo_ = hi_ = points_[tris_.front()[0]];
    for (const auto& t : tris_)
      for (const auto k : t) {
        lo_ = {std::min(lo_.x, points_[k].x), std::min(lo_.y, points_[k].y)};
        hi_ = {std::max(hi_.x, points_[k].x), std::max(hi_.y, points_[k].y)};
      }
    const double ex = hi_.x - lo_.x, ey = hi_.y - lo_.y;
    const double area = std::max(ex * ey, 1e-300);
    cell_ = std::sqrt(area / static_cast<double>(tris_.size()));
    if (!(cell_ > 0.0)) cell_ = std::max({ex, ey, 1.0});
    const double cap = 4096.0;
    nx_ = static_cast<std::size_t>(std::min(cap, std::floor(ex / cell_) + 1.0));
    ny_ = static_cast<std::size_t>(std::min(cap, std::floor(ey / cell_) + 1.0));
    cx_ = ex > 0.0 ? ex / static_cast<double>(nx_) : 1.0;
    cy_ = ey > 0.0 ? ey / static_cast<double>(ny_) : 1.0;
    buckets_.resize(nx_ * ny_);
    scale_ = std::max({ex, ey, 1e-300});
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      const auto& tri = tris_[t];
      double x0 = points_[tri[0]].x, x1 = x0, y0 = points_[tri[0]].y, y1 = y0;
      for (const auto k : tri) {
        x0 = std::min(x0, points_[k].x);
        x1 = std::max(x1, points_[k].x);
        y0 = std::min(y0, points_[k].y);
        y1 = std::max(y1, points_[k].y);
      }
      const auto [i0, j0] = cell_of({x0, y0});
      const auto [i1, j1] = cell_of({x1, y1});
      for (std::size_t i = i0; i <= i1; ++i)
        for (std::size_t j = j0; j <= j1; ++j) buckets_[i * ny_ + j].push_back(t);
    }
  }

  const std::vector<Tri>& triangles() const noexcept { return tris_; }

  /// Calls visit(tri_index, w0, w1, w2) for every non-degenerate triangle whose
  /// closure contains q, with barycentric weights.
  template <typename Visit>
  void locate(const Point2& q, Visit&& visit) const {
    if (tris_.empty()) return;
    const double slack = 1e-9 * scale_;
    if (q.x < lo_.x - slack || q.x > hi_.x + slack || q.y < lo_.y - slack || q.y > hi_.y + slack)
      return;
    const auto [i, j] = cell_of(q);
    for (const auto t : buckets_[i * ny_ + j]) {
      const auto& tri = tris_[t];
      const Point2 &a = points_[tri[0]], &b = points_[tri[1]], &c = points_[tri[2]];
      const double det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
      if (std::abs(det) <= 1e-14 * scale_ * scale_) continue;
      const double w1 = ((q.x - a.x) * (c.y - a.y) - (c.x - a.x) * (q.y - a.y)) / det;
      const double w2 = ((b.x - a.x) * (q.y - a.y) - (q.x - a.x) * (b.y - a.y)) / det;
      const double w0 = 1.0 - w1 - w2;
      constexpr double eps = -1e-10;
      if (w0 >= eps && w1 >= eps && w2 >= eps) visit(t, w0, w1, w2);
    }
  }

private:
  std::pair<std::size_t, std::size_t> cell_of(const Point2& p) const {
    auto idx = [](double v, double cell, std::size_t n) {
      const double c = std::floor(v / cell);
      return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(n - 1)));
    };
    return {idx(p.x - lo_.x, cx_, nx_), idx(p.y - lo_.y, cy_, ny_)};
  }

  std::span<const Point2> points_;
  std::vector<Tri> tris_;
  Point2 lo_, hi_;
  double cell_ = 1.0, cx_ = 1.0, cy_ = 1.0, scale_ = 1.0;
  std::size_t nx_ = 1, ny_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace soliton

#endif  // SOLITON_SPATIAL_HPP
