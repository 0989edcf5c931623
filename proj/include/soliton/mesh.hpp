#ifndef SOLITON_MESH_HPP
#define SOLITON_MESH_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "soliton/errors.hpp"
#include "soliton/geometry.hpp"

namespace soliton {

enum class Branch { single, upper, lower };

inline const char* to_string(Branch b) noexcept {
  switch (b) {
    case Branch::upper: return "upper";
    case Branch::lower: return "lower";
    case Branch::single: break;
  }
  return "single";
}

struct ProfileSample {
  double r = 0.0;
  double u = 0.0;
  friend bool operator==(const ProfileSample&, const ProfileSample&) = default;
};

/// Sampled generating curve r -> u(r) of a rotationally symmetric surface.
/// Samples may be non-uniform in r; consumers interpolate linearly.
struct ProfileCurve {
  std::vector<ProfileSample> samples;
  Branch branch = Branch::single;

  bool empty() const noexcept { return samples.empty(); }
  std::size_t size() const noexcept { return samples.size(); }
  double r_min() const { return samples.front().r; }
  double r_max() const { return samples.back().r; }

  /// Throws DomainError unless r is strictly increasing and every value finite.
  void validate() const {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      if (!std::isfinite(s.r) || !std::isfinite(s.u) || s.r < 0.0)
        throw DomainError("profile", "profile sample " + std::to_string(i) + " is not finite");
      if (i > 0 && !(s.r > samples[i - 1].r))
        throw DomainError("profile", "profile radii must be strictly increasing");
    }
  }

  /// Piecewise-linear height at radius r; clamps outside the sampled range.
  double interpolate(double r) const {
    if (samples.empty()) throw DomainError("profile", "empty profile");
    if (r <= samples.front().r) return samples.front().u;
    if (r >= samples.back().r) return samples.back().u;
    const auto it = std::upper_bound(samples.begin(), samples.end(), r,
                                     [](double v, const ProfileSample& s) { return v < s.r; });
    const auto& b = *it;
    const auto& a = *(it - 1);
    const double w = (r - a.r) / (b.r - a.r);
    return a.u + w * (b.u - a.u);
  }
};

/// Scalar field sampled on the uniform grid x_i = x0 + i hx, y_j = y0 + j hy.
/// Storage is row-major in x: value(i, j) = values[i * ny + j].
struct GridField {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double hx = 1.0;
  double hy = 1.0;
  std::vector<double> values;

  double x(std::size_t i) const noexcept { return x0 + static_cast<double>(i) * hx; }
  double y(std::size_t j) const noexcept { return y0 + static_cast<double>(j) * hy; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values[i * ny + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return values[i * ny + j]; }

  /// Samples f on [xa, xb] x [ya, yb] with nx by ny nodes (endpoints included).
  template <typename F>
  static GridField sample(F&& f, double xa, double xb, std::size_t nx, double ya, double yb,
                          std::size_t ny) {
    if (nx < 2 || ny < 2) throw GridTooSmallError("grid needs at least 2 nodes per axis");
    GridField g;
    g.nx = nx;
    g.ny = ny;
    g.x0 = xa;
    g.y0 = ya;
    g.hx = (xb - xa) / static_cast<double>(nx - 1);
    g.hy = (yb - ya) / static_cast<double>(ny - 1);
    g.values.resize(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j) g(i, j) = f(g.x(i), g.y(j));
    return g;
  }
};

using Quad = std::array<std::size_t, 4>;
using Triangle = std::array<std::size_t, 3>;

/// Structured-grid surface: vertex (i, j) with 0 <= i < nu, 0 <= j < nv is
/// stored at index i * nv + j. When `periodic_v` is set the j direction wraps
/// (surfaces of revolution), so only the i = 0 and i = nu - 1 rows are boundary.
class SurfaceMesh {
public:
  SurfaceMesh() = default;

  SurfaceMesh(std::vector<Point3> vertices, std::size_t nu, std::size_t nv,
              bool periodic_v = false)
      : vertices_(std::move(vertices)), nu_(nu), nv_(nv), periodic_v_(periodic_v) {
    if (vertices_.size() != nu_ * nv_)
      throw DomainError("mesh", "vertex count does not match grid dimensions");
    for (const auto& p : vertices_)
      if (!is_finite(p)) throw DomainError("mesh", "mesh vertex is not finite");
  }

  std::size_t nu() const noexcept { return nu_; }
  std::size_t nv() const noexcept { return nv_; }
  bool periodic_v() const noexcept { return periodic_v_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  std::span<const Point3> vertices() const noexcept { return vertices_; }
  std::vector<Point3>& mutable_vertices() noexcept { return vertices_; }

  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * nv_ + j; }
  const Point3& vertex(std::size_t i, std::size_t j) const noexcept { return vertices_[index(i, j)]; }
  const Point3& operator[](std::size_t k) const noexcept { return vertices_[k]; }

  bool is_boundary(std::size_t i, std::size_t j) const noexcept {
    if (i == 0 || i + 1 >= nu_) return true;
    if (periodic_v_) return nv_ < 3;
    return j == 0 || j + 1 >= nv_;
  }

  std::vector<bool> boundary_flags() const {
    std::vector<bool> flags(size());
    for (std::size_t i = 0; i < nu_; ++i)
      for (std::size_t j = 0; j < nv_; ++j) flags[index(i, j)] = is_boundary(i, j);
    return flags;
  }

  /// Quads as (i,j), (i+1,j), (i+1,j+1), (i,j+1), including the seam when periodic.
  std::vector<Quad> quads() const {
    std::vector<Quad> out;
    if (nu_ < 2 || nv_ < 2) return out;
    const std::size_t jmax = (periodic_v_ && nv_ >= 3) ? nv_ : nv_ - 1;
    out.reserve((nu_ - 1) * jmax);
    for (std::size_t i = 0; i + 1 < nu_; ++i)
      for (std::size_t j = 0; j < jmax; ++j) {
        const std::size_t jn = (j + 1) % nv_;
        out.push_back({index(i, j), index(i + 1, j), index(i + 1, jn), index(i, jn)});
      }
    return out;
  }

  std::vector<Triangle> triangles() const {
    std::vector<Triangle> out;
    for (const auto& q : quads()) {
      out.push_back({q[0], q[1], q[2]});
      out.push_back({q[0], q[2], q[3]});
    }
    return out;
  }

  /// Longest grid edge; the sampling resolution used for contact tolerances.
  double resolution() const noexcept {
    double r = 0.0;
    for (std::size_t i = 0; i < nu_; ++i)
      for (std::size_t j = 0; j < nv_; ++j) {
        if (i + 1 < nu_) r = std::max(r, distance(vertex(i, j), vertex(i + 1, j)));
        if (j + 1 < nv_) r = std::max(r, distance(vertex(i, j), vertex(i, j + 1)));
        else if (periodic_v_ && nv_ >= 3) r = std::max(r, distance(vertex(i, j), vertex(i, 0)));
      }
    return r;
  }

  SurfaceMesh translated(const Point3& offset) const {
    SurfaceMesh m = *this;
    for (auto& p : m.vertices_) p += offset;
    return m;
  }

  SurfaceMesh transformed(const Mat3& rotation, const Point3& offset = {}) const {
    SurfaceMesh m = *this;
    for (auto& p : m.vertices_) p = rotation * p + offset;
    return m;
  }

private:
  std::vector<Point3> vertices_;
  std::size_t nu_ = 0;
  std::size_t nv_ = 0;
  bool periodic_v_ = false;
};

}  // namespace soliton

#endif  // SOLITON_MESH_HPP
