#ifndef SOLITON_GEOMETRY_HPP
#define SOLITON_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <numbers>

namespace soliton {

inline constexpr double pi = std::numbers::pi;

/// Point or vector in R^3. The translation direction v is +z throughout.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Point3& operator+=(const Point3& o) noexcept {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Point3& operator-=(const Point3& o) noexcept {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Point3& operator*=(double s) noexcept {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Point3 operator+(Point3 a, const Point3& b) noexcept { return a += b; }
  friend constexpr Point3 operator-(Point3 a, const Point3& b) noexcept { return a -= b; }
  friend constexpr Point3 operator-(const Point3& a) noexcept { return {-a.x, -a.y, -a.z}; }
  friend constexpr Point3 operator*(Point3 a, double s) noexcept { return a *= s; }
  friend constexpr Point3 operator*(double s, Point3 a) noexcept { return a *= s; }
  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

/// Point in the plane, e.g. on the grim reaper curve.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

constexpr double dot(const Point3& a, const Point3& b) noexcept {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Point3 cross(const Point3& a, const Point3& b) noexcept {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Point3& a) noexcept { return std::sqrt(dot(a, a)); }

inline double distance(const Point3& a, const Point3& b) noexcept { return norm(a - b); }

inline Point3 normalized(const Point3& a) noexcept {
  const double n = norm(a);
  return n > 0.0 ? a * (1.0 / n) : a;
}

inline bool is_finite(const Point3& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static constexpr Mat3 identity() noexcept {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }

  constexpr double operator()(int i, int j) const noexcept { return m[i][j]; }

  constexpr Point3 operator*(const Point3& p) const noexcept {
    return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
            m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
            m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
  }

  constexpr Mat3 operator*(const Mat3& o) const noexcept {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
    return r;
  }

  constexpr Mat3 transposed() const noexcept {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  constexpr double determinant() const noexcept {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
};

/// Rotation by `alpha` radians about the z axis (the translation direction).
inline Mat3 rotation_about_z(double alpha) noexcept {
  const double c = std::cos(alpha), s = std::sin(alpha);
  Mat3 r;
  r.m = {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
  return r;
}

/// Plane {p : <p, normal> = offset} with unit normal.
struct Plane {
  Point3 normal{1.0, 0.0, 0.0};
  double offset = 0.0;

  double signed_distance(const Point3& p) const noexcept { return dot(p, normal) - offset; }

  Point3 reflect(const Point3& p) const noexcept {
    return p - normal * (2.0 * signed_distance(p));
  }
};

/// Orthonormal pair spanning the plane orthogonal to a unit vector `n`.
inline std::array<Point3, 2> orthonormal_complement(const Point3& n) noexcept {
  const Point3 seed = std::abs(n.x) < 0.9 ? Point3{1.0, 0.0, 0.0} : Point3{0.0, 1.0, 0.0};
  const Point3 e1 = normalized(seed - n * dot(seed, n));
  return {e1, cross(n, e1)};
}

}  // namespace soliton

#endif  // SOLITON_GEOMETRY_HPP
