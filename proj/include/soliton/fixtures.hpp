#ifndef SOLITON_FIXTURES_HPP
#define SOLITON_FIXTURES_HPP

// Reproducible test geometry: bowl caps, a seeded asymmetric bump, spheres.

#include <cmath>
#include <cstdint>

#include "soliton/families.hpp"
#include "soliton/mesh.hpp"

namespace soliton {

/// splitmix64 finalizer applied to seed + stream * 0x9e3779b97f4a7c15, mapped
/// to [0, 1) from the top 53 bits. Fixture perturbations draw from this only.
inline double unit_interval_hash(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

/// Part of the bowl over the disc of diameter d, shifted so its boundary
/// circle lies in the plane z = 0 and the cap hangs below it.
inline SurfaceMesh bowl_cap_mesh(double d, double h, std::size_t n_theta) {
  const auto profile = bowl_profile(0.5 * d, h);
  const double rim = profile.samples.back().u;
  return revolve(profile, n_theta).translated({0.0, 0.0, -rim});
}

struct BumpSpec {
  double amplitude = 0.1;
  Point3 direction{1.0, 0.0, 0.0};
  std::uint64_t seed = 0;
};

/// Displaces vertices of a revolved mesh along `direction` by a Gaussian bump
/// in grid-index space. The centre row lies in the middle third of the rows
/// and the centre column within pi/8 of the azimuth of `direction` (both drawn
/// from the seed); only vertices on the positive side of the plane through the
/// axis orthogonal to `direction` move, so the centre vertex moves by exactly
/// `amplitude`.
inline SurfaceMesh add_seeded_bump(const SurfaceMesh& mesh, const BumpSpec& spec) {
  SurfaceMesh out = mesh;
  const Point3 dir = normalized(spec.direction);
  const std::size_t nu = mesh.nu(), nv = mesh.nv();
  const double u = unit_interval_hash(spec.seed, 0), v = unit_interval_hash(spec.seed, 1);
  const double ic = std::round(static_cast<double>(nu) / 3.0 + u * static_cast<double>(nu) / 3.0);
  const double azimuth = std::atan2(dir.y, dir.x) + (2.0 * v - 1.0) * pi / 8.0;
  const double jc = std::round(azimuth / (2.0 * pi) * static_cast<double>(nv));
  const double sigma_i = std::max(2.0, static_cast<double>(nu) / 10.0);
  const double sigma_j = std::max(1.0, static_cast<double>(nv) / 32.0);
  auto& verts = out.mutable_vertices();
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      Point3& p = verts[mesh.index(i, j)];
      if (!(dot(p, dir) > 0.0)) continue;
      double dj = std::fmod(static_cast<double>(j) - jc, static_cast<double>(nv));
      if (dj > 0.5 * nv) dj -= nv;
      if (dj < -0.5 * nv) dj += nv;
      const double di = static_cast<double>(i) - ic;
      const double w = std::exp(-0.5 * (di * di / (sigma_i * sigma_i) + dj * dj / (sigma_j * sigma_j)));
      p += dir * (spec.amplitude * w);
    }
  return out;
}

/// UV sphere: rows run pole to pole (n_rows >= 3), columns wrap in azimuth.
/// The grid normal points outward.
inline SurfaceMesh sphere_mesh(const Point3& centre, double radius, std::size_t n_rows, std::size_t n_cols) {
  if (n_rows < 3 || n_cols < 3) throw GridTooSmallError("sphere mesh needs at least 3x3 nodes");
  std::vector<Point3> v;
  v.reserve(n_rows * n_cols);
  for (std::size_t i = 0; i < n_rows; ++i) {
    const double phi = pi * static_cast<double>(i) / static_cast<double>(n_rows - 1);
    for (std::size_t j = 0; j < n_cols; ++j) {
      const double th = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n_cols);
      v.push_back(centre + Point3{radius * std::sin(phi) * std::cos(th),
                                  radius * std::sin(phi) * std::sin(th), radius * std::cos(phi)});
    }
  }
  return SurfaceMesh(std::move(v), n_rows, n_cols, true);
}

/// Horizontal square grid [-half, half]^2 at height z.
inline SurfaceMesh flat_mesh(double half, double z, std::size_t n) {
  return graph_mesh(GridField::sample([z](double, double) { return z; }, -half, half, n, -half, half, n));
}

/// A single point as a 1 x 1 mesh.
inline SurfaceMesh point_mesh(const Point3& p) { return SurfaceMesh({p}, 1, 1, false); }

}  // namespace soliton

#endif  // SOLITON_FIXTURES_HPP
