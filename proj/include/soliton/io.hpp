#ifndef SOLITON_IO_HPP
#define SOLITON_IO_HPP

// Plain-text file formats.
//   Profile: CSV with header "r,u,branch".
//   Mesh:    OBJ subset. First line "# grid nu nv" (mandatory), optional
//            "# periodic" line, then "v x y z" lines in grid row-major order
//            and "f" quad lines (1-based).

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "soliton/errors.hpp"
#include "soliton/families.hpp"
#include "soliton/mesh.hpp"

namespace soliton {

/// Decimal text with 17 significant digits (round-trips every double).
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline double parse_real(const std::string& tok, const std::string& what) {
  char* end = nullptr;
  const double v = tok.empty() ? 0.0 : std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size() || std::isspace(static_cast<unsigned char>(tok.front())))
    throw IoError("cannot parse " + what + " from '" + tok + "'");
  return v;
}

inline Branch parse_branch(const std::string& s) {
  if (s == "upper") return Branch::upper;
  if (s == "lower") return Branch::lower;
  if (s == "single") return Branch::single;
  throw IoError("unknown branch tag '" + s + "'");
}

}  // namespace detail

inline void write_profiles(std::ostream& os, std::span<const ProfileCurve> profiles) {
  os << "r,u,branch\n";
  for (const auto& p : profiles)
    for (const auto& s : p.samples)
      os << format_real(s.r) << ',' << format_real(s.u) << ',' << to_string(p.branch) << '\n';
}

inline void write_profile(std::ostream& os, const ProfileCurve& p) {
  write_profiles(os, std::span<const ProfileCurve>(&p, 1));
}

/// Reads every branch in file order; consecutive rows with the same tag form one curve.
inline std::vector<ProfileCurve> read_profiles(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("empty profile file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "r,u,branch") throw IoError("profile header must be 'r,u,branch'");
  std::vector<ProfileCurve> out;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string r, u, b;
    if (!std::getline(ss, r, ',') || !std::getline(ss, u, ',') || !std::getline(ss, b))
      throw IoError("malformed profile line '" + line + "'");
    const Branch branch = detail::parse_branch(b);
    if (out.empty() || out.back().branch != branch) out.push_back({{}, branch});
    out.back().samples.push_back({detail::parse_real(r, "r"), detail::parse_real(u, "u")});
  }
  for (const auto& p : out) p.validate();
  return out;
}

inline void write_mesh(std::ostream& os, const SurfaceMesh& m) {
  os << "# grid " << m.nu() << ' ' << m.nv() << '\n';
  if (m.periodic_v()) os << "# periodic\n";
  for (const auto& p : m.vertices())
    os << "v " << format_real(p.x) << ' ' << format_real(p.y) << ' ' << format_real(p.z) << '\n';
  for (const auto& q : m.quads())
    os << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
}

/// Faces are not read back: connectivity is implied by the grid header.
inline SurfaceMesh read_mesh(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("empty mesh file");
  std::size_t nu = 0, nv = 0;
  {
    std::stringstream ss(line);
    std::string hash, grid;
    if (!(ss >> hash >> grid >> nu >> nv) || hash != "#" || grid != "grid")
      throw IoError("mesh file must start with '# grid nu nv'");
  }
  bool periodic = false;
  std::vector<Point3> v;
  v.reserve(nu * nv);
  while (std::getline(is, line)) {
    std::stringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "#") {
      std::string word;
      if (ss >> word && word == "periodic") periodic = true;
    } else if (tag == "v") {
      std::string x, y, z;
      if (!(ss >> x >> y >> z)) throw IoError("malformed vertex line '" + line + "'");
      v.push_back({detail::parse_real(x, "x"), detail::parse_real(y, "y"), detail::parse_real(z, "z")});
    } else if (tag != "f") {
      throw IoError("unsupported OBJ record '" + tag + "'");
    }
  }
  if (v.size() != nu * nv) throw IoError("vertex count does not match '# grid' header");
  try {
    return SurfaceMesh(std::move(v), nu, nv, periodic);
  } catch (const DomainError& e) {
    throw IoError(e.what());
  }
}

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  writer(os);
  if (!os) throw IoError("failed writing '" + path + "'");
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  return is;
}

inline SurfaceMesh read_mesh_file(const std::string& path) {
  auto is = open_input(path);
  return read_mesh(is);
}

inline std::vector<ProfileCurve> read_profile_file(const std::string& path) {
  auto is = open_input(path);
  return read_profiles(is);
}

}  // namespace soliton

#endif  // SOLITON_IO_HPP
