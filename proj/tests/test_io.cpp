#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "soliton/families.hpp"
#include "soliton/fixtures.hpp"
#include "soliton/io.hpp"

using namespace soliton;

TEST(FormatReal, RoundTrips) {
  for (const double v : {0.0, -0.0, 1.0 / 3.0, pi, 1e-300, -2.5e307, 0.1, 4.9e-324}) {
    EXPECT_EQ(std::strtod(format_real(v).c_str(), nullptr), v);
  }
}

TEST(MeshFile, RoundTripIsBitIdentical) {
  for (const auto& m : {graph_mesh(grim_reaper_field(1.5, 0.0, 1.0, 0.05)), revolve(bowl_profile(2.0, 0.05), 24),
                        add_seeded_bump(bowl_cap_mesh(3.0, 0.05, 32), {0.1, {1.0, 0.0, 0.0}, 11})}) {
    std::stringstream ss;
    write_mesh(ss, m);
    const auto back = read_mesh(ss);
    EXPECT_EQ(back.nu(), m.nu());
    EXPECT_EQ(back.nv(), m.nv());
    EXPECT_EQ(back.periodic_v(), m.periodic_v());
    ASSERT_EQ(back.size(), m.size());
    for (std::size_t k = 0; k < m.size(); ++k) EXPECT_EQ(back[k], m[k]);
  }
}

TEST(MeshFile, SubnormalCoordinatesSurvive) {
  const SurfaceMesh m({{4.9e-324, -1e-310, 0.0}}, 1, 1, false);
  std::stringstream ss;
  write_mesh(ss, m);
  EXPECT_EQ(read_mesh(ss)[0], m[0]);
}

TEST(MeshFile, Layout) {
  std::stringstream ss;
  write_mesh(ss, flat_mesh(1.0, 0.0, 2));
  EXPECT_EQ(ss.str(), "# grid 2 2\nv -1 -1 0\nv -1 1 0\nv 1 -1 0\nv 1 1 0\nf 1 3 4 2\n");
}

TEST(MeshFile, Errors) {
  std::stringstream no_header("v 0 0 0\n");
  EXPECT_THROW(read_mesh(no_header), IoError);
  std::stringstream short_file("# grid 2 2\nv 0 0 0\n");
  EXPECT_THROW(read_mesh(short_file), IoError);
  std::stringstream bad_number("# grid 1 1\nv 0 zero 0\n");
  EXPECT_THROW(read_mesh(bad_number), IoError);
  std::stringstream empty("");
  EXPECT_THROW(read_mesh(empty), IoError);
  EXPECT_THROW(read_mesh_file("/nonexistent/dir/mesh.obj"), IoError);
}

TEST(ProfileFile, RoundTripBothWingBranches) {
  const auto w = wing_profile(1.0, 2.0, 0.05);
  std::stringstream ss;
  write_profiles(ss, std::vector<ProfileCurve>{w.upper, w.lower});
  const auto back = read_profiles(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].branch, Branch::upper);
  EXPECT_EQ(back[1].branch, Branch::lower);
  EXPECT_EQ(back[0].samples, w.upper.samples);
  EXPECT_EQ(back[1].samples, w.lower.samples);
}

TEST(ProfileFile, Errors) {
  std::stringstream bad_header("radius,height\n");
  EXPECT_THROW(read_profiles(bad_header), IoError);
  std::stringstream bad_tag("r,u,branch\n0,0,middle\n");
  EXPECT_THROW(read_profiles(bad_tag), IoError);
  std::stringstream decreasing("r,u,branch\n1,0,single\n0.5,0,single\n");
  EXPECT_THROW(read_profiles(decreasing), DomainError);
}
