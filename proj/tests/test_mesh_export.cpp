#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "solmin/mesh_export.hpp"
#include "test_helpers.hpp"

using namespace solmin;
using solmin::testing::catenoid06_minus;
using solmin::testing::point_diff;

namespace {

Sol3Point flat(double u, double v) { return {u, v, 0.0}; }

Mesh flat_mesh(int nu, int nv) {
  return sample_surface_mesh(flat, {}, {0.0, 1.0, 0.0, 2.0}, nu, nv);
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::size_t n = 0, pos = 0;
  while ((pos = text.find(prefix, pos)) != std::string::npos) {
    if (pos == 0 || text[pos - 1] == '\n') ++n;
    pos += prefix.size();
  }
  return n;
}

}  // namespace

TEST_CASE("uniform sampling layout") {
  const Mesh mesh = flat_mesh(3, 4);
  CHECK(mesh.vertices.size() == 12);
  CHECK(mesh.quads.size() == 6);
  CHECK(mesh.normals.empty());
  // Row-major in (u, v): vertex (iu, iv) sits at iu * nv + iv.
  CHECK(point_diff(mesh.vertices[0], {0.0, 0.0, 0.0}) == 0.0);
  CHECK(point_diff(mesh.vertices[3], {0.0, 2.0, 0.0}) == 0.0);
  CHECK(point_diff(mesh.vertices[4], {0.5, 0.0, 0.0}) == 0.0);
  CHECK(point_diff(mesh.vertices[11], {1.0, 2.0, 0.0}) == 0.0);
  // 64 x 64 default-resolution patch.
  CHECK(flat_mesh(64, 64).vertices.size() == 4096);
  CHECK(flat_mesh(64, 64).quads.size() == 63 * 63);
}

TEST_CASE("sampling argument validation") {
  CHECK_THROWS_AS(flat_mesh(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(
      sample_surface_mesh(flat, {}, {0.0, 0.0, 0.0, 2.0}, 4, 4),
      std::invalid_argument);
}

TEST_CASE("OBJ serialization is deterministic and complete") {
  const NormalEvaluator normal = [](double, double) {
    FrameVector n;
    n.f3 = 1.0;
    return n;
  };
  const Mesh mesh =
      sample_surface_mesh(flat, normal, {0.0, 1.0, 0.0, 2.0}, 3, 3);
  std::ostringstream a, b;
  write_obj(mesh, a);
  write_obj(mesh, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find('\r') == std::string::npos);
  CHECK(count_lines(a.str(), "v ") == 9);
  CHECK(count_lines(a.str(), "vn ") == 9);
  CHECK(count_lines(a.str(), "f ") == 4);
  // Faces are 1-based and carry normal indices.
  CHECK(a.str().find("f 1//1 ") != std::string::npos);
}

TEST_CASE("section CSV serialization") {
  std::ostringstream out;
  write_section_csv({0.0, 1.0}, {2.0, 3.0}, {4.0, 5.0}, out);
  const std::string text = out.str();
  CHECK(text.rfind("t,c1,c2\n", 0) == 0);
  CHECK(count_lines(text, "0,") == 1);
  CHECK(text.find('\r') == std::string::npos);
  CHECK_THROWS_AS(write_section_csv({0.0}, {1.0, 2.0}, {3.0}, out),
                  std::invalid_argument);

  std::ostringstream from_curve;
  write_section_csv(catenoid06_minus().section(0.0, 8), from_curve);
  CHECK(count_lines(from_curve.str(), "0,") == 1);
}

TEST_CASE("catenoid patch closes over a full period") {
  const CatenoidModel& m = catenoid06_minus();
  const double V = m.period_V();
  const Mesh mesh = sample_surface_mesh(
      [&](double u, double v) { return m.immerse(u, v); },
      [&](double u, double v) { return m.normal(u, v); },
      {-1.0, 1.0, 0.0, 2.0 * V}, 5, 9);
  CHECK(mesh.normals.size() == mesh.vertices.size());
  // v = 0 and v = 2V columns coincide vertex-wise.
  double worst = 0.0;
  for (int iu = 0; iu < 5; ++iu)
    worst = std::max(worst, point_diff(mesh.vertices[iu * 9],
                                       mesh.vertices[iu * 9 + 8]));
  CHECK(worst <= 1e-8);
}
