#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "solmin/catenoid.hpp"
#include "solmin/sol3.hpp"
#include "solmin/verify.hpp"

namespace solmin {

/// Quad mesh in global Sol3 coordinates.  Vertices are stored row-major in
/// (u, v): vertex (iu, iv) sits at index iu * nv + iv, so downstream diffs
/// are stable.  Normals (frame components) are optional; when present there
/// is one per vertex.
struct Mesh {
  std::vector<Sol3Point> vertices;
  std::vector<std::array<double, 3>> normals;
  std::vector<std::array<int, 4>> quads;  // 0-based corner indices
};

struct DomainBounds {
  double u_min = 0.0, u_max = 1.0;
  double v_min = 0.0, v_max = 1.0;
};

enum class SurfaceKind { Helicoid, Catenoid, GraphS, PlaneLimit };

/// Everything one CLI run needs; flags (or a config file) populate it.
struct RunConfig {
  SurfaceKind kind = SurfaceKind::Helicoid;
  double K = 0.0;
  double alpha = 0.0;
  DomainBounds bounds;
  bool bounds_given[4] = {false, false, false, false};
  int nu = 64, nv = 64;
  double level = 0.0;
  double tol_scale = 1.0;
  std::string out;
  std::string report;
};

using NormalEvaluator = std::function<FrameVector(double, double)>;

/// Uniform closed-rectangle sampling: nu x nv vertices, (nu-1)(nv-1) quads,
/// both endpoints included in each direction.  `normal` may be empty.
/// Requires nu, nv >= 2 and nondegenerate bounds.
Mesh sample_surface_mesh(const SurfaceEvaluator& surface,
                         const NormalEvaluator& normal,
                         const DomainBounds& bounds, int nu, int nv);

/// OBJ-style text: v/vn/f lines, 17 significant digits, LF endings,
/// 1-based face indices ("f a//a b//b ..." when normals are present).
/// Deterministic: identical meshes serialize to identical bytes.
void write_obj(const Mesh& mesh, std::ostream& out);

/// CSV with header "t,c1,c2", 17 significant digits, LF endings.
void write_section_csv(const std::vector<double>& t,
                       const std::vector<double>& c1,
                       const std::vector<double>& c2, std::ostream& out);
void write_section_csv(const SectionCurve& curve, std::ostream& out);

}  // namespace solmin
