#include "solmin/mesh_export.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace solmin {
namespace {

/// Shortest round-trippable decimal; printf so the bytes are locale-free.
void append_triple(std::string& s, const char* tag, double a, double b,
                   double c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %.17g %.17g %.17g\n", tag, a, b, c);
  s += buf;
}

}  // namespace

Mesh sample_surface_mesh(const SurfaceEvaluator& surface,
                         const NormalEvaluator& normal,
                         const DomainBounds& bounds, int nu, int nv) {
  if (nu < 2 || nv < 2)
    throw std::invalid_argument(
        "sample_surface_mesh: sample counts must be >= 2");
  if (!(bounds.u_max > bounds.u_min) || !(bounds.v_max > bounds.v_min))
    throw std::invalid_argument("sample_surface_mesh: empty domain");

  Mesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(nu) * nv);
  if (normal) mesh.normals.reserve(static_cast<std::size_t>(nu) * nv);
  for (int iu = 0; iu < nu; ++iu) {
    const double u =
        bounds.u_min + (bounds.u_max - bounds.u_min) * iu / (nu - 1);
    for (int iv = 0; iv < nv; ++iv) {
      const double v =
          bounds.v_min + (bounds.v_max - bounds.v_min) * iv / (nv - 1);
      mesh.vertices.push_back(surface(u, v));
      if (normal) {
        const FrameVector n = normal(u, v);
        mesh.normals.push_back({n.f1, n.f2, n.f3});
      }
    }
  }
  mesh.quads.reserve(static_cast<std::size_t>(nu - 1) * (nv - 1));
  for (int iu = 0; iu + 1 < nu; ++iu)
    for (int iv = 0; iv + 1 < nv; ++iv) {
      const int a = iu * nv + iv;
      mesh.quads.push_back({a, a + nv, a + nv + 1, a + 1});
    }
  return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& out) {
  std::string text;
  text.reserve(64 * mesh.vertices.size());
  for (const Sol3Point& p : mesh.vertices)
    append_triple(text, "v", p.x1, p.x2, p.x3);
  for (const auto& n : mesh.normals)
    append_triple(text, "vn", n[0], n[1], n[2]);
  const bool with_normals = !mesh.normals.empty();
  char buf[160];
  for (const auto& q : mesh.quads) {
    if (with_normals)
      std::snprintf(buf, sizeof buf, "f %d//%d %d//%d %d//%d %d//%d\n",
                    q[0] + 1, q[0] + 1, q[1] + 1, q[1] + 1, q[2] + 1,
                    q[2] + 1, q[3] + 1, q[3] + 1);
    else
      std::snprintf(buf, sizeof buf, "f %d %d %d %d\n", q[0] + 1, q[1] + 1,
                    q[2] + 1, q[3] + 1);
    text += buf;
  }
  out << text;
}

void write_section_csv(const std::vector<double>& t,
                       const std::vector<double>& c1,
                       const std::vector<double>& c2, std::ostream& out) {
  if (t.size() != c1.size() || t.size() != c2.size())
    throw std::invalid_argument("write_section_csv: ragged columns");
  std::string text = "t,c1,c2\n";
  char buf[96];
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t[i], c1[i],
                  c2[i]);
    text += buf;
  }
  out << text;
}

void write_section_csv(const SectionCurve& curve, std::ostream& out) {
  write_section_csv(curve.t, curve.c1, curve.c2, out);
}

}  // namespace solmin
