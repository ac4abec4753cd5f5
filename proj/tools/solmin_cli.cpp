#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "solmin/catenoid.hpp"
#include "solmin/helicoid.hpp"
#include "solmin/limit_surfaces.hpp"
#include "solmin/mesh_export.hpp"
#include "solmin/suites.hpp"

namespace {

using namespace solmin;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

int fail(const std::string& message) {
  std::fprintf(stderr, "%s\n", message.c_str());
  return 1;
}

/// Empty string when the parameter needed by `kind` is present and legal.
std::string parameter_error(SurfaceKind kind, double K, double alpha) {
  if (kind == SurfaceKind::Helicoid) {
    if (std::isnan(K)) return "kind helicoid requires --K";
    if (K == 0.0 || !(std::abs(K) < 1.0))
      return "K must lie in (-1,1), K != 0";
  }
  if (kind == SurfaceKind::Catenoid) {
    if (std::isnan(alpha)) return "kind catenoid requires --alpha";
    if (alpha == 0.0 || !(std::abs(alpha) < 1.0))
      return "alpha must lie in (-1,1), alpha != 0";
  }
  return {};
}

bool write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return bool(out);
}

int emit_report(const VerificationReport& report, const std::string& path,
                const char* label) {
  if (path.empty()) {
    std::fputs(report.to_text().c_str(), stdout);
  } else if (!write_text_file(path, report.to_text())) {
    return fail("cannot write report file " + path);
  }
  std::printf("%s: %zu checks, %zu failures\n", label,
              report.checks().size(), report.failure_count());
  return report.all_pass() ? 0 : 2;
}

int cmd_surface(const RunConfig& cfg) {
  DomainBounds b = cfg.bounds;
  const auto defaults = [&b](double u0, double u1, double v0, double v1,
                             const bool given[4]) {
    if (!given[0]) b.u_min = u0;
    if (!given[1]) b.u_max = u1;
    if (!given[2]) b.v_min = v0;
    if (!given[3]) b.v_max = v1;
  };

  Mesh mesh;
  switch (cfg.kind) {
    case SurfaceKind::Helicoid: {
      const double W = period_W_integral(cfg.K);
      defaults(-2.0, 2.0, -2.0 * W, 2.0 * W, cfg.bounds_given);
      const double reach =
          std::max(4.0 * W, std::max(std::abs(b.v_min), std::abs(b.v_max)) +
                                0.5);
      const HelicoidModel m = HelicoidModel::build(cfg.K, reach);
      mesh = sample_surface_mesh(
          [&m](double u, double v) { return m.immerse(u, v); },
          [&m](double u, double v) { return m.normal(u, v); }, b, cfg.nu,
          cfg.nv);
      break;
    }
    case SurfaceKind::Catenoid: {
      const double V = period_V_integral(cfg.alpha);
      defaults(-2.0, 2.0, 0.0, 2.0 * V, cfg.bounds_given);
      const double reach =
          std::max(4.0 * V, std::max(std::abs(b.v_min), std::abs(b.v_max)) +
                                0.5);
      const CatenoidModel m = CatenoidModel::build(cfg.alpha, reach);
      mesh = sample_surface_mesh(
          [&m](double u, double v) { return m.immerse(u, v); },
          [&m](double u, double v) { return m.normal(u, v); }, b, cfg.nu,
          cfg.nv);
      break;
    }
    case SurfaceKind::GraphS: {
      defaults(-2.0, 2.0, -2.0, 2.0, cfg.bounds_given);
      mesh = sample_surface_mesh(graph_s::immerse, graph_s::normal, b,
                                 cfg.nu, cfg.nv);
      break;
    }
    case SurfaceKind::PlaneLimit: {
      defaults(-1.0, 1.0, 0.0, 2.0 * std::numbers::pi, cfg.bounds_given);
      mesh = sample_surface_mesh(
          plane_limit_immersion,
          [](double u, double v) {
            return FrameVector{plane_limit_immersion(u, v), 0.0, 0.0, 1.0};
          },
          b, cfg.nu, cfg.nv);
      break;
    }
  }

  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) return fail("cannot write mesh file " + cfg.out);
  write_obj(mesh, out);
  return out ? 0 : fail("cannot write mesh file " + cfg.out);
}

int cmd_section(const RunConfig& cfg) {
  if (cfg.kind == SurfaceKind::Catenoid) {
    const CatenoidModel m = CatenoidModel::build(cfg.alpha);
    const SectionCurve curve = m.section(cfg.level, cfg.nv);
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) return fail("cannot write section file " + cfg.out);
    write_section_csv(curve, out);
    if (!out) return fail("cannot write section file " + cfg.out);

    VerificationReport cert = convexity_certificate(curve);
    cert.scale_tolerances(cfg.tol_scale);
    cert.sort_checks();
    return emit_report(cert, cfg.report, "section certificate");
  }
  if (cfg.kind == SurfaceKind::GraphS) {
    std::vector<double> t(cfg.nv), c1(cfg.nv), c2(cfg.nv);
    for (int i = 0; i < cfg.nv; ++i) {
      t[i] = -5.0 + 10.0 * i / (cfg.nv - 1);
      const auto c = graph_s::section_point(cfg.level, t[i]);
      c1[i] = c[0];
      c2[i] = c[1];
    }
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) return fail("cannot write section file " + cfg.out);
    write_section_csv(t, c1, c2, out);
    return out ? 0 : fail("cannot write section file " + cfg.out);
  }
  return fail("section requires --kind catenoid or graph-S");
}

int cmd_verify(const RunConfig& cfg) {
  VerificationReport report;
  const char* label = "";
  switch (cfg.kind) {
    case SurfaceKind::Helicoid:
      report = verify_helicoid(cfg.K, cfg.tol_scale);
      label = "verify helicoid";
      break;
    case SurfaceKind::Catenoid:
      report = verify_catenoid(cfg.alpha, cfg.tol_scale);
      label = "verify catenoid";
      break;
    case SurfaceKind::GraphS:
      report = verify_graph_surface(cfg.tol_scale);
      label = "verify graph-S";
      break;
    case SurfaceKind::PlaneLimit:
      report = verify_plane_limit(cfg.tol_scale);
      label = "verify plane-limit";
      break;
  }
  return emit_report(report, cfg.report, label);
}

int cmd_period(double K) {
  const double W = period_W_integral(K);
  const double h = height_at_W_integral(K);
  std::printf("W = %.12g\nx3(W) = %.12g\nT = %.12g\n", W, h, 2.0 * h);
  return 0;
}

int cmd_invert_period(double T) {
  if (!(T > 0.0)) return fail("T must be positive");
  std::printf("K = %.12g\n", invert_period(T));
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Minimal surfaces in the Sol3 geometry: helicoids, catenoids, their "
      "limits; mesh and section export; verification suites."};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "INI config file; command-line flags take precedence");

  const std::map<std::string, SurfaceKind> kind_names{
      {"helicoid", SurfaceKind::Helicoid},
      {"catenoid", SurfaceKind::Catenoid},
      {"graph-S", SurfaceKind::GraphS},
      {"plane-limit", SurfaceKind::PlaneLimit}};

  RunConfig cfg;
  cfg.K = kUnset;
  cfg.alpha = kUnset;
  cfg.bounds = {kUnset, kUnset, kUnset, kUnset};
  double T = kUnset;

  const auto add_kind = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--kind", cfg.kind, "surface family")
                    ->transform(CLI::CheckedTransformer(kind_names));
    if (required) opt->required();
  };
  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--K", cfg.K, "helicoid parameter, in (-1,1), nonzero");
    sub->add_option("--alpha", cfg.alpha,
                    "catenoid parameter, in (-1,1), nonzero");
  };

  CLI::App* surface =
      app.add_subcommand("surface", "sample a surface patch to an OBJ mesh");
  add_kind(surface, true);
  add_params(surface);
  surface->add_option("--u-min", cfg.bounds.u_min, "patch bound");
  surface->add_option("--u-max", cfg.bounds.u_max, "patch bound");
  surface->add_option("--v-min", cfg.bounds.v_min, "patch bound");
  surface->add_option("--v-max", cfg.bounds.v_max, "patch bound");
  surface->add_option("--nu", cfg.nu, "samples in u (>= 2)");
  surface->add_option("--nv", cfg.nv, "samples in v (>= 2)");
  surface->add_option("--out", cfg.out, "output OBJ path")->required();

  CLI::App* section = app.add_subcommand(
      "section", "export one horizontal section {x3 = level} as CSV");
  add_kind(section, false);
  cfg.kind = SurfaceKind::Catenoid;
  add_params(section);
  section->add_option("--level", cfg.level, "plane height x3");
  section->add_option("--nv", cfg.nv, "curve samples");
  section->add_option("--tol-scale", cfg.tol_scale,
                      "certificate tolerance multiplier");
  section->add_option("--out", cfg.out, "output CSV path")->required();
  section->add_option("--report", cfg.report, "certificate report path");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full verification suite for one surface");
  add_kind(verify, true);
  add_params(verify);
  verify->add_option("--tol-scale", cfg.tol_scale,
                     "tolerance multiplier (negative controls)");
  verify->add_option("--report", cfg.report, "report path (default stdout)");

  CLI::App* period = app.add_subcommand(
      "period", "print W, x3(W) and the screw period T for a helicoid");
  period->add_option("--K", cfg.K, "helicoid parameter")->required();

  CLI::App* invert = app.add_subcommand(
      "invert-period", "find the K in (0,1) whose screw period equals T");
  invert->add_option("--T", T, "target screw period, > 0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cfg.bounds_given[0] = !std::isnan(cfg.bounds.u_min);
  cfg.bounds_given[1] = !std::isnan(cfg.bounds.u_max);
  cfg.bounds_given[2] = !std::isnan(cfg.bounds.v_min);
  cfg.bounds_given[3] = !std::isnan(cfg.bounds.v_max);

  try {
    if (*period) {
      const std::string err =
          parameter_error(SurfaceKind::Helicoid, cfg.K, cfg.alpha);
      return err.empty() ? cmd_period(cfg.K) : fail(err);
    }
    if (*invert) return cmd_invert_period(T);

    const std::string err = parameter_error(cfg.kind, cfg.K, cfg.alpha);
    if (!err.empty()) return fail(err);
    if (cfg.nu < 2 || cfg.nv < 2)
      return fail("sample counts must be >= 2");

    if (*surface) return cmd_surface(cfg);
    if (*section) return cmd_section(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("no subcommand given");
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
