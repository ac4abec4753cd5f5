#include "solmin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "solmin/helicoid.hpp"

namespace solmin {
namespace {

void require_finite(const Sol3Point& p) {
  if (!std::isfinite(p.x1) || !std::isfinite(p.x2) || !std::isfinite(p.x3))
    throw std::runtime_error("fd_jet: non-finite surface evaluation");
}

void require_step(double h, const char* who) {
  if (!(h >= 1e-6 && h <= 1e-3))
    throw std::invalid_argument(std::string(who) +
                                ": h must lie in [1e-6, 1e-3]");
}

std::string point_location(double u, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "z=(%.6g, %.6g)", u, v);
  return buf;
}

}  // namespace

ImmersionJet fd_jet(const SurfaceEvaluator& surface, double u, double v,
                    double h) {
  require_step(h, "fd_jet");
  const Sol3Point c = surface(u, v);
  const Sol3Point pu = surface(u + h, v), mu = surface(u - h, v);
  const Sol3Point pv = surface(u, v + h), mv = surface(u, v - h);
  const Sol3Point pp = surface(u + h, v + h), pm = surface(u + h, v - h);
  const Sol3Point mp = surface(u - h, v + h), mm = surface(u - h, v - h);
  for (const Sol3Point* p : {&c, &pu, &mu, &pv, &mv, &pp, &pm, &mp, &mm})
    require_finite(*p);

  const auto first = [&](const Sol3Point& plus, const Sol3Point& minus) {
    return coord_to_frame(
        c, CoordVector{c, (plus.x1 - minus.x1) / (2.0 * h),
                       (plus.x2 - minus.x2) / (2.0 * h),
                       (plus.x3 - minus.x3) / (2.0 * h)});
  };
  const auto second = [&](const Sol3Point& plus, const Sol3Point& minus) {
    const double h2 = h * h;
    return coord_to_frame(
        c, CoordVector{c, (plus.x1 - 2.0 * c.x1 + minus.x1) / h2,
                       (plus.x2 - 2.0 * c.x2 + minus.x2) / h2,
                       (plus.x3 - 2.0 * c.x3 + minus.x3) / h2});
  };

  ImmersionJet jet;
  jet.u = u;
  jet.v = v;
  jet.position = c;
  jet.x_u = first(pu, mu);
  jet.x_v = first(pv, mv);
  const FrameVector n = cross(jet.x_u, jet.x_v);
  const double n_norm = norm(n);
  if (!(n_norm > 0.0))
    throw std::runtime_error("fd_jet: degenerate tangent plane");
  jet.normal = scaled(n, 1.0 / n_norm);
  jet.lambda = 0.5 * (dot(jet.x_u, jet.x_u) + dot(jet.x_v, jet.x_v));
  jet.has_second = true;
  jet.x_uu = second(pu, mu);
  jet.x_vv = second(pv, mv);
  const double q = 4.0 * h * h;
  jet.x_uv = coord_to_frame(
      c, CoordVector{c, (pp.x1 - pm.x1 - mp.x1 + mm.x1) / q,
                     (pp.x2 - pm.x2 - mp.x2 + mm.x2) / q,
                     (pp.x3 - pm.x3 - mp.x3 + mm.x3) / q});
  return jet;
}

double conformality_residual(const ImmersionJet& jet) {
  const double uu = dot(jet.x_u, jet.x_u);
  const double vv = dot(jet.x_v, jet.x_v);
  const double uv = dot(jet.x_u, jet.x_v);
  return std::max({std::abs(uv), std::abs(uu - jet.lambda),
                   std::abs(vv - jet.lambda)});
}

double mean_curvature(const SurfaceEvaluator& surface, double u, double v,
                      double h) {
  const ImmersionJet jet = fd_jet(surface, u, v, h);
  if (conformality_residual(jet) > 1e-4 * jet.lambda)
    throw std::invalid_argument(
        "mean_curvature: parametrization is not conformal at the sample");
  const auto [duu, dvv] = covariant_second_derivatives(jet);
  return (dot(duu, jet.normal) + dot(dvv, jet.normal)) / (2.0 * jet.lambda);
}

double intrinsic_gauss_curvature(const ScalarField& lambda_field, double u,
                                 double v, double h) {
  require_step(h, "intrinsic_gauss_curvature");
  const double l0 = lambda_field(u, v);
  const double lu = lambda_field(u + h, v), ld = lambda_field(u - h, v);
  const double lr = lambda_field(u, v + h), ll = lambda_field(u, v - h);
  for (double l : {l0, lu, ld, lr, ll})
    if (!(l > 0.0))
      throw std::domain_error(
          "intrinsic_gauss_curvature: lambda must be positive");
  const double laplacian = (std::log(lu) + std::log(ld) + std::log(lr) +
                            std::log(ll) - 4.0 * std::log(l0)) /
                           (h * h);
  return -laplacian / (2.0 * l0);
}

CurvatureSample curvature_sample(const SurfaceEvaluator& surface,
                                 const ScalarField& lambda_field, double u,
                                 double v, double h,
                                 const ScalarField& reference) {
  const ImmersionJet jet = fd_jet(surface, u, v, h);
  const auto [duu, dvv] = covariant_second_derivatives(jet);
  const FrameVector duv =
      added(jet.x_uv, second_derivative_correction(jet.x_u, jet.x_v));
  CurvatureSample s;
  s.ii_uu = dot(duu, jet.normal);
  s.ii_vv = dot(dvv, jet.normal);
  s.ii_uv = dot(duv, jet.normal);
  s.H = (s.ii_uu + s.ii_vv) / (2.0 * jet.lambda);
  s.gauss_intrinsic = intrinsic_gauss_curvature(lambda_field, u, v, h);
  s.gauss_closed_form = reference
                            ? reference(u, v)
                            : std::numeric_limits<double>::quiet_NaN();
  s.area_density = lambda_field(u, v);
  return s;
}

VerificationReport shape_operator_check(const HelicoidModel& m, double u,
                                        double v, double h) {
  require_step(h, "shape_operator_check");
  const ImmersionJet jet = m.jet(u, v);
  const double lambda = jet.lambda;

  // Plain parameter derivative of the normal's frame components, rebased to
  // the center so the connection correction applies there.
  const auto normal_rate = [&](bool along_u) {
    const FrameVector np = along_u ? m.normal(u + h, v) : m.normal(u, v + h);
    const FrameVector nm = along_u ? m.normal(u - h, v) : m.normal(u, v - h);
    return FrameVector{jet.position, (np.f1 - nm.f1) / (2.0 * h),
                       (np.f2 - nm.f2) / (2.0 * h),
                       (np.f3 - nm.f3) / (2.0 * h)};
  };
  const FrameVector du_n =
      covariant_derivative_along(jet.x_u, normal_rate(true), jet.normal);
  const FrameVector dv_n =
      covariant_derivative_along(jet.x_v, normal_rate(false), jet.normal);

  const double a11 = dot(du_n, jet.x_u) / lambda;
  const double a12 = dot(du_n, jet.x_v) / lambda;
  const double a21 = dot(dv_n, jet.x_u) / lambda;
  const double a22 = dot(dv_n, jet.x_v) / lambda;

  const double K = m.parameter();
  const double b = m.b().value(v);
  const double bp = std::sqrt(1.0 - K * std::cos(2.0 * b));
  const double s2 = std::sin(2.0 * b), c2 = std::cos(2.0 * b);
  const double ch2 = std::cosh(u) * std::cosh(u);
  const double diag = -s2 * std::tanh(u);
  const double off = (1.0 + bp) / (K * ch2) - c2;

  const std::string at = point_location(u, v);
  VerificationReport report;
  report.add("shape operator coefficient (u,u)", std::abs(a11 - diag), 1e-4,
             at);
  report.add("shape operator coefficient (u,v)", std::abs(a12 - off), 1e-4,
             at);
  report.add("shape operator coefficient (v,u)", std::abs(a21 - off), 1e-4,
             at);
  report.add("shape operator coefficient (v,v)", std::abs(a22 + diag), 1e-4,
             at);
  report.add("shape operator trace", std::abs(a11 + a22), 1e-4, at);
  return report;
}

}  // namespace solmin
