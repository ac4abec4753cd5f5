#include "solmin/catenoid.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace solmin {
namespace {

std::string point_location(double u, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "z=(%.6g, %.6g)", u, v);
  return buf;
}

std::string section_location(double level, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "level=%.6g t=%.6g", level, t);
  return buf;
}

double max_abs_diff(const Sol3Point& a, const Sol3Point& b) {
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2),
                   std::abs(a.x3 - b.x3)});
}

}  // namespace

CatenoidModel::CatenoidModel(double alpha, CatenoidOdes odes)
    : alpha_(alpha), odes_(std::move(odes)) {}

CatenoidModel CatenoidModel::build(double alpha, double v_max, double step) {
  if (alpha == 0.0)
    throw std::invalid_argument("CatenoidModel: alpha must be nonzero");
  return CatenoidModel(alpha, solve_catenoid_odes(alpha, v_max, step));
}

CatenoidModel::Profile CatenoidModel::profile(double v) const {
  Profile p;
  p.rho = odes_.rho.value(v);
  p.gamma = odes_.gamma.value(v);
  p.F = odes_.F.value(v);
  const double s2 = std::sin(2.0 * p.rho), c2 = std::cos(2.0 * p.rho);
  const double a = alpha_;
  p.rp = std::sqrt(1.0 - a * a * s2 * s2);
  p.gp = -a * s2;
  p.Fp = a * a * s2 / (1.0 + p.rp);
  p.Fpp = 2.0 * a * a * c2 / (1.0 + p.rp);
  return p;
}

Sol3Point CatenoidModel::immerse(double u, double v) const {
  const Profile p = profile(v);
  const double a = alpha_;
  const double x3 = a * u + p.F;
  const double cr = std::cos(p.rho), sr = std::sin(p.rho);
  const double ew = std::exp(u + p.gamma), emw = 1.0 / ew;
  const double x1 =
      std::exp(-x3) * (ew * (cr * p.Fp - a * sr) / (2.0 * (1.0 - a)) -
                       emw * (a * sr + cr * p.Fp) / (2.0 * (1.0 + a)));
  const double x2 =
      std::exp(x3) * (ew * (a * cr + p.Fp * sr) / (2.0 * (1.0 + a)) +
                      emw * (a * cr - p.Fp * sr) / (2.0 * (1.0 - a)));
  return {x1, x2, x3};
}

ImmersionJet CatenoidModel::jet(double u, double v) const {
  const Profile p = profile(v);
  const double a = alpha_;
  const double w = u + p.gamma;
  const std::complex<double> Z(w, p.rho);
  const std::complex<double> Ch = std::cosh(Z), Sh = std::sinh(Z);
  const std::complex<double> c(p.Fp, a);
  const std::complex<double> dZ(p.gp, p.rp);
  // v-derivative of the products Ch*c and Sh*c.
  const std::complex<double> dCh_c = Sh * dZ * c + Ch * p.Fpp;
  const std::complex<double> dSh_c = Ch * dZ * c + Sh * p.Fpp;
  const double chw = std::cosh(w);

  ImmersionJet jet;
  jet.u = u;
  jet.v = v;
  jet.position = immerse(u, v);
  jet.x_u = {jet.position, std::real(Ch * c), std::imag(Sh * c), a};
  jet.x_v = {jet.position, -std::imag(Ch * c), std::real(Sh * c), p.Fp};
  jet.normal = {jet.position, std::sin(p.rho) / chw, -std::cos(p.rho) / chw,
                std::sinh(w) / chw};
  jet.lambda = 2.0 * a * a / (1.0 + p.rp) * chw * chw;
  jet.has_second = true;
  jet.x_uu = {jet.position, std::real(Sh * c) - a * std::real(Ch * c),
              a * std::imag(Sh * c) + std::imag(Ch * c), 0.0};
  jet.x_uv = {jet.position, std::real(dCh_c) - p.Fp * std::real(Ch * c),
              p.Fp * std::imag(Sh * c) + std::imag(dSh_c), 0.0};
  jet.x_vv = {jet.position, p.Fp * std::imag(Ch * c) - std::imag(dCh_c),
              p.Fp * std::real(Sh * c) + std::real(dSh_c), p.Fpp};
  return jet;
}

GaussSample CatenoidModel::gauss_sample(double u, double v) const {
  const Profile p = profile(v);
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> g =
      -i * std::exp(-(u + p.gamma)) * std::exp(i * p.rho);
  GaussSample s;
  s.g = g;
  s.g_z = g * std::complex<double>(p.rp - 1.0, p.gp) / 2.0;
  s.g_zbar = -g * std::complex<double>(1.0 + p.rp, p.gp) / 2.0;
  s.g_zzbar = g * (alpha_ / 2.0) * std::exp(2.0 * i * p.rho) *
              std::complex<double>(p.rp, p.gp);
  return s;
}

FrameVector CatenoidModel::normal(double u, double v) const {
  const Profile p = profile(v);
  const double w = u + p.gamma, chw = std::cosh(w);
  return {immerse(u, v), std::sin(p.rho) / chw, -std::cos(p.rho) / chw,
          std::sinh(w) / chw};
}

double CatenoidModel::lambda(double u, double v) const {
  const Profile p = profile(v);
  const double chw = std::cosh(u + p.gamma);
  return 2.0 * alpha_ * alpha_ / (1.0 + p.rp) * chw * chw;
}

std::array<double, 2> CatenoidModel::section_point(double level,
                                                   double t) const {
  const double u = (level - odes_.F.value(t)) / alpha_;
  const Sol3Point x = immerse(u, t);
  return {x.x1, x.x2};
}

std::array<double, 2> CatenoidModel::section_derivative(double level,
                                                        double t) const {
  const Profile p = profile(t);
  const double a = alpha_;
  const double u = (level - p.F) / a;
  const double factor = -(p.Fp * p.Fp + a * a) * std::cosh(u + p.gamma) / a;
  return {std::exp(-level) * factor * std::cos(p.rho),
          std::exp(level) * factor * std::sin(p.rho)};
}

SectionCurve CatenoidModel::section(double level, int samples) const {
  if (samples < 4 || samples % 2 != 0)
    throw std::invalid_argument("section: samples must be even and >= 4");
  SectionCurve c;
  c.level = level;
  c.alpha = alpha_;
  c.V = odes_.V;
  const int n = samples;
  c.t.reserve(n);
  c.c1.reserve(n);
  c.c2.reserve(n);
  c.dc1.reserve(n);
  c.dc2.reserve(n);
  c.rho.reserve(n);
  const double h = 2.0 * odes_.V / n;
  for (int i = 0; i < n; ++i) {
    const double t = i * h;
    const auto pt = section_point(level, t);
    const auto dt = section_derivative(level, t);
    c.t.push_back(t);
    c.c1.push_back(pt[0]);
    c.c2.push_back(pt[1]);
    c.dc1.push_back(dt[0]);
    c.dc2.push_back(dt[1]);
    c.rho.push_back(odes_.rho.value(t));
  }
  return c;
}

VerificationReport CatenoidModel::symmetry_check(int samples,
                                                 std::uint64_t seed) const {
  if (samples < 1)
    throw std::invalid_argument("symmetry_check: samples must be positive");
  std::mt19937_64 rng(seed);
  const double V = odes_.V;
  const double v_lim = 0.9 * std::min(-v_min(), v_max() - V);
  if (!(v_lim > 0.0))
    throw std::invalid_argument("symmetry_check: v-grid shorter than V");
  std::uniform_real_distribution<double> du(-2.0, 2.0), dv(-v_lim, v_lim);

  struct Identity {
    const char* name;
    Isotropy rotation;
    double v_scale, v_shift;
    double worst = 0.0;
    double wu = 0.0, wv = 0.0;
  };
  Identity ids[3] = {
      {"symmetry x(u+i(v+V)) = sigma^2 x", Isotropy::Sigma2, 1.0, 1.0},
      {"symmetry x(u-iv) = tau x", Isotropy::Tau, -1.0, 0.0},
      {"symmetry x(u+i(-v+V)) = sigma^2 tau x", Isotropy::Sigma2Tau, -1.0,
       1.0},
  };
  for (int k = 0; k < samples; ++k) {
    const double u = du(rng), v = dv(rng);
    const Sol3Point base = immerse(u, v);
    for (Identity& id : ids) {
      const Sol3Point lhs = immerse(u, id.v_scale * v + id.v_shift * V);
      const double d = max_abs_diff(lhs, isotropy_apply(id.rotation, base));
      if (d > id.worst) {
        id.worst = d;
        id.wu = u;
        id.wv = v;
      }
    }
  }
  VerificationReport report;
  for (const Identity& id : ids)
    report.add(id.name, id.worst, 1e-8, point_location(id.wu, id.wv));
  return report;
}

double period_V_integral(double alpha) {
  if (!(std::abs(alpha) < 1.0))
    throw std::invalid_argument(
        "period_V_integral: alpha must lie in (-1, 1)");
  const double a2 = alpha * alpha;
  return quadrature(
             [a2](double s) {
               const double s2 = std::sin(2.0 * s);
               return 1.0 / std::sqrt(1.0 - a2 * s2 * s2);
             },
             0.0, std::numbers::pi, 1e-12)
      .value;
}

VerificationReport convexity_certificate(const SectionCurve& c) {
  const int n = static_cast<int>(c.t.size());
  if (n < 64 || n % 2 != 0)
    throw std::invalid_argument(
        "convexity_certificate: need an even sample count >= 64");
  if (c.c1.size() != c.t.size() || c.c2.size() != c.t.size() ||
      c.dc1.size() != c.t.size() || c.dc2.size() != c.t.size() ||
      c.rho.size() != c.t.size())
    throw std::invalid_argument("convexity_certificate: ragged curve data");

  VerificationReport report;
  const double V = c.V;

  // Speed never vanishes.
  {
    double min_speed = std::numeric_limits<double>::infinity();
    double where = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = std::hypot(c.dc1[i], c.dc2[i]);
      if (s < min_speed) {
        min_speed = s;
        where = c.t[i];
      }
    }
    report.add("section speed nonvanishing", min_speed > 0.0 ? 0.0 : 1.0, 0.0,
               section_location(c.level, where));
  }

  // Indices of the open half-period t in (-V/2, V/2) mod 2V, kept two grid
  // steps away from the cos rho = 0 endpoints and ordered by increasing
  // folded parameter.
  const double margin = 2.0 * (2.0 * V / n);
  std::vector<int> half;
  std::vector<int> tail;
  for (int i = 0; i < n; ++i) {
    const double folded = c.t[i] < V ? c.t[i] : c.t[i] - 2.0 * V;
    if (std::abs(folded) < 0.5 * V - margin)
      (folded < 0.0 ? tail : half).push_back(i);
  }
  std::vector<int> ordered = std::move(tail);
  ordered.insert(ordered.end(), half.begin(), half.end());

  // c1' keeps the sign opposite to alpha across the half-period.
  {
    const double target = c.alpha > 0.0 ? -1.0 : 1.0;
    int violations = 0;
    double where = 0.0;
    for (int i : ordered)
      if (c.dc1[i] * target <= 0.0) {
        ++violations;
        where = c.t[i];
      }
    report.add("section sign of c1' opposite to alpha",
               static_cast<double>(violations), 0.0,
               section_location(c.level, where));
  }

  // Flattened slope law e^{-2 level} dc2/dc1 = tan rho, and strict growth of
  // the slope across the ordered half-period.
  {
    const double flatten = std::exp(-2.0 * c.level);
    double worst = 0.0, where = 0.0;
    int non_monotone = 0;
    double prev_slope = 0.0;
    bool have_prev = false;
    for (int i : ordered) {
      if (std::abs(std::cos(c.rho[i])) < 0.05) continue;
      const double slope = flatten * c.dc2[i] / c.dc1[i];
      const double tr = std::tan(c.rho[i]);
      const double resid = std::abs(slope - tr) / (1.0 + tr * tr);
      if (resid > worst) {
        worst = resid;
        where = c.t[i];
      }
      if (have_prev && slope <= prev_slope) ++non_monotone;
      prev_slope = slope;
      have_prev = true;
    }
    report.add("section slope law e^{-2 level} dc2/dc1 = tan rho", worst,
               1e-6, section_location(c.level, where));
    report.add("section slope strictly increasing",
               static_cast<double>(non_monotone), 0.0,
               section_location(c.level, where));
  }

  // Central symmetry c(t + V) = -c(t) via the half-count index shift.
  {
    double worst = 0.0, where = 0.0;
    for (int i = 0; i < n; ++i) {
      const int j = (i + n / 2) % n;
      const double d = std::max(std::abs(c.c1[j] + c.c1[i]),
                                std::abs(c.c2[j] + c.c2[i]));
      if (d > worst) {
        worst = d;
        where = c.t[i];
      }
    }
    report.add("section central symmetry c(t+V) = -c(t)", worst, 1e-8,
               section_location(c.level, where));
  }

  // Cross products of consecutive edges of the closed polyline keep one
  // sign; normalized so the band absorbs rounding only.
  {
    double min_signed = std::numeric_limits<double>::infinity();
    double where = 0.0;
    double orientation = 0.0;
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n, k = (i + 2) % n;
      const double e1x = c.c1[j] - c.c1[i], e1y = c.c2[j] - c.c2[i];
      const double e2x = c.c1[k] - c.c1[j], e2y = c.c2[k] - c.c2[j];
      const double cross = e1x * e2y - e1y * e2x;
      orientation += cross;
    }
    const double s = orientation > 0.0 ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n, k = (i + 2) % n;
      const double e1x = c.c1[j] - c.c1[i], e1y = c.c2[j] - c.c2[i];
      const double e2x = c.c1[k] - c.c1[j], e2y = c.c2[k] - c.c2[j];
      const double norm = std::hypot(e1x, e1y) * std::hypot(e2x, e2y);
      const double cross = (e1x * e2y - e1y * e2x) / norm;
      if (s * cross < min_signed) {
        min_signed = s * cross;
        where = c.t[i];
      }
    }
    report.add("section discrete convexity", std::max(0.0, -min_signed),
               1e-12, section_location(c.level, where));
  }

  return report;
}

VerificationReport catenoid_parameter_reflection_check(
    const CatenoidModel& plus, const CatenoidModel& minus, int samples,
    std::uint64_t seed) {
  if (minus.parameter() != -plus.parameter())
    throw std::invalid_argument(
        "catenoid_parameter_reflection_check: parameters must be negatives");
  if (samples < 1)
    throw std::invalid_argument(
        "catenoid_parameter_reflection_check: samples must be positive");
  std::mt19937_64 rng(seed);
  const double v_lim =
      0.9 * std::min({-plus.v_min(), plus.v_max(), -minus.v_min(),
                      minus.v_max()});
  std::uniform_real_distribution<double> du(-2.0, 2.0), dv(-v_lim, v_lim);
  double worst = 0.0, wu = 0.0, wv = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double u = du(rng), v = dv(rng);
    const Sol3Point rhs =
        isotropy_apply(Isotropy::Sigma2, plus.immerse(u, v));
    const double d = max_abs_diff(minus.immerse(-u, v), rhs);
    if (d > worst) {
      worst = d;
      wu = u;
      wv = v;
    }
  }
  VerificationReport report;
  report.add("parameter reflection x(-alpha)(-u+iv) = sigma^2 x(alpha)",
             worst, 1e-8, point_location(wu, wv));
  return report;
}

}  // namespace solmin
