#include "solmin/helicoid.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace solmin {
namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;

void require_unit_open(double K, const char* who) {
  if (!(std::abs(K) < 1.0))
    throw std::invalid_argument(std::string(who) + ": K must lie in (-1, 1)");
}

std::string point_location(double u, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "z=(%.6g, %.6g)", u, v);
  return buf;
}

double max_abs_diff(const Sol3Point& a, const Sol3Point& b) {
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2),
                   std::abs(a.x3 - b.x3)});
}

}  // namespace

HelicoidModel::HelicoidModel(double K, HelicoidOdes odes)
    : K_(K), odes_(std::move(odes)), x3_at_W_(odes_.x3.value(odes_.W)) {}

HelicoidModel HelicoidModel::build(double K, double v_max, double step) {
  return HelicoidModel(K, solve_helicoid_odes(K, v_max, step));
}

HelicoidModel::Profile HelicoidModel::profile(double v) const {
  Profile p;
  p.b = odes_.b.value(v);
  p.x3 = odes_.x3.value(v);
  const double c2 = std::cos(2.0 * p.b), s2 = std::sin(2.0 * p.b);
  p.bp = std::sqrt(1.0 - K_ * c2);
  p.bpp = K_ * s2;
  p.m = K_ / (1.0 + p.bp);
  p.mp = -p.m * p.m * s2;
  p.mpp = -2.0 * p.m * p.mp * s2 - 2.0 * p.m * p.m * p.bp * c2;
  return p;
}

Sol3Point HelicoidModel::immerse(double u, double v) const {
  const Profile p = profile(v);
  const double cb = std::cos(p.b), sb = std::sin(p.b);
  const double A = kHalfSqrt2 * (cb - sb) * p.m;
  const double B = kHalfSqrt2 * (cb + sb) * p.m;
  const double sh = std::sinh(u);
  return {A * std::exp(-p.x3) * sh, B * std::exp(p.x3) * sh, p.x3};
}

ImmersionJet HelicoidModel::jet(double u, double v) const {
  const Profile p = profile(v);
  const double cb = std::cos(p.b), sb = std::sin(p.b);
  const double A = kHalfSqrt2 * (cb - sb) * p.m;
  const double B = kHalfSqrt2 * (cb + sb) * p.m;
  const double Ap = kHalfSqrt2 * (-(sb + cb) * p.bp * p.m + (cb - sb) * p.mp);
  const double Bp = kHalfSqrt2 * ((cb - sb) * p.bp * p.m + (cb + sb) * p.mp);
  const double App =
      kHalfSqrt2 * (-(cb - sb) * p.bp * p.bp * p.m -
                    (sb + cb) * (p.bpp * p.m + 2.0 * p.bp * p.mp) +
                    (cb - sb) * p.mpp);
  const double Bpp =
      kHalfSqrt2 * (-(cb + sb) * p.bp * p.bp * p.m +
                    (cb - sb) * (p.bpp * p.m + 2.0 * p.bp * p.mp) +
                    (cb + sb) * p.mpp);
  const double sh = std::sinh(u), ch = std::cosh(u);

  ImmersionJet jet;
  jet.u = u;
  jet.v = v;
  jet.position = {A * std::exp(-p.x3) * sh, B * std::exp(p.x3) * sh, p.x3};
  jet.x_u = {jet.position, A * ch, B * ch, 0.0};
  jet.x_v = {jet.position, (Ap - A * p.m) * sh, (Bp + B * p.m) * sh, p.m};
  jet.normal = {jet.position, kHalfSqrt2 * (cb + sb) / ch,
                kHalfSqrt2 * (sb - cb) / ch, sh / ch};
  jet.lambda = p.m * p.m * ch * ch;
  jet.has_second = true;
  jet.x_uu = {jet.position, A * sh, B * sh, 0.0};
  jet.x_uv = {jet.position, (Ap - A * p.m) * ch, (Bp + B * p.m) * ch, 0.0};
  jet.x_vv = {jet.position,
              (App - 2.0 * Ap * p.m - A * p.mp + A * p.m * p.m) * sh,
              (Bpp + 2.0 * Bp * p.m + B * p.mp + B * p.m * p.m) * sh, p.mp};
  return jet;
}

GaussSample HelicoidModel::gauss_sample(double u, double v) const {
  const Profile p = profile(v);
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> g =
      std::exp(-u) * std::exp(i * (p.b - std::numbers::pi / 4.0));
  GaussSample s;
  s.g = g;
  s.g_z = g * (p.bp - 1.0) / 2.0;
  s.g_zbar = -g * (p.bp + 1.0) / 2.0;
  s.g_zzbar =
      g * (K_ / 4.0) * (std::cos(2.0 * p.b) + i * std::sin(2.0 * p.b));
  return s;
}

FrameVector HelicoidModel::normal(double u, double v) const {
  return jet(u, v).normal;
}

double HelicoidModel::lambda(double u, double v) const {
  const Profile p = profile(v);
  const double ch = std::cosh(u);
  return p.m * p.m * ch * ch;
}

double HelicoidModel::gauss_curvature_closed_form(double u, double v) const {
  const Profile p = profile(v);
  const double c2 = std::cos(2.0 * p.b), s2 = std::sin(2.0 * p.b);
  const double ch2 = std::cosh(u) * std::cosh(u);
  const double q = 1.0 + p.bp;
  return -1.0 +
         (2.0 * q * c2 / K_ - q * q / (K_ * K_ * ch2) + s2 * s2) / ch2;
}

double tangent_plane_ambient_curvature(double u) {
  const double ch = std::cosh(u);
  return 1.0 - 2.0 / (ch * ch);
}

VerificationReport HelicoidModel::symmetry_check(int samples,
                                                 std::uint64_t seed) const {
  if (samples < 1)
    throw std::invalid_argument("symmetry_check: samples must be positive");
  std::mt19937_64 rng(seed);
  const double v_lim = 0.9 * std::min(-v_min(), v_max());
  std::uniform_real_distribution<double> du(-2.0, 2.0), dv(-v_lim, v_lim);

  struct Identity {
    const char* name;
    Isotropy rotation;
    bool flip_u, flip_v;
    double worst = 0.0;
    double wu = 0.0, wv = 0.0;
  };
  Identity ids[3] = {
      {"symmetry x(-u+iv) = sigma^2 x", Isotropy::Sigma2, true, false},
      {"symmetry x(u-iv) = sigma tau x", Isotropy::SigmaTau, false, true},
      {"symmetry x(-u-iv) = sigma^3 tau x", Isotropy::Sigma3Tau, true, true},
  };
  for (int k = 0; k < samples; ++k) {
    const double u = du(rng), v = dv(rng);
    const Sol3Point base = immerse(u, v);
    for (Identity& id : ids) {
      const Sol3Point lhs =
          immerse(id.flip_u ? -u : u, id.flip_v ? -v : v);
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
    report.add(id.name, id.worst, 1e-10, point_location(id.wu, id.wv));
  return report;
}

double period_W_integral(double K) {
  require_unit_open(K, "period_W_integral");
  return quadrature(
             [K](double s) {
               return 1.0 / std::sqrt(1.0 - K * std::cos(2.0 * s));
             },
             0.0, std::numbers::pi, 1e-12)
      .value;
}

double height_at_W_integral(double K) {
  require_unit_open(K, "height_at_W_integral");
  return K * quadrature(
                 [K](double s) {
                   const double r = std::sqrt(1.0 - K * std::cos(2.0 * s));
                   return 1.0 / (r * (1.0 + r));
                 },
                 0.0, std::numbers::pi, 1e-12)
                 .value;
}

double invert_period(double T) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("invert_period: T must be positive");
  const auto period_of = [](double K) {
    return 2.0 * height_at_W_integral(K);
  };
  double hi = 0.5;
  while (period_of(hi) < T) {
    hi = 1.0 - 0.25 * (1.0 - hi);
    if (1.0 - hi < 1e-13)
      throw std::runtime_error(
          "invert_period: T exceeds the numerically reachable range");
  }
  double lo = 0.0;
  double mid = 0.5 * hi;
  while (true) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double Tm = period_of(mid);
    if (std::abs(Tm - T) <= 5e-9) break;
    (Tm < T ? lo : hi) = mid;
  }
  return mid;
}

double total_curvature(const HelicoidModel& m, double U) {
  if (!(U > 0.0))
    throw std::invalid_argument("total_curvature: U must be positive");
  const double K = m.parameter();
  // Closed-form u-integrals of Kgauss * lambda over |u| <= U:
  //   cosh^2 -> U + sinh U cosh U,  1 -> 2U,  sech^2 -> 2 tanh U.
  const double cosh2_int = U + std::sinh(U) * std::cosh(U);
  const double one_int = 2.0 * U;
  const double sech2_int = 2.0 * std::tanh(U);
  const auto integrand = [&](double v) {
    const double b = m.b().value(v);
    const double c2 = std::cos(2.0 * b), s2 = std::sin(2.0 * b);
    const double bp = std::sqrt(1.0 - K * c2);
    const double mm = K / (1.0 + bp), mm2 = mm * mm;
    const double q = 1.0 + bp;
    return -mm2 * cosh2_int + mm2 * (s2 * s2 + 2.0 * q * c2 / K) * one_int -
           mm2 * (q * q / (K * K)) * sech2_int;
  };
  const double tol = std::max(1e-10, 1e-12 * cosh2_int);
  return quadrature(integrand, 0.0, 2.0 * m.period_W(), tol).value;
}

VerificationReport helicoid_parameter_reflection_check(
    const HelicoidModel& plus, const HelicoidModel& minus, int samples,
    std::uint64_t seed) {
  if (minus.parameter() != -plus.parameter())
    throw std::invalid_argument(
        "helicoid_parameter_reflection_check: parameters must be negatives");
  if (samples < 1)
    throw std::invalid_argument(
        "helicoid_parameter_reflection_check: samples must be positive");
  std::mt19937_64 rng(seed);
  const double half_W = 0.5 * plus.period_W();
  const double v_lim =
      0.9 * std::min({-plus.v_min(), plus.v_max() - half_W, -minus.v_min(),
                      minus.v_max()});
  if (!(v_lim > 0.0))
    throw std::invalid_argument(
        "helicoid_parameter_reflection_check: v-grid shorter than W/2");
  std::uniform_real_distribution<double> du(-2.0, 2.0), dv(-v_lim, v_lim);
  const Sol3Point lift{0.0, 0.0, plus.x3().value(half_W)};
  double worst = 0.0, wu = 0.0, wv = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double u = du(rng), v = dv(rng);
    const Sol3Point rhs = group_mul(
        lift, isotropy_apply(Isotropy::Sigma3, plus.immerse(u, v + half_W)));
    const double d = max_abs_diff(minus.immerse(u, v), rhs);
    if (d > worst) {
      worst = d;
      wu = u;
      wv = v;
    }
  }
  VerificationReport report;
  report.add("parameter reflection x(-K) = (0,0,x3(W/2)) sigma^3 x(K)", worst,
             1e-8, point_location(wu, wv));
  return report;
}

}  // namespace solmin
