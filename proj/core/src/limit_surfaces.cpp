#include "solmin/limit_surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "solmin/verify.hpp"

namespace solmin {
namespace {

std::string point_location(double u, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "z=(%.6g, %.6g)", u, v);
  return buf;
}

/// ln cosh x without overflow: |x| + log1p(e^{-2|x|}) - ln 2.
double lncosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

/// Symmetric mirror of a forward grid starting at v = 0; odd flips values,
/// even flips derivatives.
OdeSolution mirror(const OdeSolution& fwd, bool odd) {
  const std::size_t n = fwd.node_count();
  std::vector<double> y(2 * n - 1), yp(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    y[n - 1 + i] = fwd.node_value(i);
    yp[n - 1 + i] = fwd.node_derivative(i);
    y[n - 1 - i] = odd ? -fwd.node_value(i) : fwd.node_value(i);
    yp[n - 1 - i] = odd ? fwd.node_derivative(i) : -fwd.node_derivative(i);
  }
  return OdeSolution(0.0, n - 1, fwd.step(), std::move(y), std::move(yp));
}

double section_x1(double level, double t) {
  const double e2u = std::exp(-2.0 * level) * std::cosh(t) * std::cosh(t);
  return -0.5 * std::tanh(t) * (1.0 + e2u);
}

}  // namespace

namespace graph_s {

double rho1(double v) { return std::atan(std::tanh(v)); }
double gamma1(double v) { return -0.5 * lncosh(2.0 * v); }
double F1(double v) { return lncosh(v); }

Sol3Point immerse(double u, double v) {
  const double x1 = -0.5 * std::tanh(v) * (1.0 + std::exp(-2.0 * u));
  const double x2 =
      0.25 * std::exp(2.0 * u) - 0.5 * u - 0.25 * std::cosh(2.0 * v);
  return {x1, x2, u + lncosh(v)};
}

Sol3Point immerse_untranslated(double u, double v) {
  Sol3Point x = immerse(u, v);
  x.x1 += 0.5;
  return x;
}

GaussSample gauss_sample(double u, double v) {
  const double eu = std::exp(-u);
  GaussSample s;
  s.g = {eu * std::sinh(v), -eu * std::cosh(v)};
  s.g_z = {-eu * std::sinh(v), 0.0};
  s.g_zbar = {0.0, eu * std::cosh(v)};
  s.g_zzbar = s.g / 2.0;
  return s;
}

FrameVector normal(double u, double v) {
  return normal_from_gauss(gauss_sample(u, v).g, immerse(u, v));
}

double transversality(double u, double v) {
  const double eu = std::exp(-u);
  return -2.0 * std::cosh(v) * eu / (1.0 + eu * eu * std::cosh(2.0 * v));
}

std::array<double, 2> section_point(double level, double t) {
  const double ch = std::cosh(t);
  const double x2 = 0.25 * std::exp(2.0 * level) / (ch * ch) - 0.5 * level +
                    0.5 * lncosh(t) - 0.25 * std::cosh(2.0 * t);
  return {section_x1(level, t), x2};
}

double section_x1_derivative(double level, double t) {
  const double th = std::tanh(t);
  return 0.5 * (th * th - 1.0) -
         0.5 * std::exp(-2.0 * level) * std::cosh(2.0 * t);
}

double evaluate(double x1, double x3) {
  if (!std::isfinite(x1) || !std::isfinite(x3))
    throw std::invalid_argument("graph_s::evaluate: arguments must be finite");
  double R = 1.0;
  while (!(section_x1(x3, -R) > x1 && section_x1(x3, R) < x1)) {
    R *= 2.0;
    if (R > 1e6)
      throw std::runtime_error("graph_s::evaluate: bracket search diverged");
  }
  // section_x1 decreases strictly from +inf to -inf.
  double lo = -R, hi = R, mid = 0.0;
  while (true) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (section_x1(x3, mid) > x1 ? lo : hi) = mid;
  }
  return section_point(x3, mid)[1];
}

}  // namespace graph_s

GraphOdes solve_graph_odes(double v_max, double step) {
  if (!(v_max > 0.0))
    throw std::invalid_argument("solve_graph_odes: v_max must be positive");
  const auto rho_rhs = [](double, double y) { return std::cos(2.0 * y); };
  OdeSolution rho_fwd = integrate(rho_rhs, 0.0, 0.0, v_max, step);
  const auto gamma_rhs = [&rho_fwd](double v, double) {
    return -std::sin(2.0 * rho_fwd.value(v));
  };
  OdeSolution gamma_fwd = integrate(gamma_rhs, 0.0, 0.0, v_max, step);
  const auto F_rhs = [&rho_fwd](double v, double) {
    const double r = rho_fwd.value(v);
    return std::sin(2.0 * r) / (1.0 + std::cos(2.0 * r));
  };
  OdeSolution F_fwd = integrate(F_rhs, 0.0, 0.0, v_max, step);
  GraphOdes odes;
  odes.rho = mirror(rho_fwd, true);
  odes.gamma = mirror(gamma_fwd, false);
  odes.F = mirror(F_fwd, false);
  return odes;
}

VerificationReport closed_form_check(const GraphOdes& odes) {
  const int n = 1001;
  const double a = odes.rho.v_min(), b = odes.rho.v_max();
  double dev[3] = {0.0, 0.0, 0.0};
  double where[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const double v = a + (b - a) * i / (n - 1);
    const double d[3] = {std::abs(odes.rho.value(v) - graph_s::rho1(v)),
                         std::abs(odes.gamma.value(v) - graph_s::gamma1(v)),
                         std::abs(odes.F.value(v) - graph_s::F1(v))};
    for (int k = 0; k < 3; ++k)
      if (d[k] > dev[k]) {
        dev[k] = d[k];
        where[k] = v;
      }
  }
  VerificationReport report;
  const char* names[3] = {"profile rho matches arctan(tanh v)",
                          "profile gamma matches -ln(cosh 2v)/2",
                          "profile F matches ln(cosh v)"};
  for (int k = 0; k < 3; ++k) {
    char loc[32];
    std::snprintf(loc, sizeof loc, "v=%.6g", where[k]);
    report.add(names[k], dev[k], 1e-8, loc);
  }
  return report;
}

VerificationReport closed_form_check() {
  return closed_form_check(solve_graph_odes());
}

Sol3Point plane_limit_immersion(double u_prime, double v_prime) {
  const double r = 0.5 * std::exp(u_prime);
  return {-r * std::sin(v_prime), r * std::cos(v_prime), 0.0};
}

Sol3Point rescaled_catenoid(const CatenoidModel& m, double u_prime,
                            double v_prime) {
  if (!(m.parameter() > 0.0))
    throw std::invalid_argument(
        "rescaled_catenoid: the rescaling uses ln(alpha), alpha must be > 0");
  return m.immerse(u_prime - std::log(m.parameter()), v_prime);
}

double alpha_zero_sup_distance(const CatenoidModel& m) {
  double sup = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double up = -1.0 + 0.1 * i;
    for (int j = 0; j <= 40; ++j) {
      const double vp = 2.0 * std::numbers::pi * j / 40.0;
      const Sol3Point x = rescaled_catenoid(m, up, vp);
      const Sol3Point p = plane_limit_immersion(up, vp);
      sup = std::max(sup, std::hypot(x.x1 - p.x1, x.x2 - p.x2, x.x3 - p.x3));
    }
  }
  return sup;
}

VerificationReport alpha_zero_limit_check(const CatenoidModel& m) {
  const double alpha = m.parameter();
  if (!(alpha > 0.0 && alpha <= 0.1))
    throw std::invalid_argument(
        "alpha_zero_limit_check: alpha must lie in (0, 0.1]");
  const double scale = alpha * (1.0 + std::abs(std::log(alpha)));
  char loc[32];
  std::snprintf(loc, sizeof loc, "alpha=%.6g", alpha);

  VerificationReport report;
  report.add("rescaled immersion near the plane limit",
             alpha_zero_sup_distance(m), 2.5 * scale, loc);

  double sup3 = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double up = -1.0 + 0.1 * i;
    for (int j = 0; j <= 40; ++j) {
      const double vp = 2.0 * std::numbers::pi * j / 40.0;
      sup3 = std::max(sup3, std::abs(rescaled_catenoid(m, up, vp).x3));
    }
  }
  report.add("rescaled third coordinate vanishing", sup3, 1.25 * scale, loc);
  return report;
}

VerificationReport alpha_zero_limit_check(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.1))
    throw std::invalid_argument(
        "alpha_zero_limit_check: alpha must lie in (0, 0.1]");
  return alpha_zero_limit_check(CatenoidModel::build(alpha));
}

VerificationReport residual_suite_S() {
  VerificationReport report;

  {
    double worst = 0.0, wu = 0.0, wv = 0.0;
    const auto consider = [&](double u, double v) {
      const double r = harmonic_residual(graph_s::gauss_sample(u, v));
      if (r > worst) {
        worst = r;
        wu = u;
        wv = v;
      }
    };
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j)
        consider(-2.0 + 0.2 * i, -2.0 + 0.2 * j);
    consider(0.3, 0.2);
    report.add("graph harmonic residual", worst, 1e-10,
               point_location(wu, wv));
  }

  {
    double worst = 0.0, wu = 0.0, wv = 0.0;
    const double offset = 0.05 / std::numbers::sqrt2;
    const auto consider = [&](double u, double v) {
      const double H = std::abs(mean_curvature(graph_s::immerse, u, v));
      if (H > worst) {
        worst = H;
        wu = u;
        wv = v;
      }
    };
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        consider(-1.5 + 0.5 * i + offset, -1.5 + 0.5 * j + offset);
    consider(0.5, -0.7);
    report.add("graph FD mean curvature", worst, 1e-4,
               point_location(wu, wv));
  }

  {
    double worst = -std::numeric_limits<double>::infinity();
    double w_level = 0.0, w_t = 0.0;
    for (double level : {-2.0, 0.0, 10.0})
      for (int i = 0; i <= 100; ++i) {
        const double t = -5.0 + 0.1 * i;
        const double d = graph_s::section_x1_derivative(level, t);
        if (d > worst) {
          worst = d;
          w_level = level;
          w_t = t;
        }
      }
    char loc[48];
    std::snprintf(loc, sizeof loc, "level=%.6g t=%.6g", w_level, w_t);
    report.add("graph section x1 strictly decreasing",
               worst < 0.0 ? 0.0 : 1.0 + worst, 0.0, loc);
  }

  {
    int non_negative = 0;
    double wu = 0.0, wv = 0.0;
    for (int i = 0; i <= 100; ++i)
      for (int j = 0; j <= 100; ++j) {
        const double u = -5.0 + 0.1 * i, v = -5.0 + 0.1 * j;
        if (!(graph_s::transversality(u, v) < 0.0)) {
          ++non_negative;
          wu = u;
          wv = v;
        }
      }
    report.add("graph transversality strictly negative",
               static_cast<double>(non_negative), 0.0,
               point_location(wu, wv));
    report.add("graph transversality nonzero far out",
               graph_s::transversality(30.0, 0.0) < 0.0 ? 0.0 : 1.0, 0.0,
               point_location(30.0, 0.0));
  }

  {
    double dev[3] = {0.0, 0.0, 0.0};
    double where[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i <= 200; ++i) {
      const double v = -5.0 + 0.05 * i;
      const double r = graph_s::rho1(v);
      const double d[3] = {
          std::abs(1.0 / std::cosh(2.0 * v) - std::cos(2.0 * r)),
          std::abs(-std::tanh(2.0 * v) + std::sin(2.0 * r)),
          std::abs(std::tanh(v) -
                   std::sin(2.0 * r) / (1.0 + std::cos(2.0 * r)))};
      for (int k = 0; k < 3; ++k)
        if (d[k] > dev[k]) {
          dev[k] = d[k];
          where[k] = v;
        }
    }
    const char* names[3] = {"profile identity rho1' = cos 2rho1",
                            "profile identity gamma1' = -sin 2rho1",
                            "profile identity F1' = sin 2rho1/(1+cos 2rho1)"};
    for (int k = 0; k < 3; ++k) {
      char loc[32];
      std::snprintf(loc, sizeof loc, "v=%.6g", where[k]);
      report.add(names[k], dev[k], 1e-12, loc);
    }
  }

  return report;
}

}  // namespace solmin
