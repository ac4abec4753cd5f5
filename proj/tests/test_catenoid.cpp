#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "solmin/catenoid.hpp"
#include "solmin/verify.hpp"
#include "test_helpers.hpp"

using namespace solmin;
using solmin::testing::catenoid06;
using solmin::testing::catenoid06_minus;
using solmin::testing::point_diff;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(CatenoidModel::build(0.0), std::invalid_argument);
  CHECK_THROWS_AS(CatenoidModel::build(1.0), std::invalid_argument);
  CHECK_THROWS_AS(CatenoidModel::build(-1.5), std::invalid_argument);
  CHECK_THROWS_AS(catenoid06().immerse(0.0, 100.0), std::domain_error);
  CHECK_THROWS_AS(catenoid06().section(0.0, 3), std::invalid_argument);
}

TEST_CASE("period quadratures against frozen oracle values") {
  CHECK(std::abs(period_V_integral(0.3) - 3.2160972398610256025) <= 1e-10);
  CHECK(std::abs(period_V_integral(0.6) - 3.501507605831505058) <= 1e-10);
  CHECK(std::abs(period_V_integral(0.9) - 4.5610982768455404092) <= 1e-10);
  CHECK(std::abs(period_V_integral(0.0) - std::numbers::pi) <= 1e-13);
  CHECK(std::abs(period_V_integral(-0.6) - period_V_integral(0.6)) <= 1e-13);
  CHECK(std::abs(catenoid06().period_V() - 3.501507605831505058) <= 1e-10);
  CHECK(std::abs(catenoid06_minus().period_V() - catenoid06().period_V()) <=
        1e-10);
}

TEST_CASE("profile values at fixed parameters") {
  const CatenoidModel& m = catenoid06();
  CHECK(std::abs(m.rho().value(1.0) - 0.88546571507063639882) <= 1e-10);
  CHECK(std::abs(m.gamma().value(1.0) + 0.42085074478047710367) <= 1e-10);
  CHECK(std::abs(m.F().value(1.0) - 0.13629042796366528925) <= 1e-10);
  const double V = m.period_V();
  CHECK(std::abs(m.rho().value(V / 2.0) - std::numbers::pi / 2.0) <= 1e-10);
  CHECK(std::abs(m.F().value(V / 2.0) - 0.22314355131420975577) <= 1e-10);
  CHECK(std::abs(m.gamma().value(V)) <= 1e-10);
  CHECK(std::abs(m.F().value(V)) <= 1e-10);
}

TEST_CASE("base point and height structure") {
  CHECK(point_diff(catenoid06().immerse(0.0, 0.0), {0.0, 0.9375, 0.0}) <=
        1e-14);
  CHECK(point_diff(catenoid06_minus().immerse(0.0, 0.0),
                   {0.0, -0.9375, 0.0}) <= 1e-14);

  // x3 = alpha u + F(v), so u = level/alpha reaches any height over v = 0.
  const CatenoidModel& m = catenoid06();
  double worst = 0.0;
  for (const auto& [u, v] : {std::pair{0.9, -1.3}, {-1.6, 0.8}, {0.2, 2.9}})
    worst = std::max(worst, std::abs(m.immerse(u, v).x3 -
                                     (0.6 * u + m.F().value(v))));
  CHECK(worst <= 1e-12);
  CHECK(std::abs(m.immerse(0.7 / 0.6, 0.0).x3 - 0.7) <= 1e-12);
}

TEST_CASE("conformal factor") {
  const CatenoidModel& m = catenoid06();
  CHECK(std::abs(m.lambda(0.0, 0.0) - 0.36) <= 1e-14);
  const ImmersionJet jet = m.jet(0.5, 1.2);
  CHECK(std::abs(jet.lambda - m.lambda(0.5, 1.2)) <= 1e-14);
  CHECK(std::abs(dot(jet.x_u, jet.x_u) - jet.lambda) <= 1e-12);
  CHECK(std::abs(dot(jet.x_v, jet.x_v) - jet.lambda) <= 1e-12);
  CHECK(std::abs(dot(jet.x_u, jet.x_v)) <= 1e-12);
  CHECK(std::abs(norm(jet.normal) - 1.0) <= 1e-15);
}

TEST_CASE("normal and Gauss value closed forms") {
  const CatenoidModel& m = catenoid06();
  double worst_n = 0.0, worst_g = 0.0;
  for (const auto& [u, v] : {std::pair{0.4, 0.9}, {-1.1, -0.5}, {1.7, 2.2}}) {
    const double rho = m.rho().value(v);
    const double w = u + m.gamma().value(v);
    const FrameVector n = m.normal(u, v);
    worst_n = std::max({worst_n,
                        std::abs(n.f1 - std::sin(rho) / std::cosh(w)),
                        std::abs(n.f2 + std::cos(rho) / std::cosh(w)),
                        std::abs(n.f3 - std::tanh(w))});
    const std::complex<double> expected =
        std::complex<double>(0.0, -1.0) *
        std::exp(std::complex<double>(-w, rho));
    worst_g = std::max(worst_g, std::abs(m.gauss_sample(u, v).g - expected));
  }
  CHECK(worst_n <= 1e-12);
  CHECK(worst_g <= 1e-12);
}

TEST_CASE("constant Hopf value across parameters") {
  const CatenoidModel& m = catenoid06();
  double worst = 0.0;
  for (const auto& [u, v] : {std::pair{0.4, 0.9}, {-1.1, -0.5}, {1.7, 2.2}})
    worst = std::max(worst, std::abs(hopf_q(m.gauss_sample(u, v)) -
                                     std::complex<double>(-0.15, 0.0)));
  CHECK(worst <= 1e-10);
}

TEST_CASE("point symmetries and periodicity") {
  const CatenoidModel& m = catenoid06();
  const double V = m.period_V();
  double worst = 0.0, worst_period = 0.0;
  for (const auto& [u, v] : {std::pair{0.7, 0.33}, {1.4, -0.9}, {-0.5, 2.1}}) {
    const Sol3Point x = m.immerse(u, v);
    worst = std::max(worst, point_diff(m.immerse(u, v + V),
                                       isotropy_apply(Isotropy::Sigma2, x)));
    worst = std::max(worst, point_diff(m.immerse(u, -v),
                                       isotropy_apply(Isotropy::Tau, x)));
    worst = std::max(worst, point_diff(m.immerse(u, -v + V),
                                       isotropy_apply(Isotropy::Sigma2Tau, x)));
    worst_period =
        std::max(worst_period, point_diff(m.immerse(u, v + 2.0 * V), x));
  }
  CHECK(worst <= 1e-8);
  CHECK(worst_period <= 1e-8);

  const VerificationReport rep = m.symmetry_check();
  CHECK(rep.all_pass());
  CHECK(rep.checks().size() == 3);
}

TEST_CASE("parameter reflection identity") {
  const VerificationReport rep =
      catenoid_parameter_reflection_check(catenoid06(), catenoid06_minus());
  CHECK(rep.all_pass());
}

TEST_CASE("sections close, are centrally symmetric, and obey the slope law") {
  const CatenoidModel& m = catenoid06();
  const double V = m.period_V();
  for (const double level : {0.0, -1.0}) {
    const auto p0 = m.section_point(level, 0.0);
    const auto p2V = m.section_point(level, 2.0 * V);
    CHECK(std::hypot(p2V[0] - p0[0], p2V[1] - p0[1]) <= 1e-8);
    for (const double t : {0.3, 1.1, 2.6}) {
      const auto p = m.section_point(level, t);
      const auto q = m.section_point(level, t + V);
      CHECK(std::hypot(q[0] + p[0], q[1] + p[1]) <= 1e-8);
      // The sampled point is the immersed point at height `level`.
      const double u = (level - m.F().value(t)) / m.parameter();
      const Sol3Point x = m.immerse(u, t);
      CHECK(std::abs(x.x3 - level) <= 1e-12);
      CHECK(std::abs(x.x1 - p[0]) <= 1e-12);
      CHECK(std::abs(x.x2 - p[1]) <= 1e-12);
      // Flattened slope of the curve equals tan(rho).
      const auto d = m.section_derivative(level, t);
      const double rho = m.rho().value(t);
      const double slope = std::exp(-2.0 * level) * d[1] / d[0];
      CHECK(std::abs(slope - std::tan(rho)) /
                (1.0 + std::pow(std::tan(rho), 2)) <= 1e-6);
    }
  }
}

TEST_CASE("section derivative matches finite differences") {
  const CatenoidModel& m = catenoid06_minus();
  const double h = 1e-5;
  for (const double t : {0.4, 1.7}) {
    const auto d = m.section_derivative(0.5, t);
    const auto plus = m.section_point(0.5, t + h);
    const auto minus = m.section_point(0.5, t - h);
    CHECK(std::abs((plus[0] - minus[0]) / (2.0 * h) - d[0]) <=
          1e-6 * (1.0 + std::abs(d[0])));
    CHECK(std::abs((plus[1] - minus[1]) / (2.0 * h) - d[1]) <=
          1e-6 * (1.0 + std::abs(d[1])));
  }
}

TEST_CASE("convexity certificates at several heights") {
  const CatenoidModel& m = catenoid06_minus();
  for (const double level : {-1.0, 0.0, 1.0}) {
    const VerificationReport rep =
        convexity_certificate(m.section(level, 128));
    CHECK(rep.all_pass());
  }
}

TEST_CASE("sampled section arrays are consistent") {
  const SectionCurve c = catenoid06().section(0.5, 64);
  CHECK(c.t.size() == 64);
  CHECK(c.c1.size() == 64);
  CHECK(c.c2.size() == 64);
  CHECK(c.dc1.size() == 64);
  CHECK(c.dc2.size() == 64);
  CHECK(c.rho.size() == 64);
  CHECK(c.level == 0.5);
  CHECK(c.alpha == 0.6);
  CHECK(c.t.front() == 0.0);
  // Half-open sampling: the last node falls one step short of 2V.
  CHECK(std::abs(c.t.back() - (2.0 * c.V - 2.0 * c.V / 64.0)) <= 1e-12);
}

TEST_CASE("analytic jet matches finite differences") {
  const CatenoidModel& m = catenoid06();
  const ImmersionJet fd = fd_jet(
      [&](double uu, double vv) { return m.immerse(uu, vv); }, -0.6, 1.3);
  const ImmersionJet an = m.jet(-0.6, 1.3);
  CHECK(std::abs(fd.x_u.f1 - an.x_u.f1) <= 1e-6);
  CHECK(std::abs(fd.x_u.f2 - an.x_u.f2) <= 1e-6);
  CHECK(std::abs(fd.x_u.f3 - an.x_u.f3) <= 1e-6);
  CHECK(std::abs(fd.x_v.f1 - an.x_v.f1) <= 1e-6);
  CHECK(std::abs(fd.x_v.f2 - an.x_v.f2) <= 1e-6);
  CHECK(std::abs(fd.x_v.f3 - an.x_v.f3) <= 1e-6);
  CHECK(an.has_second);
  for (const auto& [fdv, anv] : {std::pair{&fd.x_uu, &an.x_uu},
                                 std::pair{&fd.x_vv, &an.x_vv},
                                 std::pair{&fd.x_uv, &an.x_uv}}) {
    CHECK(std::abs(fdv->f1 - anv->f1) <= 1e-5);
    CHECK(std::abs(fdv->f2 - anv->f2) <= 1e-5);
    CHECK(std::abs(fdv->f3 - anv->f3) <= 1e-5);
  }
}
