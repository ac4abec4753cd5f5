#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "solmin/helicoid.hpp"
#include "solmin/verify.hpp"
#include "test_helpers.hpp"

using namespace solmin;
using solmin::testing::helicoid04;
using solmin::testing::helicoid04_minus;
using solmin::testing::point_diff;

namespace {

struct PeriodRow {
  double K, W, x3W;
};

// Quadrature oracle values, frozen from an independent high-precision run.
constexpr PeriodRow kPeriods[] = {
    {0.1, 3.1475155765810003375, 0.15757342648086814691},
    {0.2, 3.1656846363162261015, 0.31818174797550543761},
    {0.3, 3.1973897198427278094, 0.4852453642296134567},
    {0.4, 3.2451213135239645769, 0.66308827398031945805},
    {0.5, 3.3132763404731883329, 0.85781590957661695591},
    {0.6, 3.4097506279458346628, 1.0790942680177960793},
    {0.7, 3.5499606390379916486, 1.3444556106117332563},
    {0.8, 3.7694523864553545058, 1.6925198878275872881},
    {0.9, 4.1840407997746922233, 2.2451113272190919936}};

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(HelicoidModel::build(0.0), std::invalid_argument);
  CHECK_THROWS_AS(HelicoidModel::build(1.0), std::invalid_argument);
  CHECK_THROWS_AS(HelicoidModel::build(-1.2), std::invalid_argument);
  CHECK_THROWS_AS(helicoid04().immerse(0.0, 100.0), std::domain_error);
}

TEST_CASE("period quadratures against frozen oracle values") {
  for (const PeriodRow& row : kPeriods) {
    CHECK(std::abs(period_W_integral(row.K) - row.W) <= 1e-10);
    CHECK(std::abs(height_at_W_integral(row.K) - row.x3W) <= 1e-10);
  }
  CHECK(std::abs(period_W_integral(0.0) - std::numbers::pi) <= 1e-13);
  CHECK(std::abs(period_W_integral(0.5) - period_W_integral(-0.5)) <= 1e-13);
}

TEST_CASE("integrated periods match the quadratures") {
  CHECK(std::abs(helicoid04().period_W() - 3.2451213135239645769) <= 1e-10);
  CHECK(std::abs(helicoid04().height_at_W() - 0.66308827398031945805) <=
        1e-10);
  CHECK(helicoid04().period_T() == 2.0 * helicoid04().height_at_W());
  // W is even and T odd under negating the parameter.
  CHECK(std::abs(helicoid04_minus().period_W() - helicoid04().period_W()) <=
        1e-10);
  CHECK(std::abs(helicoid04_minus().period_T() + helicoid04().period_T()) <=
        1e-12);
}

TEST_CASE("profile values at fixed parameters") {
  const HelicoidModel& m = helicoid04();
  CHECK(std::abs(m.b().value(1.0) - 0.86800802052695717792) <= 1e-10);
  CHECK(std::abs(m.x3().value(1.0) - 0.21451332531700976341) <= 1e-10);
  const double W = m.period_W();
  CHECK(std::abs(m.b().value(W / 2.0) - std::numbers::pi / 2.0) <= 1e-10);
  CHECK(std::abs(m.x3().value(W / 2.0) - m.height_at_W() / 2.0) <= 1e-10);
}

TEST_CASE("axis, origin, and the line over the real axis") {
  const HelicoidModel& m = helicoid04();
  CHECK(point_diff(m.immerse(0.0, 0.0), {}) == 0.0);
  for (const double v : {-2.0, 0.7, 3.1}) {
    const Sol3Point p = m.immerse(0.0, v);
    CHECK(p.x1 == 0.0);
    CHECK(p.x2 == 0.0);
  }
  // Over v = 0 both horizontal coordinates equal c sinh(u) with
  // c = (sqrt(2)/2) K / (1 + sqrt(1 - K)).
  const double c = 0.159384223681381410944;
  for (const double u : {0.5, 1.0, 2.0}) {
    const Sol3Point p = m.immerse(u, 0.0);
    CHECK(std::abs(p.x1 - p.x2) <= 1e-15);
    CHECK(std::abs(p.x1 - c * std::sinh(u)) <= 1e-12);
    CHECK(p.x3 == 0.0);
  }
}

TEST_CASE("conformal factor") {
  const HelicoidModel& m = helicoid04();
  CHECK(std::abs(m.lambda(0.0, 0.0) - 0.0508066615170332459283) <= 1e-13);
  // lambda factors as m(v)^2 cosh^2 u.
  for (const double v : {-1.1, 0.4, 2.3})
    CHECK(std::abs(m.lambda(1.3, v) / std::pow(std::cosh(1.3), 2) -
                   m.lambda(0.0, v)) <= 1e-12);
  // The jet agrees and is conformal.
  const ImmersionJet jet = m.jet(0.8, -0.6);
  CHECK(std::abs(jet.lambda - m.lambda(0.8, -0.6)) <= 1e-14);
  CHECK(std::abs(dot(jet.x_u, jet.x_u) - jet.lambda) <= 1e-12);
  CHECK(std::abs(dot(jet.x_v, jet.x_v) - jet.lambda) <= 1e-12);
  CHECK(std::abs(dot(jet.x_u, jet.x_v)) <= 1e-12);
  CHECK(std::abs(norm(jet.normal) - 1.0) <= 1e-15);
  CHECK(std::abs(dot(jet.normal, jet.x_u)) <= 1e-12);
  CHECK(std::abs(dot(jet.normal, jet.x_v)) <= 1e-12);
}

TEST_CASE("closed-form curvature") {
  const HelicoidModel& m = helicoid04();
  // Symmetric in u and approaching -1 far from the axis.
  for (const double u : {0.3, 1.1, 2.4})
    CHECK(std::abs(m.gauss_curvature_closed_form(u, 0.7) -
                   m.gauss_curvature_closed_form(-u, 0.7)) <= 1e-14);
  CHECK(std::abs(m.gauss_curvature_closed_form(10.0, 0.7) + 1.0) <= 1e-6);
  CHECK(std::abs(m.gauss_curvature_closed_form(-10.0, 0.7) + 1.0) <= 1e-6);

  // It equals the determinant of the shape operator.
  const double K = m.parameter();
  double worst = 0.0;
  for (const double u : {-1.7, -0.4, 0.9, 2.0})
    for (const double v : {-1.3, 0.2, 1.8}) {
      const double b = m.b().value(v);
      const double bp = std::sqrt(1.0 - K * std::cos(2.0 * b));
      const double a11 = -std::sin(2.0 * b) * std::tanh(u);
      const double a12 =
          (1.0 + bp) / (K * std::pow(std::cosh(u), 2)) - std::cos(2.0 * b);
      const double det = -a11 * a11 - a12 * a12;
      worst =
          std::max(worst, std::abs(det - m.gauss_curvature_closed_form(u, v)));
    }
  CHECK(worst <= 1e-12);
}

TEST_CASE("ambient curvature of the tangent plane") {
  CHECK(tangent_plane_ambient_curvature(0.0) == -1.0);
  CHECK(std::abs(tangent_plane_ambient_curvature(20.0) - 1.0) <= 1e-15);
  const double flat = std::acosh(std::sqrt(2.0));
  CHECK(std::abs(tangent_plane_ambient_curvature(flat)) <= 1e-14);
}

TEST_CASE("total curvature diverges") {
  const HelicoidModel& m = helicoid04();
  const double expected[] = {-9.56260838, -14.59623689, -37.94048133,
                             -212.72579810, -1509.04243986};
  double prev = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double tc = total_curvature(m, i + 1.0);
    CHECK(std::abs(tc - expected[i]) <= 1e-4 * std::abs(expected[i]));
    CHECK(tc < prev);
    prev = tc;
  }
  CHECK(prev < -1e2);
  CHECK_THROWS_AS(total_curvature(m, 0.0), std::invalid_argument);
}

TEST_CASE("screw period inversion") {
  const double T = 2.0 * 0.4852453642296134567;  // parameter 0.3
  CHECK(std::abs(invert_period(T) - 0.3) <= 1e-6);
  CHECK(std::abs(invert_period(0.02) - invert_period(0.01) * 2.0) <= 2e-3);
  CHECK_THROWS_AS(invert_period(0.0), std::invalid_argument);
  CHECK_THROWS_AS(invert_period(1e6), std::runtime_error);
}

TEST_CASE("point symmetries at fixed parameters") {
  const HelicoidModel& m = helicoid04();
  double worst = 0.0;
  for (const auto& [u, v] : {std::pair{0.7, 0.33}, {1.4, -0.9}, {-0.5, 2.1}}) {
    const Sol3Point x = m.immerse(u, v);
    worst = std::max(worst, point_diff(m.immerse(-u, v),
                                       isotropy_apply(Isotropy::Sigma2, x)));
    worst = std::max(worst, point_diff(m.immerse(u, -v),
                                       isotropy_apply(Isotropy::SigmaTau, x)));
    worst = std::max(worst, point_diff(m.immerse(-u, -v),
                                       isotropy_apply(Isotropy::Sigma3Tau, x)));
  }
  CHECK(worst <= 1e-10);

  const VerificationReport rep = m.symmetry_check();
  CHECK(rep.all_pass());
  CHECK(rep.checks().size() == 3);
}

TEST_CASE("screw invariance over two periods") {
  const HelicoidModel& m = helicoid04();
  const Sol3Point shift{0.0, 0.0, m.period_T()};
  double worst = 0.0;
  for (const auto& [u, v] : {std::pair{0.6, -0.8}, {1.9, 0.4}, {-1.2, 1.0}})
    worst = std::max(worst,
                     point_diff(m.immerse(u, v + 2.0 * m.period_W()),
                                group_mul(shift, m.immerse(u, v))));
  CHECK(worst <= 1e-8);
}

TEST_CASE("parameter reflection identity") {
  const VerificationReport rep =
      helicoid_parameter_reflection_check(helicoid04(), helicoid04_minus());
  CHECK(rep.all_pass());
}

TEST_CASE("embeddedness proxies") {
  const HelicoidModel& m = helicoid04();
  // The height is strictly increasing along v, so v-slices never collide.
  double prev = m.x3().value(-2.0);
  for (int i = 1; i <= 40; ++i) {
    const double x3 = m.x3().value(-2.0 + 0.1 * i);
    CHECK(x3 > prev);
    prev = x3;
  }
  // Each horizontal slice is a straight line through the axis, traversed
  // injectively: colinear samples with strictly increasing distance.
  const double v = 0.3;
  double prev_r = -1.0;
  const Sol3Point ref = m.immerse(2.0, v);
  for (int i = 0; i <= 20; ++i) {
    const double u = 0.1 * i;
    const Sol3Point p = m.immerse(u, v);
    CHECK(std::abs(p.x1 * ref.x2 - p.x2 * ref.x1) <= 1e-12);
    const double r = std::hypot(p.x1, p.x2);
    CHECK(r > prev_r);
    prev_r = r;
  }
}

TEST_CASE("analytic jet matches finite differences") {
  const HelicoidModel& m = helicoid04();
  const ImmersionJet fd = fd_jet(
      [&](double uu, double vv) { return m.immerse(uu, vv); }, 0.9, -0.4);
  const ImmersionJet an = m.jet(0.9, -0.4);
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
