#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "solmin/verify.hpp"
#include "test_helpers.hpp"

using namespace solmin;
using solmin::testing::helicoid04;

namespace {

Sol3Point flat_plane(double u, double v) { return {u, v, 0.0}; }

}  // namespace

TEST_CASE("finite-difference jet of the flat horizontal plane") {
  const ImmersionJet jet = fd_jet(flat_plane, 0.2, -0.3);
  CHECK(std::abs(jet.x_u.f1 - 1.0) <= 1e-9);
  CHECK(std::abs(jet.x_u.f2) <= 1e-9);
  CHECK(std::abs(jet.x_v.f2 - 1.0) <= 1e-9);
  CHECK(std::abs(jet.lambda - 1.0) <= 1e-9);
  CHECK(jet.has_second);
  // Coordinate second partials vanish identically on the plane.
  for (const FrameVector* f : {&jet.x_uu, &jet.x_vv, &jet.x_uv}) {
    CHECK(std::abs(f->f1) <= 1e-9);
    CHECK(std::abs(f->f2) <= 1e-9);
    CHECK(std::abs(f->f3) <= 1e-9);
  }
  CHECK(std::abs(jet.normal.f3 - 1.0) <= 1e-9);
}

TEST_CASE("finite-difference jet argument validation") {
  CHECK_THROWS_AS(fd_jet(flat_plane, 0.0, 0.0, 1e-7), std::invalid_argument);
  CHECK_THROWS_AS(fd_jet(flat_plane, 0.0, 0.0, 1e-2), std::invalid_argument);
  const SurfaceEvaluator bad = [](double, double) {
    return Sol3Point{std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0};
  };
  CHECK_THROWS_AS(fd_jet(bad, 0.0, 0.0), std::runtime_error);
}

TEST_CASE("halving h quarters the first-derivative error") {
  const HelicoidModel& m = helicoid04();
  const SurfaceEvaluator surface = [&](double u, double v) {
    return m.immerse(u, v);
  };
  const ImmersionJet exact = m.jet(0.9, -0.4);
  const auto err = [&](double h) {
    const ImmersionJet fd = fd_jet(surface, 0.9, -0.4, h);
    return std::abs(fd.x_u.f1 - exact.x_u.f1) +
           std::abs(fd.x_v.f2 - exact.x_v.f2);
  };
  const double ratio = err(8e-4) / err(4e-4);
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("conformality residual") {
  const ImmersionJet analytic = helicoid04().jet(0.8, 0.6);
  CHECK(conformality_residual(analytic) <= 1e-10);
  // A sheared parametrization of the plane is not conformal.
  const ImmersionJet sheared =
      fd_jet([](double u, double v) { return Sol3Point{u + v, v, 0.0}; },
             0.0, 0.0);
  CHECK(conformality_residual(sheared) > 0.1);
}

TEST_CASE("mean curvature of minimal examples") {
  // The horizontal plane x3 = 0 is minimal: its principal curvatures are
  // +1 and -1.
  CHECK(std::abs(mean_curvature(flat_plane, 0.3, 0.1)) <= 1e-6);
  const HelicoidModel& m = helicoid04();
  CHECK(std::abs(mean_curvature(
            [&](double u, double v) { return m.immerse(u, v); }, 0.7,
            -0.5)) <= 1e-4);
  // Non-conformal parametrizations are rejected rather than mis-measured.
  CHECK_THROWS_AS(
      mean_curvature([](double u, double v) {
        return Sol3Point{2.0 * u, v, 0.0};
      }, 0.0, 0.0),
      std::invalid_argument);
}

TEST_CASE("intrinsic curvature of model conformal factors") {
  // Constant factor: flat.
  CHECK(std::abs(intrinsic_gauss_curvature(
            [](double, double) { return 2.5; }, 0.0, 0.0)) <= 1e-8);
  // lambda = cosh^2 u has curvature -1/cosh^4 u.
  const double u = 0.3;
  const double expected = -1.0 / std::pow(std::cosh(u), 4);
  CHECK(std::abs(intrinsic_gauss_curvature(
            [](double uu, double) {
              return std::pow(std::cosh(uu), 2);
            }, u, 0.0) - expected) <= 1e-5);
  // Nonpositive factors are rejected.
  CHECK_THROWS_AS(intrinsic_gauss_curvature(
                      [](double uu, double) { return uu; }, 0.0, 0.0),
                  std::domain_error);
}

TEST_CASE("curvature bundle fields") {
  const HelicoidModel& m = helicoid04();
  const SurfaceEvaluator surface = [&](double u, double v) {
    return m.immerse(u, v);
  };
  const ScalarField lambda = [&](double u, double v) {
    return m.lambda(u, v);
  };
  const ScalarField reference = [&](double u, double v) {
    return m.gauss_curvature_closed_form(u, v);
  };
  const CurvatureSample s =
      curvature_sample(surface, lambda, 0.6, 0.9, 1e-4, reference);
  CHECK(std::abs(s.H) <= 1e-4);
  CHECK(std::abs(s.gauss_closed_form -
                 m.gauss_curvature_closed_form(0.6, 0.9)) == 0.0);
  CHECK(s.area_density > 0.0);
  CHECK(std::abs(s.area_density - m.lambda(0.6, 0.9)) <= 1e-6);
  // Minimality makes the form trace-free: ii_uu + ii_vv = 2 H lambda.
  CHECK(std::abs(s.ii_uu + s.ii_vv) <= 1e-4);
  // The intrinsic curvature exceeds the shape-operator determinant by the
  // ambient sectional curvature of the tangent plane.
  CHECK(std::abs(s.gauss_intrinsic - tangent_plane_ambient_curvature(0.6) -
                 s.gauss_closed_form) <= 1e-3);
  // Without a reference field the closed-form slot stays NaN.
  const CurvatureSample bare = curvature_sample(surface, lambda, 0.6, 0.9);
  CHECK(std::isnan(bare.gauss_closed_form));
}

TEST_CASE("shape operator coefficients") {
  const HelicoidModel& m = helicoid04();
  const VerificationReport on_axis = shape_operator_check(m, 0.0, 0.6);
  CHECK(on_axis.all_pass());
  const VerificationReport off_axis = shape_operator_check(m, 0.4, 0.6);
  CHECK(off_axis.all_pass());
  CHECK(off_axis.checks().size() >= 4);
}

TEST_CASE("verification report bookkeeping") {
  VerificationReport rep;
  rep.add("beta", 0.5, 1.0);
  rep.add("alpha", 2.0, 1.0, "at x");
  CHECK(!rep.all_pass());
  CHECK(rep.failure_count() == 1);
  CHECK(rep.max_residual() == 2.0);

  rep.sort_checks();
  CHECK(rep.checks().front().name == "alpha");
  const std::string text = rep.to_text();
  CHECK(text.find("alpha") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);

  // Scaling tolerances re-evaluates verdicts.
  rep.scale_tolerances(10.0);
  CHECK(rep.all_pass());

  // NaN residuals can never pass.
  VerificationReport nan_rep;
  nan_rep.add("nan", std::numeric_limits<double>::quiet_NaN(), 1.0);
  CHECK(!nan_rep.all_pass());

  VerificationReport other;
  other.add("gamma", 0.1, 1.0);
  nan_rep.merge(other);
  CHECK(nan_rep.checks().size() == 2);
  CHECK(nan_rep.failure_count() == 1);
}
