#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "solmin/gauss_map.hpp"
#include "solmin/jet.hpp"
#include "solmin/ode.hpp"
#include "solmin/report.hpp"
#include "solmin/sol3.hpp"

namespace solmin {

/// One horizontal section {x3 = level} of a catenoid, sampled uniformly in
/// the curve parameter t over [0, 2V) (half-open, so the closed polyline has
/// no duplicate vertex).  c1, c2 are the section coordinates, dc1, dc2 their
/// closed-form t-derivatives, rho the profile angle at each sample.
struct SectionCurve {
  double level = 0.0;
  double alpha = 0.0;
  double V = 0.0;
  std::vector<double> t, c1, c2, dc1, dc2, rho;
};

/// Minimal catenoid of parameter alpha, 0 < |alpha| < 1: a properly embedded
/// annulus, 2V-periodic in v, whose horizontal sections are closed convex
/// curves.  The profile solves rho' = sqrt(1 - alpha^2 sin^2 2rho),
/// gamma' = -alpha sin 2rho, F' = alpha^2 sin 2rho / (1 + rho'), all zero at
/// v = 0, and V is the shift with rho(v + V) = rho(v) + pi.
class CatenoidModel {
 public:
  /// v_max <= 0 selects the default grid [-4V, 4V]; step <= 0 selects
  /// kDefaultOdeStep.  Rejects alpha = 0 (the image degenerates to a point)
  /// and |alpha| >= 1.
  static CatenoidModel build(double alpha, double v_max = 0.0,
                             double step = 0.0);

  double parameter() const { return alpha_; }
  double period_V() const { return odes_.V; }
  double v_min() const { return odes_.rho.v_min(); }
  double v_max() const { return odes_.rho.v_max(); }

  const OdeSolution& rho() const { return odes_.rho; }
  const OdeSolution& gamma() const { return odes_.gamma; }
  const OdeSolution& F() const { return odes_.F; }

  /// Evaluation outside the built v-grid throws std::domain_error.
  /// The x1, x2 brackets are the u-antiderivatives of the representation
  /// equations, so the Gauss map of the image is exactly g below;
  /// x(0,0) = (0, alpha/(1-alpha^2), 0).
  Sol3Point immerse(double u, double v) const;
  /// Analytic first and second partials (frame components) plus unit normal
  /// and conformal factor.
  ImmersionJet jet(double u, double v) const;
  /// g = -i e^{-u-gamma} e^{i rho} with its Wirtinger derivatives.
  GaussSample gauss_sample(double u, double v) const;
  FrameVector normal(double u, double v) const;
  /// lambda = 2 alpha^2 / (1 + rho') cosh^2(u + gamma).
  double lambda(double u, double v) const;

  /// The section {x3 = level} as the curve t -> x(u(t) + it) with
  /// u(t) = (level - F(t)) / alpha; samples must be even and >= 4.
  SectionCurve section(double level, int samples = 512) const;
  std::array<double, 2> section_point(double level, double t) const;
  /// Closed-form derivative of the section curve:
  ///   c1' = -(e^{-level}/alpha) (F'^2 + alpha^2) cos rho cosh(u(t) + gamma)
  ///   c2' = -(e^{+level}/alpha) (F'^2 + alpha^2) sin rho cosh(u(t) + gamma).
  std::array<double, 2> section_derivative(double level, double t) const;

  /// Max deviation over a seeded random sample of the three point
  /// symmetries x(u+i(v+V)) = sigma^2 x(u+iv), x(u-iv) = tau x(u+iv),
  /// x(u+i(-v+V)) = sigma^2 tau x(u+iv); one check per identity.
  VerificationReport symmetry_check(
      int samples = 100, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) const;

 private:
  CatenoidModel(double alpha, CatenoidOdes odes);

  /// Profile data at fixed v via the closed-form relations
  /// rho'' = -2 alpha^2 sin 2rho cos 2rho, gamma'' = -2 alpha rho' cos 2rho,
  /// F'' = 2 alpha^2 cos 2rho / (1 + rho').
  struct Profile {
    double rho, rp;
    double gamma, gp;
    double F, Fp, Fpp;
  };
  Profile profile(double v) const;

  double alpha_;
  CatenoidOdes odes_;
};

/// V as the quadrature int_0^pi ds / sqrt(1 - alpha^2 sin^2 2s); defined for
/// |alpha| < 1 including alpha = 0 (value pi).
double period_V_integral(double alpha);

/// Convexity and embeddedness certificate for one sampled section:
///  - c1' keeps the sign opposite to alpha on the open half-period
///  - the flattened slope e^{-2 level} dc2/dc1 equals tan rho and is
///    strictly increasing across the half-period
///  - central symmetry c(t + V) = -c(t)
///  - cross products of consecutive polyline edges keep one sign
///  - the speed never vanishes.
/// Requires an even sample count >= 64.
VerificationReport convexity_certificate(const SectionCurve& c);

/// Max deviation of x_{-alpha}(-u + iv) = sigma^2 x_alpha(u + iv) over a
/// seeded random sample; `minus` must be built with the negated parameter.
VerificationReport catenoid_parameter_reflection_check(
    const CatenoidModel& plus, const CatenoidModel& minus, int samples = 100,
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace solmin
