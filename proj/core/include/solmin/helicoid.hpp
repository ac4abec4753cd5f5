#pragma once

#include <cstdint>

#include "solmin/gauss_map.hpp"
#include "solmin/jet.hpp"
#include "solmin/ode.hpp"
#include "solmin/report.hpp"
#include "solmin/sol3.hpp"

namespace solmin {

/// Minimal helicoid of parameter K, 0 < |K| < 1.  The profile angle solves
/// b' = sqrt(1 - K cos 2b), b(0) = 0, the height solves x3' = K/(1 + b'),
/// x3(0) = 0, and W is the shift with b(v + W) = b(v) + pi.  The surface
/// contains the x3-axis, meets every horizontal plane in a straight line,
/// and is invariant under the vertical screw motion by (0, 0, 2 x3(W)).
class HelicoidModel {
 public:
  /// v_max <= 0 selects the default grid [-4W, 4W]; step <= 0 selects
  /// kDefaultOdeStep.  Rejects K = 0 (the image degenerates to a point)
  /// and |K| >= 1.
  static HelicoidModel build(double K, double v_max = 0.0, double step = 0.0);

  double parameter() const { return K_; }
  double period_W() const { return odes_.W; }
  /// x3(W); doubling it gives the screw period.
  double height_at_W() const { return x3_at_W_; }
  double period_T() const { return 2.0 * x3_at_W_; }
  double v_min() const { return odes_.b.v_min(); }
  double v_max() const { return odes_.b.v_max(); }

  const OdeSolution& b() const { return odes_.b; }
  const OdeSolution& x3() const { return odes_.x3; }

  /// Evaluation outside the built v-grid throws std::domain_error.
  Sol3Point immerse(double u, double v) const;
  /// Analytic first and second partials (frame components) plus unit normal
  /// and conformal factor.
  ImmersionJet jet(double u, double v) const;
  /// g = e^{-u} e^{i(b - pi/4)} with its Wirtinger derivatives.
  GaussSample gauss_sample(double u, double v) const;
  FrameVector normal(double u, double v) const;
  /// lambda = (K/(1 + b'))^2 cosh^2 u.
  double lambda(double u, double v) const;
  /// -1 + (1/cosh^2 u)(2(1+b')cos 2b/K - (1+b')^2/(K^2 cosh^2 u)
  /// + sin^2 2b).  Algebraically this is the determinant of the shape
  /// operator (the extrinsic curvature); the ambient space is curved, so
  /// the intrinsic curvature of the induced metric exceeds it by
  /// tangent_plane_ambient_curvature(u) (Gauss equation).  Tends to -1 as
  /// |u| grows: far from the axis the surface hugs horizontal planes,
  /// whose shape determinant is -1.
  double gauss_curvature_closed_form(double u, double v) const;

  /// Max deviation over a seeded random sample of the three point
  /// symmetries x(-u+iv) = sigma^2 x(u+iv), x(u-iv) = sigma tau x(u+iv),
  /// x(-u-iv) = sigma^3 tau x(u+iv); one check per identity.
  VerificationReport symmetry_check(
      int samples = 100, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) const;

 private:
  HelicoidModel(double K, HelicoidOdes odes);

  /// Profile data at fixed v: b, its first two derivatives, m = x3' with its
  /// first two derivatives, and x3 itself, all via the closed-form relations
  /// b'' = K sin 2b, m' = -m^2 sin 2b, m'' = -2 m m' sin 2b - 2 m^2 b' cos 2b.
  struct Profile {
    double b, bp, bpp;
    double m, mp, mpp;
    double x3;
  };
  Profile profile(double v) const;

  double K_;
  HelicoidOdes odes_;
  double x3_at_W_;
};

/// W as the quadrature int_0^pi ds / sqrt(1 - K cos 2s); defined for
/// |K| < 1 including K = 0 (value pi).
double period_W_integral(double K);

/// x3(W) as the quadrature K int_0^pi ds / (sqrt(1 - K cos 2s)
/// (1 + sqrt(1 - K cos 2s))); strictly increasing in K on [0, 1).
double height_at_W_integral(double K);

/// The unique K in (0,1) whose screw period 2 x3(W) equals T, by bisection
/// on the strictly increasing period map.  Requires T > 0; throws
/// std::runtime_error if T exceeds the numerically reachable range.
double invert_period(double T);

/// Sectional curvature of the ambient space along the helicoid's tangent
/// plane at parameter u: 1 - 2/cosh^2 u.  The unit normal splits into a
/// horizontal part of squared norm 1/cosh^2 u and a vertical part; planes
/// containing the vertical direction have ambient curvature -1 and
/// horizontal planes +1, and the curvature tensor is diagonal in the
/// left-invariant frame, so the section constant interpolates between them.
double tangent_plane_ambient_curvature(double u);

/// Integral of the closed-form curvature over {|u| <= U, 0 <= v <= 2W}
/// against the area element lambda du dv.  The u-integral is closed-form,
/// leaving one adaptive quadrature in v.  Strictly decreasing in U and
/// unbounded below.
double total_curvature(const HelicoidModel& m, double U);

/// Max deviation of x_{-K}(u+iv) = (0,0,x3_K(W/2)) * sigma^3 x_K(u+i(v+W/2))
/// over a seeded random sample; `minus` must be built with the negated
/// parameter.
VerificationReport helicoid_parameter_reflection_check(
    const HelicoidModel& plus, const HelicoidModel& minus, int samples = 100,
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace solmin
