#pragma once

#include <functional>

#include "solmin/jet.hpp"
#include "solmin/report.hpp"
#include "solmin/sol3.hpp"

namespace solmin {

class HelicoidModel;

using SurfaceEvaluator = std::function<Sol3Point(double, double)>;
using ScalarField = std::function<double(double, double)>;

/// Central-difference jet from position evaluations alone: nine-point
/// stencil, coordinate partials converted to frame components at the center,
/// normal from the cross product, conformal factor as the mean of the two
/// squared partial norms.  h must lie in [1e-6, 1e-3]; the O(h^2) truncation
/// and O(eps/h^2) rounding balance near h = 1e-4.  Throws on non-finite
/// surface evaluations.
ImmersionJet fd_jet(const SurfaceEvaluator& surface, double u, double v,
                    double h = 1e-4);

/// max(|<x_u,x_v>|, | |x_u|^2 - lambda |, | |x_v|^2 - lambda |).
double conformality_residual(const ImmersionJet& jet);

/// Mean curvature H = (<D_u x_u, N> + <D_v x_v, N>) / (2 lambda) with the
/// ambient covariant second derivatives, from an FD jet.  Requires near
/// conformality (residual <= 1e-4 lambda): the formula is only valid for
/// conformal parametrizations, so a violation flags an upstream bug.
double mean_curvature(const SurfaceEvaluator& surface, double u, double v,
                      double h = 1e-4);

/// Intrinsic curvature of the conformal metric lambda |dz|^2:
/// -laplacian(ln lambda) / (2 lambda), five-point stencil.  Throws
/// std::domain_error unless lambda > 0 on the stencil.
double intrinsic_gauss_curvature(const ScalarField& lambda_field, double u,
                                 double v, double h = 1e-4);

/// Pointwise curvature bundle from finite differences: mean curvature, the
/// intrinsic Gauss curvature of lambda, the normal components of the
/// covariant second derivatives (second fundamental form), and the area
/// density.  gauss_closed_form is copied from `reference` when supplied and
/// NaN otherwise.
struct CurvatureSample {
  double H = 0.0;
  double gauss_intrinsic = 0.0;
  double gauss_closed_form = 0.0;
  double ii_uu = 0.0, ii_uv = 0.0, ii_vv = 0.0;
  double area_density = 0.0;
};
CurvatureSample curvature_sample(const SurfaceEvaluator& surface,
                                 const ScalarField& lambda_field, double u,
                                 double v, double h = 1e-4,
                                 const ScalarField& reference = {});

/// FD covariant derivatives of the helicoid unit normal along x_u and x_v,
/// decomposed in the (x_u, x_v) tangent basis, against the closed-form
/// shape-operator coefficients
///   a11 = -sin 2b tanh u,  a12 = a21 = (1+b')/(K cosh^2 u) - cos 2b,
///   a22 = sin 2b tanh u,
/// plus tracelessness.  Tolerance 1e-4 per coefficient.
VerificationReport shape_operator_check(const HelicoidModel& m, double u,
                                        double v, double h = 1e-4);

}  // namespace solmin
