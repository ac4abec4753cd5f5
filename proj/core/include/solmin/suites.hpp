#pragma once

#include "solmin/report.hpp"

namespace solmin {

/// Per-surface verification suites.  Each builds the required models, runs
/// every check the surface supports (ODE structure, periods against
/// quadrature oracles, conformality, harmonicity of the Gauss map, Hopf
/// differential, finite-difference mean curvature, curvature closed forms,
/// symmetries, sections, limits) and returns the merged report.
///
/// tol_scale multiplies every tolerance after the checks run; it exists for
/// negative controls (a tiny scale must make the suite fail) and must be
/// left at 1.0 for real verification.
VerificationReport verify_helicoid(double K, double tol_scale = 1.0);
VerificationReport verify_catenoid(double alpha, double tol_scale = 1.0);
VerificationReport verify_graph_surface(double tol_scale = 1.0);
VerificationReport verify_plane_limit(double tol_scale = 1.0);

}  // namespace solmin
