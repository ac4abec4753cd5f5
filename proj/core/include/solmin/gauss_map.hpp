#pragma once

#include <array>
#include <complex>

#include "solmin/sol3.hpp"

namespace solmin {

/// Pointwise Gauss-map data at one parameter point z = u + iv: the
/// stereographic value g and its Wirtinger derivatives.
struct GaussSample {
  std::complex<double> g;
  std::complex<double> g_z;
  std::complex<double> g_zbar;
  std::complex<double> g_zzbar;
};

/// Unit normal from the stereographic value (projection from the south pole
/// of the fiber sphere): N = (2 Re g, 2 Im g, 1 - |g|^2) / (1 + |g|^2),
/// components in the orthonormal left-invariant frame at `base`.
FrameVector normal_from_gauss(std::complex<double> g,
                              const Sol3Point& base = {});

/// Inverse of normal_from_gauss for unit N; throws std::domain_error where
/// the chart degenerates (N3 = -1).
std::complex<double> gauss_from_normal(const FrameVector& N);

/// Absolute residual of the harmonicity equation satisfied by Gauss maps of
/// minimal surfaces, in cleared-denominator form:
///   (g^2 - conj(g)^2) g_zzbar - 2 g g_z g_zbar.
double harmonic_residual(const GaussSample& s);

/// Holomorphic Hopf-type quantity q = g_z conj(g_zbar) / (g^2 - conj(g)^2),
/// constant on each surface of the families treated here.  Throws
/// std::domain_error where the denominator vanishes exactly.
std::complex<double> hopf_q(const GaussSample& s);

/// Derivatives (x1_z, x2_z, x3_z) of the conformal minimal immersion
/// recovered from its Gauss value and its height x3:
///   x1_z = e^{-x3} (conj(g)^2 - 1) g_z / (g^2 - conj(g)^2)
///   x2_z = i e^{x3} (conj(g)^2 + 1) g_z / (g^2 - conj(g)^2)
///   x3_z = 2 conj(g) g_z / (g^2 - conj(g)^2)
/// Throws std::domain_error where the denominator vanishes exactly.
std::array<std::complex<double>, 3> representation_rhs(const GaussSample& s,
                                                       double x3);

/// The closure operations on Gauss data: each takes solutions of the
/// harmonicity equation to solutions.
GaussSample scaled_by_i(const GaussSample& s);
GaussSample reciprocal(const GaussSample& s);  // throws on g == 0
GaussSample conjugated(const GaussSample& s);

}  // namespace solmin
