#include "solmin/gauss_map.hpp"

#include <cmath>
#include <stdexcept>

namespace solmin {
namespace {

std::complex<double> denom(const GaussSample& s) {
  const std::complex<double> gb = std::conj(s.g);
  return s.g * s.g - gb * gb;
}

}  // namespace

FrameVector normal_from_gauss(std::complex<double> g, const Sol3Point& base) {
  const double a = std::norm(g);
  const double w = 1.0 + a;
  return FrameVector{base, 2.0 * g.real() / w, 2.0 * g.imag() / w,
                     (1.0 - a) / w};
}

std::complex<double> gauss_from_normal(const FrameVector& N) {
  const double w = 1.0 + N.f3;
  if (!(w > 0.0))
    throw std::domain_error("gauss_from_normal: chart degenerates at N3=-1");
  return {N.f1 / w, N.f2 / w};
}

double harmonic_residual(const GaussSample& s) {
  return std::abs(denom(s) * s.g_zzbar - 2.0 * s.g * s.g_z * s.g_zbar);
}

std::complex<double> hopf_q(const GaussSample& s) {
  const std::complex<double> d = denom(s);
  if (std::abs(d) == 0.0)
    throw std::domain_error("hopf_q: g^2 - conj(g)^2 vanishes");
  return s.g_z * std::conj(s.g_zbar) / d;
}

std::array<std::complex<double>, 3> representation_rhs(const GaussSample& s,
                                                       double x3) {
  const std::complex<double> d = denom(s);
  if (std::abs(d) == 0.0)
    throw std::domain_error("representation_rhs: g^2 - conj(g)^2 vanishes");
  const std::complex<double> gb2 = std::conj(s.g) * std::conj(s.g);
  const std::complex<double> f = s.g_z / d;
  return {std::exp(-x3) * (gb2 - 1.0) * f,
          std::complex<double>(0.0, 1.0) * std::exp(x3) * (gb2 + 1.0) * f,
          2.0 * std::conj(s.g) * f};
}

GaussSample scaled_by_i(const GaussSample& s) {
  const std::complex<double> i(0.0, 1.0);
  return {i * s.g, i * s.g_z, i * s.g_zbar, i * s.g_zzbar};
}

GaussSample reciprocal(const GaussSample& s) {
  if (std::abs(s.g) == 0.0)
    throw std::domain_error("reciprocal: g vanishes");
  const std::complex<double> g2 = s.g * s.g;
  return {1.0 / s.g, -s.g_z / g2, -s.g_zbar / g2,
          -s.g_zzbar / g2 + 2.0 * s.g_z * s.g_zbar / (g2 * s.g)};
}

GaussSample conjugated(const GaussSample& s) {
  return {std::conj(s.g), std::conj(s.g_zbar), std::conj(s.g_z),
          std::conj(s.g_zzbar)};
}

}  // namespace solmin
