#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace solmin {

/// Default fixed step: 2^16 nodes per unit pi of integration range.
inline constexpr double kDefaultOdeStep = std::numbers::pi / 65536.0;
inline constexpr double kPeriodBisectionTol = 1e-12;

/// Dense output of a fixed-step integration: values on a uniform grid with
/// the exact right-hand side stored as derivative at every node, joined by
/// cubic Hermite interpolation (C^1).  Evaluation outside the grid throws.
class OdeSolution {
 public:
  OdeSolution() = default;
  OdeSolution(double v_ref, std::size_t i_ref, double h, std::vector<double> y,
              std::vector<double> yp);

  double value(double v) const;
  /// Derivative of the interpolant; at nodes it equals the stored rhs.
  double derivative(double v) const;

  double v_min() const { return node(0); }
  double v_max() const { return node(count_ - 1); }
  double step() const { return h_; }
  std::size_t node_count() const { return count_; }
  double node(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(i_ref_)) * h_ + v_ref_;
  }
  double node_value(std::size_t i) const { return y_[i]; }
  double node_derivative(std::size_t i) const { return yp_[i]; }

 private:
  std::size_t locate(double v) const;

  double v_ref_ = 0.0;
  std::size_t i_ref_ = 0;
  double h_ = 1.0;
  std::size_t count_ = 0;
  std::vector<double> y_, yp_;
};

/// Classical 4th-order integration of y' = rhs(v, y), y(v_min) = y0, on a
/// uniform grid.  step <= 0 selects the default grid density.
OdeSolution integrate(const std::function<double(double, double)>& rhs,
                      double y0, double v_min, double v_max, double step);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7,15) quadrature.  The estimate sums the
/// embedded-rule differences of the accepted intervals, which bounds the
/// error of the returned Kronrod value for smooth integrands.
QuadratureResult quadrature(const std::function<double(double)>& f, double a,
                            double b, double tol);

/// First v with sol.value(v) == target for a strictly increasing solution,
/// located by bisection to absolute tolerance 1e-12.
double find_period(const OdeSolution& sol, double target);

/// Helicoid angle: b' = sqrt(1 - K cos 2b), b(0) = 0, |K| < 1, extended to
/// the symmetric grid [-v_max, v_max] by oddness.
OdeSolution solve_b(double K, double v_max, double step = 0.0);

/// Catenoid angle: rho' = sqrt(1 - alpha^2 sin^2 2rho), rho(0) = 0, odd.
OdeSolution solve_rho(double alpha, double v_max, double step = 0.0);

/// gamma' = -alpha sin 2rho, gamma(0) = 0, even; integrated coupled with
/// rho on rho's grid.
OdeSolution solve_gamma(double alpha, const OdeSolution& rho);

/// F' = alpha^2 sin(2rho)/(1 + rho'), F(0) = 0, even; integrated coupled
/// with rho on rho's grid rather than by post-hoc quadrature.
OdeSolution accumulate_F(double alpha, const OdeSolution& rho);

struct HelicoidOdes {
  OdeSolution b;
  OdeSolution x3;
  double W = 0.0;  // b(W) = pi
};

/// Coupled (b, x3) system with x3' = K/(1 + b'); v_max <= 0 selects 4W.
HelicoidOdes solve_helicoid_odes(double K, double v_max = 0.0,
                                 double step = 0.0);

struct CatenoidOdes {
  OdeSolution rho;
  OdeSolution gamma;
  OdeSolution F;
  double V = 0.0;  // rho(V) = pi
};

/// Coupled (rho, gamma, F) system; v_max <= 0 selects 4V.
CatenoidOdes solve_catenoid_odes(double alpha, double v_max = 0.0,
                                 double step = 0.0);

}  // namespace solmin
