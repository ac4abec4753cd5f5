#include "solmin/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace solmin {
namespace {

std::size_t steps_for(double range, double step) {
  if (step <= 0.0) step = kDefaultOdeStep;
  const double raw = std::ceil(range / step - 1e-9);
  return raw < 1.0 ? 1 : static_cast<std::size_t>(raw);
}

// Fixed-step classical Runge-Kutta over N coupled components.  Stores the
// state and the exact rhs at every node so Hermite interpolation reproduces
// the rhs identically at grid points.
template <std::size_t N, class Rhs>
void rk4_forward(const Rhs& rhs, std::array<double, N> y, double v0, double h,
                 std::size_t steps, std::vector<std::array<double, N>>& ys,
                 std::vector<std::array<double, N>>& yps) {
  ys.assign(steps + 1, {});
  yps.assign(steps + 1, {});
  std::array<double, N> k1{}, k2{}, k3{}, k4{}, t{};
  rhs(v0, y, k1);
  ys[0] = y;
  yps[0] = k1;
  for (std::size_t n = 0; n < steps; ++n) {
    const double v = v0 + static_cast<double>(n) * h;
    k1 = yps[n];
    for (std::size_t j = 0; j < N; ++j) t[j] = y[j] + 0.5 * h * k1[j];
    rhs(v + 0.5 * h, t, k2);
    for (std::size_t j = 0; j < N; ++j) t[j] = y[j] + 0.5 * h * k2[j];
    rhs(v + 0.5 * h, t, k3);
    for (std::size_t j = 0; j < N; ++j) t[j] = y[j] + h * k3[j];
    rhs(v + h, t, k4);
    for (std::size_t j = 0; j < N; ++j)
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    rhs(v + h, y, k4);
    ys[n + 1] = y;
    yps[n + 1] = k4;
  }
}

enum class Parity { Odd, Even };

// Extend a forward solution on [0, (m-1)h] to [-(m-1)h, (m-1)h] by parity.
// The reference node sits exactly at v = 0, so mirrored grid points are
// bitwise negatives of each other.
OdeSolution mirrored(const std::vector<double>& y_fwd,
                     const std::vector<double>& yp_fwd, double h,
                     Parity parity) {
  const std::size_t m = y_fwd.size();
  std::vector<double> y(2 * m - 1), yp(2 * m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    y[m - 1 + i] = y_fwd[i];
    yp[m - 1 + i] = yp_fwd[i];
    if (parity == Parity::Odd) {
      y[m - 1 - i] = -y_fwd[i];
      yp[m - 1 - i] = yp_fwd[i];
    } else {
      y[m - 1 - i] = y_fwd[i];
      yp[m - 1 - i] = -yp_fwd[i];
    }
  }
  return OdeSolution(0.0, m - 1, h, std::move(y), std::move(yp));
}

template <std::size_t N>
std::vector<double> component(const std::vector<std::array<double, N>>& rows,
                              std::size_t j) {
  std::vector<double> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i][j];
  return out;
}

struct CatenoidRhs {
  double alpha;
  void operator()(double, const std::array<double, 3>& y,
                  std::array<double, 3>& dy) const {
    const double s = std::sin(2.0 * y[0]);
    const double rp = std::sqrt(1.0 - alpha * alpha * s * s);
    dy[0] = rp;
    dy[1] = -alpha * s;
    dy[2] = alpha * alpha * s / (1.0 + rp);
  }
};

struct HelicoidRhs {
  double K;
  void operator()(double, const std::array<double, 2>& y,
                  std::array<double, 2>& dy) const {
    const double bp = std::sqrt(1.0 - K * std::cos(2.0 * y[0]));
    dy[0] = bp;
    dy[1] = K / (1.0 + bp);
  }
};

void require_unit_band(double c, const char* name) {
  if (!(std::abs(c) < 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in (-1, 1)");
}

}  // namespace

OdeSolution::OdeSolution(double v_ref, std::size_t i_ref, double h,
                         std::vector<double> y, std::vector<double> yp)
    : v_ref_(v_ref),
      i_ref_(i_ref),
      h_(h),
      count_(y.size()),
      y_(std::move(y)),
      yp_(std::move(yp)) {
  if (count_ < 2 || yp_.size() != count_ || !(h_ > 0.0) || i_ref_ >= count_)
    throw std::invalid_argument("OdeSolution: malformed grid");
}

std::size_t OdeSolution::locate(double v) const {
  const double slack = h_ * 1e-6;
  if (v < v_min() - slack || v > v_max() + slack)
    throw std::domain_error("OdeSolution: evaluation outside grid");
  const double s =
      (v - v_ref_) / h_ + static_cast<double>(i_ref_);
  auto i = static_cast<std::ptrdiff_t>(std::floor(s));
  i = std::clamp<std::ptrdiff_t>(i, 0,
                                 static_cast<std::ptrdiff_t>(count_) - 2);
  return static_cast<std::size_t>(i);
}

double OdeSolution::value(double v) const {
  const std::size_t i = locate(v);
  const double t = (v - node(i)) / h_;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h01 * y_[i + 1] +
         h_ * (h10 * yp_[i] + h11 * yp_[i + 1]);
}

double OdeSolution::derivative(double v) const {
  const std::size_t i = locate(v);
  const double t = (v - node(i)) / h_;
  const double t2 = t * t;
  const double d00 = 6.0 * t2 - 6.0 * t;
  const double d10 = 3.0 * t2 - 4.0 * t + 1.0;
  const double d01 = -6.0 * t2 + 6.0 * t;
  const double d11 = 3.0 * t2 - 2.0 * t;
  return (d00 * y_[i] + d01 * y_[i + 1]) / h_ + d10 * yp_[i] +
         d11 * yp_[i + 1];
}

OdeSolution integrate(const std::function<double(double, double)>& rhs,
                      double y0, double v_min, double v_max, double step) {
  if (!(v_max > v_min))
    throw std::invalid_argument("integrate: empty interval");
  const std::size_t steps = steps_for(v_max - v_min, step);
  const double h = (v_max - v_min) / static_cast<double>(steps);
  auto sys = [&rhs](double v, const std::array<double, 1>& y,
                    std::array<double, 1>& dy) { dy[0] = rhs(v, y[0]); };
  std::vector<std::array<double, 1>> ys, yps;
  rk4_forward<1>(sys, {y0}, v_min, h, steps, ys, yps);
  return OdeSolution(v_min, 0, h, component<1>(ys, 0), component<1>(yps, 0));
}

namespace {

// QUADPACK 15-point Kronrod abscissae on [-1, 1] (positive half) and the
// matching Kronrod / embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr std::array<double, 4> kWg = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct PanelResult {
  double kronrod;
  double gauss;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[7] * fc;
  double g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = r * kXgk[j];
    const double s = f(c - x) + f(c + x);
    k += kWgk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {k * r, g * r};
}

}  // namespace

QuadratureResult quadrature(const std::function<double(double)>& f, double a,
                            double b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature: tol must be > 0");
  if (a == b) return {0.0, 0.0, 0};
  struct Seg {
    double a, b, tol;
    int depth;
  };
  std::vector<Seg> stack{{a, b, tol, 0}};
  QuadratureResult out;
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    const PanelResult p = gk15(f, s.a, s.b);
    out.evaluations += 15;
    const double err = std::abs(p.kronrod - p.gauss);
    if (err <= s.tol || s.depth >= 52) {
      if (s.depth >= 52 && err > s.tol)
        throw std::runtime_error("quadrature: failed to converge");
      out.value += p.kronrod;
      out.error_estimate += err;
      continue;
    }
    const double m = 0.5 * (s.a + s.b);
    stack.push_back({s.a, m, 0.5 * s.tol, s.depth + 1});
    stack.push_back({m, s.b, 0.5 * s.tol, s.depth + 1});
  }
  return out;
}

double find_period(const OdeSolution& sol, double target) {
  double lo = sol.v_min();
  double hi = sol.v_max();
  if (!(sol.value(lo) < target) || !(sol.value(hi) > target))
    throw std::invalid_argument("find_period: target not bracketed by grid");
  while (hi - lo > kPeriodBisectionTol) {
    const double mid = 0.5 * (lo + hi);
    if (sol.value(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

OdeSolution solve_b(double K, double v_max, double step) {
  require_unit_band(K, "K");
  if (!(v_max > 0.0)) throw std::invalid_argument("solve_b: v_max must be > 0");
  const std::size_t steps = steps_for(v_max, step);
  const double h = v_max / static_cast<double>(steps);
  std::vector<std::array<double, 2>> ys, yps;
  rk4_forward<2>(HelicoidRhs{K}, {0.0, 0.0}, 0.0, h, steps, ys, yps);
  return mirrored(component<2>(ys, 0), component<2>(yps, 0), h, Parity::Odd);
}

OdeSolution solve_rho(double alpha, double v_max, double step) {
  require_unit_band(alpha, "alpha");
  if (!(v_max > 0.0))
    throw std::invalid_argument("solve_rho: v_max must be > 0");
  const std::size_t steps = steps_for(v_max, step);
  const double h = v_max / static_cast<double>(steps);
  std::vector<std::array<double, 3>> ys, yps;
  rk4_forward<3>(CatenoidRhs{alpha}, {0.0, 0.0, 0.0}, 0.0, h, steps, ys, yps);
  return mirrored(component<3>(ys, 0), component<3>(yps, 0), h, Parity::Odd);
}

namespace {

// Re-run the coupled catenoid system on the positive half of rho's grid and
// return one even component.  The rho component of the coupled system
// reproduces the input solution bit for bit, so the pieces stay consistent.
OdeSolution catenoid_component(double alpha, const OdeSolution& rho,
                               std::size_t j) {
  require_unit_band(alpha, "alpha");
  if (rho.node_count() < 3 || rho.node_count() % 2 == 0 ||
      rho.node_value(rho.node_count() / 2) != 0.0)
    throw std::invalid_argument("catenoid ode: rho grid not symmetric");
  const std::size_t steps = rho.node_count() / 2;
  const double h = rho.step();
  std::vector<std::array<double, 3>> ys, yps;
  rk4_forward<3>(CatenoidRhs{alpha}, {0.0, 0.0, 0.0}, 0.0, h, steps, ys, yps);
  return mirrored(component<3>(ys, j), component<3>(yps, j), h, Parity::Even);
}

}  // namespace

OdeSolution solve_gamma(double alpha, const OdeSolution& rho) {
  return catenoid_component(alpha, rho, 1);
}

OdeSolution accumulate_F(double alpha, const OdeSolution& rho) {
  return catenoid_component(alpha, rho, 2);
}

HelicoidOdes solve_helicoid_odes(double K, double v_max, double step) {
  require_unit_band(K, "K");
  if (K == 0.0)
    throw std::invalid_argument("solve_helicoid_odes: K must be nonzero");
  if (step <= 0.0) step = kDefaultOdeStep;

  // Phase 1: locate W on a forward run.  b' >= sqrt(1 - |K|) bounds W by
  // pi/sqrt(1 - |K|); two extra steps keep the bracket strict.
  const double cap = std::numbers::pi / std::sqrt(1.0 - std::abs(K));
  std::size_t steps1 = steps_for(cap, step) + 2;
  const double h1 = cap / static_cast<double>(steps1 - 2);
  std::vector<std::array<double, 2>> ys, yps;
  rk4_forward<2>(HelicoidRhs{K}, {0.0, 0.0}, 0.0, h1, steps1, ys, yps);
  const OdeSolution b_fwd(0.0, 0, h1, component<2>(ys, 0),
                          component<2>(yps, 0));
  double W = find_period(b_fwd, std::numbers::pi);

  // Phase 2: symmetric grid out to the requested range (default one full
  // vertical period's worth of quarter turns).
  const double range = v_max > 0.0 ? v_max : 4.0 * W;
  const std::size_t steps2 = steps_for(range, step);
  const double h2 = range / static_cast<double>(steps2);
  rk4_forward<2>(HelicoidRhs{K}, {0.0, 0.0}, 0.0, h2, steps2, ys, yps);
  HelicoidOdes out;
  out.b = mirrored(component<2>(ys, 0), component<2>(yps, 0), h2, Parity::Odd);
  out.x3 =
      mirrored(component<2>(ys, 1), component<2>(yps, 1), h2, Parity::Odd);
  out.W = range > W ? find_period(out.b, std::numbers::pi) : W;
  return out;
}

CatenoidOdes solve_catenoid_odes(double alpha, double v_max, double step) {
  require_unit_band(alpha, "alpha");
  if (step <= 0.0) step = kDefaultOdeStep;

  const double cap = std::numbers::pi / std::sqrt(1.0 - alpha * alpha);
  std::size_t steps1 = steps_for(cap, step) + 2;
  const double h1 = cap / static_cast<double>(steps1 - 2);
  std::vector<std::array<double, 3>> ys, yps;
  rk4_forward<3>(CatenoidRhs{alpha}, {0.0, 0.0, 0.0}, 0.0, h1, steps1, ys,
                 yps);
  const OdeSolution rho_fwd(0.0, 0, h1, component<3>(ys, 0),
                            component<3>(yps, 0));
  double V = find_period(rho_fwd, std::numbers::pi);

  const double range = v_max > 0.0 ? v_max : 4.0 * V;
  const std::size_t steps2 = steps_for(range, step);
  const double h2 = range / static_cast<double>(steps2);
  rk4_forward<3>(CatenoidRhs{alpha}, {0.0, 0.0, 0.0}, 0.0, h2, steps2, ys,
                 yps);
  CatenoidOdes out;
  out.rho =
      mirrored(component<3>(ys, 0), component<3>(yps, 0), h2, Parity::Odd);
  out.gamma =
      mirrored(component<3>(ys, 1), component<3>(yps, 1), h2, Parity::Even);
  out.F =
      mirrored(component<3>(ys, 2), component<3>(yps, 2), h2, Parity::Even);
  out.V = range > V ? find_period(out.rho, std::numbers::pi) : V;
  return out;
}

}  // namespace solmin
