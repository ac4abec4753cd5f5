#include "solmin/sol3.hpp"

#include <cmath>
#include <stdexcept>

#include "solmin/jet.hpp"

namespace solmin {

Sol3Point group_mul(const Sol3Point& x, const Sol3Point& y) {
  return {y.x1 * std::exp(-x.x3) + x.x1, y.x2 * std::exp(x.x3) + x.x2,
          x.x3 + y.x3};
}

Sol3Point group_inv(const Sol3Point& x) {
  return {-x.x1 * std::exp(x.x3), -x.x2 * std::exp(-x.x3), -x.x3};
}

double metric(const Sol3Point& p, const CoordVector& X, const CoordVector& Y) {
  assert(same_point(p, X.base) && same_point(p, Y.base));
  const double e2 = std::exp(2.0 * p.x3);
  return e2 * X.a1 * Y.a1 + (X.a2 * Y.a2) / e2 + X.a3 * Y.a3;
}

double dot(const FrameVector& X, const FrameVector& Y) {
  assert(same_point(X.base, Y.base));
  return X.f1 * Y.f1 + X.f2 * Y.f2 + X.f3 * Y.f3;
}

double norm(const FrameVector& X) { return std::sqrt(dot(X, X)); }

FrameVector cross(const FrameVector& X, const FrameVector& Y) {
  assert(same_point(X.base, Y.base));
  return {X.base, X.f2 * Y.f3 - X.f3 * Y.f2, X.f3 * Y.f1 - X.f1 * Y.f3,
          X.f1 * Y.f2 - X.f2 * Y.f1};
}

FrameVector scaled(const FrameVector& X, double s) {
  return {X.base, s * X.f1, s * X.f2, s * X.f3};
}

FrameVector added(const FrameVector& X, const FrameVector& Y) {
  assert(same_point(X.base, Y.base));
  return {X.base, X.f1 + Y.f1, X.f2 + Y.f2, X.f3 + Y.f3};
}

FrameVector coord_to_frame(const Sol3Point& p, const CoordVector& X) {
  assert(same_point(p, X.base));
  const double e = std::exp(p.x3);
  return {p, e * X.a1, X.a2 / e, X.a3};
}

CoordVector frame_to_coord(const Sol3Point& p, const FrameVector& X) {
  assert(same_point(p, X.base));
  const double e = std::exp(p.x3);
  return {p, X.f1 / e, X.f2 * e, X.f3};
}

Sol3Point isotropy_apply(Isotropy s, const Sol3Point& p) {
  switch (s) {
    case Isotropy::Identity:  return {p.x1, p.x2, p.x3};
    case Isotropy::Sigma:     return {p.x2, -p.x1, -p.x3};
    case Isotropy::Sigma2:    return {-p.x1, -p.x2, p.x3};
    case Isotropy::Sigma3:    return {-p.x2, p.x1, -p.x3};
    case Isotropy::Tau:       return {-p.x1, p.x2, p.x3};
    case Isotropy::SigmaTau:  return {p.x2, p.x1, -p.x3};
    case Isotropy::Sigma2Tau: return {p.x1, -p.x2, p.x3};
    case Isotropy::Sigma3Tau: return {-p.x2, -p.x1, -p.x3};
  }
  throw std::invalid_argument("isotropy_apply: bad element");
}

Isotropy isotropy_compose(Isotropy a, Isotropy b) {
  // The words act exactly on the probe (1,2,3); match the composite image.
  const Sol3Point probe{1.0, 2.0, 3.0};
  const Sol3Point image = isotropy_apply(a, isotropy_apply(b, probe));
  for (Isotropy s : kIsotropies) {
    if (same_point(isotropy_apply(s, probe), image)) return s;
  }
  throw std::logic_error("isotropy_compose: group not closed");
}

CoordVector isotropy_pushforward(Isotropy s, const CoordVector& X) {
  const Sol3Point base = isotropy_apply(s, X.base);
  const Sol3Point v = isotropy_apply(s, {X.a1, X.a2, X.a3});
  return {base, v.x1, v.x2, v.x3};
}

const char* isotropy_name(Isotropy s) {
  switch (s) {
    case Isotropy::Identity:  return "id";
    case Isotropy::Sigma:     return "sigma";
    case Isotropy::Sigma2:    return "sigma^2";
    case Isotropy::Sigma3:    return "sigma^3";
    case Isotropy::Tau:       return "tau";
    case Isotropy::SigmaTau:  return "sigma.tau";
    case Isotropy::Sigma2Tau: return "sigma^2.tau";
    case Isotropy::Sigma3Tau: return "sigma^3.tau";
  }
  return "?";
}

Sol3Point isometry_apply(const Isometry& m, const Sol3Point& p) {
  return group_mul(m.translation, isotropy_apply(m.rotation, p));
}

const ConnectionTable& connection_table() {
  static const ConnectionTable table = [] {
    ConnectionTable t{};
    t.gamma[0][0][2] = -1.0;  // ∇_{E1}E1 = -E3
    t.gamma[1][1][2] = 1.0;   // ∇_{E2}E2 =  E3
    t.gamma[0][2][0] = 1.0;   // ∇_{E1}E3 =  E1
    t.gamma[1][2][1] = -1.0;  // ∇_{E2}E3 = -E2
    return t;
  }();
  return table;
}

FrameVector connection_bilinear(const FrameVector& w, const FrameVector& f) {
  assert(same_point(w.base, f.base));
  // Expanding the table directly: only four entries are nonzero.
  return {w.base, w.f1 * f.f3, -w.f2 * f.f3, w.f2 * f.f2 - w.f1 * f.f1};
}

FrameVector covariant_derivative_along(const FrameVector& velocity,
                                       const FrameVector& field_dot,
                                       const FrameVector& field) {
  return added(field_dot, connection_bilinear(velocity, field));
}

FrameVector second_derivative_correction(const FrameVector& w,
                                         const FrameVector& f) {
  assert(same_point(w.base, f.base));
  // connection_bilinear plus the chain-rule term from d/dt e^{±x3}; the sum
  // is symmetric, as it must be for a torsion-free connection.
  return {w.base, w.f1 * f.f3 + w.f3 * f.f1, -(w.f2 * f.f3 + w.f3 * f.f2),
          w.f2 * f.f2 - w.f1 * f.f1};
}

std::pair<FrameVector, FrameVector> covariant_second_derivatives(
    const ImmersionJet& jet) {
  if (!jet.has_second) {
    throw std::invalid_argument(
        "covariant_second_derivatives: jet lacks second partials");
  }
  FrameVector dxx = added(jet.x_uu, second_derivative_correction(jet.x_u, jet.x_u));
  FrameVector dyy = added(jet.x_vv, second_derivative_correction(jet.x_v, jet.x_v));
  return {dxx, dyy};
}

}  // namespace solmin
