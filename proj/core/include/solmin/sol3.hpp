#pragma once

#include <array>
#include <cassert>
#include <utility>

namespace solmin {

/// Point of Sol3: R^3 with the solvable group law
///   (x1,x2,x3)*(y1,y2,y3) = (y1 e^{-x3} + x1, y2 e^{x3} + x2, x3 + y3)
/// and the left-invariant metric e^{2x3} dx1^2 + e^{-2x3} dx2^2 + dx3^2.
/// Exponentials are evaluated directly, so callers keep |x3| <= 700.
struct Sol3Point {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

inline bool same_point(const Sol3Point& a, const Sol3Point& b) {
  return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
}

Sol3Point group_mul(const Sol3Point& x, const Sol3Point& y);
Sol3Point group_inv(const Sol3Point& x);

/// Tangent vector in coordinate components d/dx1, d/dx2, d/dx3.
/// Vectors carry their base point; mixing base points is a contract
/// violation caught by debug assertions.
struct CoordVector {
  Sol3Point base;
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
};

/// Tangent vector in components of the orthonormal left-invariant frame
///   E1 = e^{-x3} d/dx1,  E2 = e^{x3} d/dx2,  E3 = d/dx3.
struct FrameVector {
  Sol3Point base;
  double f1 = 0.0, f2 = 0.0, f3 = 0.0;
};

double metric(const Sol3Point& p, const CoordVector& X, const CoordVector& Y);

/// Inner product of frame vectors: the frame is orthonormal, so this is the
/// Euclidean dot of components.  Asserts matching base points.
double dot(const FrameVector& X, const FrameVector& Y);
double norm(const FrameVector& X);
FrameVector cross(const FrameVector& X, const FrameVector& Y);
FrameVector scaled(const FrameVector& X, double s);
FrameVector added(const FrameVector& X, const FrameVector& Y);

FrameVector coord_to_frame(const Sol3Point& p, const CoordVector& X);
CoordVector frame_to_coord(const Sol3Point& p, const FrameVector& X);

/// The eight isometries fixing the origin: the dihedral group generated by
///   sigma: (x1,x2,x3) -> (x2,-x1,-x3)   (rotation by pi/2 about the axis
///                                         {x1=x2} in {x3=0}ish sense)
///   tau:   (x1,x2,x3) -> (-x1,x2,x3)
/// Words are written sigma^a tau^b and act with tau first.
enum class Isotropy {
  Identity,
  Sigma,
  Sigma2,
  Sigma3,
  Tau,
  SigmaTau,
  Sigma2Tau,
  Sigma3Tau,
};

inline constexpr std::array<Isotropy, 8> kIsotropies = {
    Isotropy::Identity, Isotropy::Sigma,    Isotropy::Sigma2,
    Isotropy::Sigma3,   Isotropy::Tau,      Isotropy::SigmaTau,
    Isotropy::Sigma2Tau, Isotropy::Sigma3Tau};

Sol3Point isotropy_apply(Isotropy s, const Sol3Point& p);
/// Composition a ∘ b (apply b first).
Isotropy isotropy_compose(Isotropy a, Isotropy b);
/// Pushforward of a coordinate vector (the maps are linear).
CoordVector isotropy_pushforward(Isotropy s, const CoordVector& X);
const char* isotropy_name(Isotropy s);

/// Ambient isometry p -> translation * rotation(p).
struct Isometry {
  Sol3Point translation;
  Isotropy rotation = Isotropy::Identity;
};

Sol3Point isometry_apply(const Isometry& m, const Sol3Point& p);

/// Levi-Civita connection in the orthonormal frame.  Nonzero derivatives:
///   ∇_{E1}E1 = -E3, ∇_{E2}E2 = E3, ∇_{E1}E3 = E1, ∇_{E2}E3 = -E2.
/// gamma[i][j][k] is the E_k component of ∇_{E_i}E_j.
struct ConnectionTable {
  double gamma[3][3][3];
};

const ConnectionTable& connection_table();

/// Sum_{i,j} w_i f_j ∇_{E_i}E_j at the common base point.
FrameVector connection_bilinear(const FrameVector& w, const FrameVector& f);

/// Covariant derivative along a parametrized curve of a vector field given by
/// its frame components: field_dot holds the plain parameter derivative of
/// those components and velocity is the curve speed, both in the frame.
FrameVector covariant_derivative_along(const FrameVector& velocity,
                                       const FrameVector& field_dot,
                                       const FrameVector& field);

/// Correction turning a frame-converted coordinate second partial into a
/// covariant one:  ∇_{∂a} x_b = frame(x_ab) + correction(frame(x_a), frame(x_b)).
/// It combines connection_bilinear with the derivative of the frame weights
/// e^{±x3}, and is symmetric in its arguments.
FrameVector second_derivative_correction(const FrameVector& w,
                                         const FrameVector& f);

struct ImmersionJet;  // defined in jet.hpp

/// ∇_{∂u}x_u and ∇_{∂v}x_v from a jet that carries frame-converted
/// coordinate second partials (see fd_jet).
std::pair<FrameVector, FrameVector> covariant_second_derivatives(
    const ImmersionJet& jet);

}  // namespace solmin
