#pragma once

#include "solmin/sol3.hpp"

namespace solmin {

/// First (and optionally second) derivative data of a conformal immersion at
/// one parameter point z = u + iv.  Partials are stored in frame components
/// at `position`; the optional second partials are coordinate second partials
/// converted to the frame at `position` (not covariant derivatives).
struct ImmersionJet {
  double u = 0.0;
  double v = 0.0;
  Sol3Point position;
  FrameVector x_u, x_v;
  FrameVector normal;
  double lambda = 0.0;  // conformal factor, |x_u|^2 = |x_v|^2 = lambda

  bool has_second = false;
  FrameVector x_uu, x_vv, x_uv;
};

}  // namespace solmin
