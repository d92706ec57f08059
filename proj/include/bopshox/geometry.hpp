#pragma once

#include "bopshox/params.hpp"

namespace bopshox {

// Partial derivatives of the fast-channel argument
//   z(x, y) = sqrt(2 m omega) x + sqrt(2 M Omega^2 / omega) delta y,
// plus the x shift per unit y at fixed z.  Chain-rule consistency
// dx_dy * dz_dx = -dz_dy holds by construction.
struct ZGeometry {
  double dz_dx;
  double dz_dy;
  double dx_dy;

  static ZGeometry from(const SystemParams& p);
};

}  // namespace bopshox
