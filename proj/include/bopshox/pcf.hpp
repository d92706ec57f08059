#pragma once

#include <vector>

#include "bopshox/error.hpp"
#include "bopshox/geometry.hpp"

namespace bopshox::pcf {

// Forward recurrence on the polynomial part stays well inside double range
// up to this order for |z| <~ 25.
inline constexpr int kMaxOrder = 200;

// Parabolic cylinder (Weber) function of integer order,
//   D_n(z) = 2^{-n/2} e^{-z^2/4} H_n(z / sqrt 2) = He_n(z) e^{-z^2/4},
// with H_n the physicists' and He_n the monic Hermite polynomial, both by
// forward recurrence.  Throws OrderTooLarge beyond kMaxOrder.
double d_n(int n, double z);

// d/dz D_n(z), from an independently recurred He_n'.
double d_n_prime(int n, double z);

// The polynomial part He_n(z) = D_n(z) e^{+z^2/4}.  Quadratures use it to
// keep the Gaussian factor inside the quadrature weight.
double weber_poly(int n, double z);

// n! as a double (overflows to inf past 170, callers stay far below).
double factorial(int n);

// Raw residuals of the three-term and the two derivative recurrences at
// integer order n >= 1:
//   r1 = D_{n+1} - z D_n + n D_{n-1}
//   r2 = D'_n + (z/2) D_n - n D_{n-1}
//   r3 = D'_n - (z/2) D_n + D_{n+1}
struct RecurrenceResiduals {
  double r1, r2, r3;
  double scale;  // max magnitude of the participating terms
};
RecurrenceResiduals recurrence_residuals(int n, double z);

// Gauss-Hermite rule for the weight e^{-t^2}: sum w_i f(t_i) ~ int f e^{-t^2}.
// Nodes ascending and symmetric about 0; sum of weights = sqrt(pi).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int count() const { return static_cast<int>(nodes.size()); }
};

// Newton iteration on the orthonormal Hermite recurrence, 2 <= count <= 256.
QuadratureRule gauss_hermite(int count);

// <D_l(z) | D_n(z)> integrated over x with z = (dz_dx) x + const:
//   sqrt(2 pi) / dz_dx * n! * delta_ln
double inner_product_dd(int l, int n, double dz_dx);

// <D_l(z) | x D_n(z)> over x.  Writing x = (z - (dz_dy) y) / dz_dx and using
// z D_n = D_{n+1} + n D_{n-1}:
//   sqrt(2 pi) [ (n+1)! d_{l,n+1} + n! d_{l,n-1} ] / dz_dx^2
//   + (dx_dy) y / dz_dx * sqrt(2 pi) n! d_{ln}
double matrix_element_x(int l, int n, double y, const ZGeometry& geom);

// <D_l(z) | x^2 D_n(z)> over x; nonzero for |l-n| in {0, 1, 2}.  The z^2
// moment contributes the l = n, n+-2 band, the cross term -2 (dz_dy) y z the
// l = n+-1 band, and the shift term the diagonal.
double matrix_element_x2(int l, int n, double y, const ZGeometry& geom);

}  // namespace bopshox::pcf
