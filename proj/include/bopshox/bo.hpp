#pragma once

#include "bopshox/geometry.hpp"
#include "bopshox/mat2.hpp"
#include "bopshox/params.hpp"

namespace bopshox::bo {

// Per-channel Born-Oppenheimer data for fast quantum number n.
struct BoChannel {
  int n = 0;
  double beta_nn = 0.0;       // <chi_n|d2y chi_n> = -(M Omega^2 delta^2/omega)(n+1/2), <= 0
  double omega1_tilde = 0.0;  // omega (1 + delta^2 Omega^2 / (2 omega^2)) >= omega
  double omega2_tilde = 0.0;  // Omega sqrt(1 - delta^2) <= Omega
  Mat2 g_tilde;               // upper triangular, (z, y~) = G~ (x, y)
  Mat2 r_tilde;               // (1/sqrt2) F~^{-1} G~ M^{-1/2}, upper triangular
};

double omega1_tilde(const SystemParams& p);
double omega2_tilde(const SystemParams& p);

BoChannel channel(const SystemParams& p, int n);

// Fast-coordinate argument z(x, y) = dz_dx x + dz_dy y.
double z_argument(const SystemParams& p, double x, double y);

// Normalized fast eigenfunction chi_n = (m omega/pi)^{1/4} D_n(z)/sqrt(n!);
// int chi_n^2 dx = 1 for every y.
double chi(const SystemParams& p, int n, double x, double y);

// Potential energy curve eps_n(y) = omega (n + 1/2) + (1-delta^2) M Omega^2 y^2 / 2.
double epsilon_n(const SystemParams& p, int n, double y);

// Diagonal second-order non-adiabatic coupling (constant in y).
double beta_diag(const SystemParams& p, int n);

// <chi_l | dy chi_n>: (dz_dy/2)(sqrt(n) d_{l,n-1} - sqrt(n+1) d_{l,n+1});
// alpha_nn = 0 for the real normalized chi_n.
double alpha_offdiag(const SystemParams& p, int l, int n);

// Off-diagonal <chi_l | d2y chi_n>: (dz_dy/2)^2 sqrt(n(n-1)) at l = n-2 and
// (dz_dy/2)^2 sqrt((n+1)(n+2)) at l = n+2, zero elsewhere (diagonal is
// beta_diag).  y-independent.
double beta_offdiag(const SystemParams& p, int l, int n);

// E~_nl = omega1~ (n + 1/2) + omega2~ (l + 1/2)
double energy(const SystemParams& p, const StateIndex& s);

// y~ = y sqrt(2 M Omega) (1 - delta^2)^{1/4}
double y_tilde(const SystemParams& p, double y);

// Normalized slow eigenfunction
// varphi_l(y) = (4 M^2 Omega^2 (1-delta^2))^{1/8} D_l(y~) / (sqrt(l!) (2 pi)^{1/4}).
double varphi(const SystemParams& p, int l, double y);

// Product wavefunction Psi~_nl(x, y) = chi_n varphi_l, evaluated through
// (z, y~) = G~ (x, y) with the shared normalization prefactor;
// integral of Psi~^2 dx dy = 1.
double wavefunction(const SystemParams& p, const StateIndex& s, double x, double y);

Mat2 g_tilde(const SystemParams& p);
Mat2 r_tilde(const SystemParams& p);

}  // namespace bopshox::bo
