#pragma once

#include "bopshox/mat2.hpp"
#include "bopshox/params.hpp"
#include "bopshox/phasespace.hpp"

namespace bopshox::analysis {

// Reduced (omega = 1) frequencies of the exact solution as functions of the
// dimensionless pair (delta, Omega_bar).
double omega_bar1(double delta, double Omega_bar);
double omega_bar2(double delta, double Omega_bar);

// eps_omega = (omega1~ - omega1)/omega and eps_Omega = (omega2~ - omega2)/omega,
// rearranged to be free of cancellation so their signs are exact down to the
// zero curve; eps_Omega > 0 for every 0 < |delta| < 1.
double eps_omega(double delta, double Omega_bar);
double eps_Omega(double delta, double Omega_bar);

// Sign marker of eps_omega in the delta-Omega_bar plane:
//   B = 4 (5 d^2 - 4) + 4 d^2 (2 d^2 - 1) Ob^2 + d^6 Ob^4
double region_b(double delta, double Omega_bar);

// Relative energy error (E~ - E)/E through the reduced form, valid for
// real-valued n, l (contour lattices).
double relative_error(const SystemParams& p, double n, double l);

struct ErrorBreakdown {
  double eps_bo = 0.0;
  double eps_omega = 0.0;
  double eps_Omega = 0.0;
  double omega_bar1 = 0.0;
  double omega_bar2 = 0.0;
  double region_b = 0.0;
};
ErrorBreakdown error_breakdown(const SystemParams& p, const StateIndex& s);

// Zero contour of the relative error in the n-l plane:
//   l = slope * n + intercept,  slope = -eps_omega/eps_Omega < 1,
//   intercept = -(1 + eps_omega/eps_Omega)/2 < 0.
// Throws DegenerateLine at delta = 0.
struct ZeroErrorLine {
  double slope = 0.0;
  double intercept = 0.0;
};
ZeroErrorLine zero_error_line(const SystemParams& p);

// Coupling that minimizes G21 at fixed Omega_bar:
//   delta* = sqrt((1-Ob^2)(3 + 5 Ob^2 - sqrt(9 - 2 Ob^2 - 7 Ob^4))) / (2 sqrt2 Ob)
double delta_star(double Omega_bar);

struct OverlapResult {
  double sigma = 0.0;        // <Psi_nl | Psi~_nl>
  double convergence = 0.0;  // |sigma_K - sigma_{K/2}|
};

// Overlap of the exact and BO eigenfunctions by 2-D Gauss-Hermite in the
// exact normal coordinates (K x K nodes, K >= 40); the BO argument vector is
// reached through G~ G^{-1}.  Throws QuadratureNotConverged when the K vs K/2
// estimate exceeds 1e-6.
OverlapResult overlap_sigma(const SystemParams& p, const StateIndex& s, int nodes);

struct QuFactors {
  Mat2 Q;              // orthogonal
  Mat2 U;              // upper triangular, diag signs (-,+)
  Mat2 U_tilde;        // -sigma3 U, positive diagonal
  double deviation = 0.0;  // max_ij |Gtilde_ij - Utilde_ij|
};

// QU factorization of G by Gram-Schmidt on its columns.  The deterministic
// sign branch fixes diag(U_tilde) > 0 so U_tilde matches the sign pattern of
// G~ and the deviation vanishes at delta = 0.
QuFactors qu_decompose(const SystemParams& p);

// Largest residual of the off-diagonal consistency relation
// |-beta_{ln} phi - 2 alpha_{ln} vartheta| over a trajectory, l in
// {n-2, n-1, n+1, n+2}.  Diagnostic only; the projected diagonal equations
// do not enforce it.
double offdiagonal_residual(const SystemParams& p, int n,
                            const phasespace::Trajectory& trajectory);

}  // namespace bopshox::analysis
