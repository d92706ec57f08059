#pragma once

#include <utility>

#include "bopshox/mat2.hpp"
#include "bopshox/params.hpp"

namespace bopshox::exact {

// Closed-form normal-mode data of the coupled pair.
struct NormalModes {
  double lambda1 = 0.0;  // squared normal frequencies, lambda1 > lambda2 > 0
  double lambda2 = 0.0;
  double theta = 0.0;    // mixing angle in (-pi/2, pi/2), sign follows delta
  double omega1 = 0.0;   // sqrt(lambda1)
  double omega2 = 0.0;   // sqrt(lambda2)
  Mat2 R;                // rows are the normalized eigenvectors of B
  Mat2 F;                // diag(sqrt(omega1), sqrt(omega2))
  Mat2 G;                // sqrt(2) F R M^{1/2}; xi = G r
};

// Mass-weighted potential matrix [[omega^2, d w W], [d w W, Omega^2]].
Mat2 b_matrix(const SystemParams& p);

// (lambda1, lambda2) of b_matrix in closed form; lambda2 computed via the
// determinant identity lambda1 lambda2 = omega^2 Omega^2 (1 - delta^2) to
// avoid cancellation at small coupling.
std::pair<double, double> eigenvalues(const SystemParams& p);

// theta = arctan(delta omega Omega / (lambda1 - Omega^2)); the denominator is
// positive for every valid parameter set (lambda1 >= omega^2 > Omega^2).
double mixing_angle(const SystemParams& p);

NormalModes normal_modes(const SystemParams& p);

// E_nl = omega1 (n + 1/2) + omega2 (l + 1/2)
double energy(const SystemParams& p, const StateIndex& s);

Mat2 g_matrix(const SystemParams& p);

// |det G| = 2 (1 - delta^2)^{1/4} sqrt(m M omega Omega)
double g_jacobian(const SystemParams& p);

// Common prefactor (m M omega Omega sqrt(1-delta^2))^{1/4} / sqrt(pi n! l!)
// that normalizes the product of Weber functions against dx dy.
double wavefunction_prefactor(const SystemParams& p, const StateIndex& s);

// Normalized eigenfunction Psi_nl(x, y) = prefactor D_n(xi1) D_l(xi2) with
// (xi1, xi2) = G (x, y);  integral of Psi^2 dx dy = 1.
double wavefunction(const SystemParams& p, const StateIndex& s, double x, double y);

}  // namespace bopshox::exact
