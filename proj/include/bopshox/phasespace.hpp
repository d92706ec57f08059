#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "bopshox/mat2.hpp"
#include "bopshox/params.hpp"

namespace bopshox::phasespace {

// Point of the (varphi, vartheta) phase space at slow coordinate y.
struct PhaseState {
  double y = 0.0;
  double phi = 0.0;
  double vartheta = 0.0;
};

struct Trajectory {
  int n = 0;
  double energy = 0.0;
  std::vector<PhaseState> samples;  // strictly increasing in y
  int node_count = 0;               // sign changes of phi
};

enum class Stability { Elliptic, Hyperbolic, Parabolic };

struct StabilityReport {
  double y = 0.0;
  std::complex<double> eig1, eig2;  // -+ pair: real (hyperbolic) or imaginary (elliptic)
  Stability classification = Stability::Parabolic;
};

// d/dy (phi, vartheta) for channel n at trial energy E:
//   phi'      = vartheta
//   vartheta' = (-2 M (E - eps_n(y)) - beta_nn) phi
std::pair<double, double> tangent_field(const SystemParams& p, int n, double E,
                                        const PhaseState& state);

// Tangent-field matrix [[0, 1], [-2M(E-eps_n) - beta_nn, -2 alpha_nn]].
// alpha_nn is 0 for real normalized channels; the parameter exists so tests
// can probe the general field structure.
Mat2 a_matrix(const SystemParams& p, int n, double E, double y, double alpha_nn = 0.0);

// Eigenvalues -+ sqrt(-2M(E - eps_n(y)) - beta_nn) of the tangent field and
// the fixed-point classification at y.
StabilityReport stability_eigenvalues(const SystemParams& p, int n, double E, double y);

// Non-adiabatic turning points y-+ = -+sqrt(2(E - omega1~(n+1/2)) / (M Omega^2 (1-delta^2))),
// where the classification changes; nullopt when E < omega1~ (n + 1/2).
std::optional<std::pair<double, double>> turning_points(const SystemParams& p, int n, double E);

struct StepControl {
  int initial_steps = 1024;
  int max_steps = 1 << 21;
  double target_rel = 1e-8;  // change of final phi under step doubling
};

// Fixed-step RK4 over [y_start, y_end], doubling the step count until the
// final phi is stable to ctrl.target_rel.  Throws Overflow once |phi| or
// |vartheta| exceeds 1e300 (divergence, usable by the shooter) and
// StepUnderflow if max_steps is reached without convergence.
Trajectory integrate(const SystemParams& p, int n, double E, double y_start, double y_end,
                     const PhaseState& init, const StepControl& ctrl = {});

struct ShootResult {
  double energy = 0.0;
  Trajectory trajectory;  // converged spliced trajectory over [-Y, Y]
};

// (E~_nl - omega2~/2, E~_nl + omega2~/2): straddles exactly one eigenvalue.
std::pair<double, double> default_bracket(const SystemParams& p, int n, int l);

// Recovers the channel-n eigenvalue with l nodes by two-sided shooting:
// integrate from y = -Y with decaying-tail init (phi, vartheta) = (eps, +kappa eps),
// kappa = sqrt(2M(eps_n(-Y) - E) - beta_nn), mirrored from y = +Y, and bisect
// on the log-derivative mismatch at y = 0.  Returns E with
// |E - E~_nl| <= tol * E~_nl.  Throws BracketFailure / NonConvergence.
ShootResult shoot_eigenvalue(const SystemParams& p, int n, int l,
                             std::pair<double, double> bracket, double tol);
ShootResult shoot_eigenvalue(const SystemParams& p, int n, int l, double tol);

// Sign changes of phi along a sample list.
int count_nodes(const std::vector<PhaseState>& samples);

}  // namespace bopshox::phasespace
