#include "bopshox/exact.hpp"

#include <cmath>

#include "bopshox/pcf.hpp"

namespace bopshox::exact {

Mat2 b_matrix(const SystemParams& p) {
  const double off = p.delta() * p.omega() * p.Omega();
  return {p.omega() * p.omega(), off, off, p.Omega() * p.Omega()};
}

std::pair<double, double> eigenvalues(const SystemParams& p) {
  const double w2 = p.omega() * p.omega();
  const double W2 = p.Omega() * p.Omega();
  const double disc = std::sqrt((w2 - W2) * (w2 - W2) + 4.0 * p.delta() * p.delta() * w2 * W2);
  const double lambda1 = 0.5 * (w2 + W2 + disc);
  const double lambda2 = w2 * W2 * (1.0 - p.delta() * p.delta()) / lambda1;
  return {lambda1, lambda2};
}

double mixing_angle(const SystemParams& p) {
  const auto [lambda1, lambda2] = eigenvalues(p);
  (void)lambda2;
  return std::atan(p.delta() * p.omega() * p.Omega() / (lambda1 - p.Omega() * p.Omega()));
}

NormalModes normal_modes(const SystemParams& p) {
  NormalModes nm;
  const auto [l1, l2] = eigenvalues(p);
  nm.lambda1 = l1;
  nm.lambda2 = l2;
  nm.omega1 = std::sqrt(l1);
  nm.omega2 = std::sqrt(l2);
  nm.theta = mixing_angle(p);
  const double c = std::cos(nm.theta), s = std::sin(nm.theta);
  nm.R = {c, s, -s, c};
  nm.F = Mat2::diag(std::sqrt(nm.omega1), std::sqrt(nm.omega2));
  const Mat2 sqrt_mass = Mat2::diag(std::sqrt(p.m()), std::sqrt(p.M()));
  const double r2 = std::sqrt(2.0);
  nm.G = Mat2{r2 * nm.F.a11, 0.0, 0.0, r2 * nm.F.a22} * nm.R * sqrt_mass;
  return nm;
}

double energy(const SystemParams& p, const StateIndex& s) {
  const auto [l1, l2] = eigenvalues(p);
  return std::sqrt(l1) * (s.n + 0.5) + std::sqrt(l2) * (s.l + 0.5);
}

Mat2 g_matrix(const SystemParams& p) { return normal_modes(p).G; }

double g_jacobian(const SystemParams& p) {
  return 2.0 * std::pow(1.0 - p.delta() * p.delta(), 0.25) *
         std::sqrt(p.m() * p.M() * p.omega() * p.Omega());
}

double wavefunction_prefactor(const SystemParams& p, const StateIndex& s) {
  const double base =
      p.m() * p.M() * p.omega() * p.Omega() * std::sqrt(1.0 - p.delta() * p.delta());
  return std::pow(base, 0.25) /
         std::sqrt(M_PI * pcf::factorial(s.n) * pcf::factorial(s.l));
}

double wavefunction(const SystemParams& p, const StateIndex& s, double x, double y) {
  const Mat2 G = g_matrix(p);
  const auto xi = G.apply(x, y);
  return wavefunction_prefactor(p, s) * pcf::d_n(s.n, xi[0]) * pcf::d_n(s.l, xi[1]);
}

}  // namespace bopshox::exact
