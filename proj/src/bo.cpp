#include "bopshox/bo.hpp"

#include <cmath>

#include "bopshox/pcf.hpp"

namespace bopshox::bo {

double omega1_tilde(const SystemParams& p) {
  const double ob = p.omega_bar();
  return p.omega() * (1.0 + 0.5 * p.delta() * p.delta() * ob * ob);
}

double omega2_tilde(const SystemParams& p) {
  return p.Omega() * std::sqrt(1.0 - p.delta() * p.delta());
}

double z_argument(const SystemParams& p, double x, double y) {
  const ZGeometry g = ZGeometry::from(p);
  return g.dz_dx * x + g.dz_dy * y;
}

double chi(const SystemParams& p, int n, double x, double y) {
  const double pref = std::pow(p.m() * p.omega() / M_PI, 0.25) / std::sqrt(pcf::factorial(n));
  return pref * pcf::d_n(n, z_argument(p, x, y));
}

double epsilon_n(const SystemParams& p, int n, double y) {
  return p.omega() * (n + 0.5) +
         0.5 * (1.0 - p.delta() * p.delta()) * p.M() * p.Omega() * p.Omega() * y * y;
}

double beta_diag(const SystemParams& p, int n) {
  return -(p.M() * p.Omega() * p.Omega() * p.delta() * p.delta() / p.omega()) * (n + 0.5);
}

double alpha_offdiag(const SystemParams& p, int l, int n) {
  if (l < 0 || n < 0) throw Error(Errc::ConfigError, "bo: orders must be non-negative");
  const double half_dzdy = 0.5 * ZGeometry::from(p).dz_dy;
  if (l == n - 1) return half_dzdy * std::sqrt(double(n));
  if (l == n + 1) return -half_dzdy * std::sqrt(double(n) + 1.0);
  return 0.0;
}

double beta_offdiag(const SystemParams& p, int l, int n) {
  if (l < 0 || n < 0) throw Error(Errc::ConfigError, "bo: orders must be non-negative");
  const double half_dzdy = 0.5 * ZGeometry::from(p).dz_dy;
  const double c = half_dzdy * half_dzdy;
  if (l == n - 2) return c * std::sqrt(double(n) * (n - 1.0));
  if (l == n + 2) return c * std::sqrt((n + 1.0) * (n + 2.0));
  return 0.0;
}

double energy(const SystemParams& p, const StateIndex& s) {
  return omega1_tilde(p) * (s.n + 0.5) + omega2_tilde(p) * (s.l + 0.5);
}

double y_tilde(const SystemParams& p, double y) {
  return y * std::sqrt(2.0 * p.M() * p.Omega()) * std::pow(1.0 - p.delta() * p.delta(), 0.25);
}

double varphi(const SystemParams& p, int l, double y) {
  const double dyt = std::sqrt(2.0 * p.M() * p.Omega()) * std::pow(1.0 - p.delta() * p.delta(), 0.25);
  const double pref = std::sqrt(dyt) / (std::sqrt(pcf::factorial(l)) * std::pow(2.0 * M_PI, 0.25));
  return pref * pcf::d_n(l, y_tilde(p, y));
}

double wavefunction(const SystemParams& p, const StateIndex& s, double x, double y) {
  const Mat2 Gt = g_tilde(p);
  const auto xi = Gt.apply(x, y);
  const double base =
      p.m() * p.M() * p.omega() * p.Omega() * std::sqrt(1.0 - p.delta() * p.delta());
  const double pref =
      std::pow(base, 0.25) / std::sqrt(M_PI * pcf::factorial(s.n) * pcf::factorial(s.l));
  return pref * pcf::d_n(s.n, xi[0]) * pcf::d_n(s.l, xi[1]);
}

Mat2 g_tilde(const SystemParams& p) {
  const ZGeometry g = ZGeometry::from(p);
  return {g.dz_dx, g.dz_dy, 0.0,
          std::sqrt(2.0 * p.M() * p.Omega()) * std::pow(1.0 - p.delta() * p.delta(), 0.25)};
}

Mat2 r_tilde(const SystemParams& p) {
  const Mat2 Gt = g_tilde(p);
  const Mat2 f_inv = Mat2::diag(1.0 / std::sqrt(omega1_tilde(p)), 1.0 / std::sqrt(omega2_tilde(p)));
  const Mat2 m_inv = Mat2::diag(1.0 / std::sqrt(p.m()), 1.0 / std::sqrt(p.M()));
  const double inv_r2 = 1.0 / std::sqrt(2.0);
  Mat2 r = f_inv * Gt * m_inv;
  return {inv_r2 * r.a11, inv_r2 * r.a12, inv_r2 * r.a21, inv_r2 * r.a22};
}

BoChannel channel(const SystemParams& p, int n) {
  if (n < 0) throw Error(Errc::ConfigError, "bo: channel index must be non-negative");
  BoChannel ch;
  ch.n = n;
  ch.beta_nn = beta_diag(p, n);
  ch.omega1_tilde = omega1_tilde(p);
  ch.omega2_tilde = omega2_tilde(p);
  ch.g_tilde = g_tilde(p);
  ch.r_tilde = r_tilde(p);
  return ch;
}

}  // namespace bopshox::bo
