#include "bopshox/analysis.hpp"

#include <cmath>

#include "bopshox/bo.hpp"
#include "bopshox/exact.hpp"
#include "bopshox/pcf.hpp"

namespace bopshox::analysis {

namespace {

void check_plane(double delta, double Omega_bar) {
  if (!(std::fabs(delta) < 1.0))
    throw Error(Errc::CouplingOutOfRange, "analysis: |delta| < 1 required");
  if (!(Omega_bar > 0.0 && Omega_bar < 1.0))
    throw Error(Errc::ConfigError, "analysis: Omega_bar must lie in (0, 1)");
}

// Shared long double pieces of the reduced closed forms.  The subtractions
// in eps_omega/eps_Omega cancel catastrophically near delta = 0 when written
// literally, so both are rearranged through
//   lambda1_bar - 1 = 2 s W / (sqrtQ + 1 - W),  s = delta^2, W = Omega_bar^2,
// which keeps their signs exact down to the zero curve of eps_omega.
struct Reduced {
  long double s, W, sqrtQ, w1bar, w2bar;

  explicit Reduced(double delta, double Omega_bar) {
    s = static_cast<long double>(delta) * delta;
    W = static_cast<long double>(Omega_bar) * Omega_bar;
    const long double q = (1.0L - W) * (1.0L - W) + 4.0L * s * W;
    sqrtQ = std::sqrt(q);
    w1bar = std::sqrt(0.5L * (1.0L + W + sqrtQ));
    w2bar = Omega_bar * std::sqrt(1.0L - s) / w1bar;  // via lambda1 lambda2 = W (1 - s)
  }

  long double eps_w() const {
    return s * W * (0.5L - 2.0L / ((sqrtQ + 1.0L - W) * (1.0L + w1bar)));
  }

  long double eps_W() const {
    const long double w1_minus_1 = 2.0L * s * W / ((sqrtQ + 1.0L - W) * (1.0L + w1bar));
    return std::sqrt(W * (1.0L - s)) * w1_minus_1 / w1bar;
  }
};

}  // namespace

double omega_bar1(double delta, double Omega_bar) {
  check_plane(delta, Omega_bar);
  return static_cast<double>(Reduced(delta, Omega_bar).w1bar);
}

double omega_bar2(double delta, double Omega_bar) {
  check_plane(delta, Omega_bar);
  return static_cast<double>(Reduced(delta, Omega_bar).w2bar);
}

double eps_omega(double delta, double Omega_bar) {
  check_plane(delta, Omega_bar);
  return static_cast<double>(Reduced(delta, Omega_bar).eps_w());
}

double eps_Omega(double delta, double Omega_bar) {
  check_plane(delta, Omega_bar);
  return static_cast<double>(Reduced(delta, Omega_bar).eps_W());
}

double region_b(double delta, double Omega_bar) {
  const double s = delta * delta;
  const double W = Omega_bar * Omega_bar;
  return 4.0 * (5.0 * s - 4.0) + 4.0 * s * (2.0 * s - 1.0) * W + s * s * s * W * W;
}

double relative_error(const SystemParams& p, double n, double l) {
  if (n < 0.0 || l < 0.0) throw Error(Errc::ConfigError, "analysis: lattice indices must be >= 0");
  const Reduced r(p.delta(), p.omega_bar());
  const long double num = r.eps_w() * (n + 0.5L) + r.eps_W() * (l + 0.5L);
  const long double den = r.w1bar * (n + 0.5L) + r.w2bar * (l + 0.5L);
  return static_cast<double>(num / den);
}

ErrorBreakdown error_breakdown(const SystemParams& p, const StateIndex& s) {
  ErrorBreakdown b;
  b.eps_bo = relative_error(p, s.n, s.l);
  b.eps_omega = eps_omega(p.delta(), p.omega_bar());
  b.eps_Omega = eps_Omega(p.delta(), p.omega_bar());
  b.omega_bar1 = omega_bar1(p.delta(), p.omega_bar());
  b.omega_bar2 = omega_bar2(p.delta(), p.omega_bar());
  b.region_b = region_b(p.delta(), p.omega_bar());
  return b;
}

ZeroErrorLine zero_error_line(const SystemParams& p) {
  if (p.delta() == 0.0)
    throw Error(Errc::DegenerateLine, "analysis: the error is identically zero at delta = 0");
  const Reduced r(p.delta(), p.omega_bar());
  const long double ratio = r.eps_w() / r.eps_W();
  return {static_cast<double>(-ratio), static_cast<double>(-0.5L * (1.0L + ratio))};
}

double delta_star(double Omega_bar) {
  if (!(Omega_bar > 0.0 && Omega_bar < 1.0))
    throw Error(Errc::ConfigError, "analysis: delta_star needs Omega_bar in (0, 1)");
  const double W = Omega_bar * Omega_bar;
  const double root = std::sqrt(9.0 - 2.0 * W - 7.0 * W * W);
  return std::sqrt((1.0 - W) * (3.0 + 5.0 * W - root)) / (2.0 * std::sqrt(2.0) * Omega_bar);
}

namespace {

// sigma_K for a fixed rule: Gauss-Hermite in the exact-argument plane,
// xi = 2u so that Psi's Gaussian factor is exactly the e^{-|u|^2} weight;
// the BO arguments follow through T = G~ G^{-1}.
double sigma_fixed(const SystemParams& p, const StateIndex& s, const pcf::QuadratureRule& rule) {
  const Mat2 G = exact::g_matrix(p);
  const Mat2 T = bo::g_tilde(p) * G.inverse();
  const double pref = exact::wavefunction_prefactor(p, s);
  const int k = rule.count();

  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const double xi1 = 2.0 * rule.nodes[i];
    const double left1 = pcf::weber_poly(s.n, xi1);
    double inner = 0.0;
    for (int j = 0; j < k; ++j) {
      const double xi2 = 2.0 * rule.nodes[j];
      const auto xt = T.apply(xi1, xi2);
      inner += rule.weights[j] * pcf::weber_poly(s.l, xi2) *
               pcf::d_n(s.n, xt[0]) * pcf::d_n(s.l, xt[1]);
    }
    sum += rule.weights[i] * left1 * inner;
  }
  return 4.0 / std::fabs(G.det()) * pref * pref * sum;
}

}  // namespace

OverlapResult overlap_sigma(const SystemParams& p, const StateIndex& s, int nodes) {
  if (nodes < 40) throw Error(Errc::ConfigError, "analysis: overlap quadrature needs K >= 40");
  const double coarse = sigma_fixed(p, s, pcf::gauss_hermite(nodes / 2));
  const double fine = sigma_fixed(p, s, pcf::gauss_hermite(nodes));
  OverlapResult r;
  r.sigma = fine;
  r.convergence = std::fabs(fine - coarse);
  if (r.convergence > 1e-6)
    throw Error(Errc::QuadratureNotConverged,
                "analysis: overlap quadrature K vs K/2 estimate exceeds 1e-6");
  return r;
}

QuFactors qu_decompose(const SystemParams& p) {
  const Mat2 G = exact::g_matrix(p);

  // Gram-Schmidt on the columns; first reflector sign fixed so U11 < 0 and
  // the residual column norm makes U22 > 0, giving diag(U_tilde) > 0.
  const double n1 = std::hypot(G.a11, G.a21);
  const double q11 = -G.a11 / n1, q21 = -G.a21 / n1;
  const double u11 = q11 * G.a11 + q21 * G.a21;
  const double u12 = q11 * G.a12 + q21 * G.a22;
  const double r1 = G.a12 - u12 * q11;
  const double r2 = G.a22 - u12 * q21;
  const double n2 = std::hypot(r1, r2);
  const double q12 = r1 / n2, q22 = r2 / n2;
  const double u22 = q12 * G.a12 + q22 * G.a22;

  QuFactors f;
  f.Q = {q11, q12, q21, q22};
  f.U = {u11, u12, 0.0, u22};
  f.U_tilde = {-u11, -u12, 0.0, u22};
  f.deviation = (bo::g_tilde(p) - f.U_tilde).max_abs();
  return f;
}

double offdiagonal_residual(const SystemParams& p, int n,
                            const phasespace::Trajectory& trajectory) {
  double worst = 0.0;
  for (const int l : {n - 2, n - 1, n + 1, n + 2}) {
    if (l < 0) continue;
    const double alpha = bo::alpha_offdiag(p, l, n);
    const double beta = bo::beta_offdiag(p, l, n);
    for (const auto& s : trajectory.samples)
      worst = std::max(worst, std::fabs(-beta * s.phi - 2.0 * alpha * s.vartheta));
  }
  return worst;
}

}  // namespace bopshox::analysis
