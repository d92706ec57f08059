#include "bopshox/pcf.hpp"

#include <cmath>
#include <string>

namespace bopshox::pcf {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024;

void check_order(int n) {
  if (n < 0) throw Error(Errc::ConfigError, "pcf: order must be non-negative");
  if (n > kMaxOrder)
    throw Error(Errc::OrderTooLarge,
                "pcf: order " + std::to_string(n) + " exceeds the recurrence cap " +
                    std::to_string(kMaxOrder));
}

// He_n(z) and He_n'(z) by forward recurrence:
//   He_{k+1} = z He_k - k He_{k-1},  He_{k+1}' = He_k + z He_k' - k He_{k-1}'
void weber_poly_pair(int n, double z, double& he, double& he_prime) {
  double p_prev = 1.0, d_prev = 0.0;  // He_0
  if (n == 0) {
    he = p_prev;
    he_prime = d_prev;
    return;
  }
  double p = z, d = 1.0;  // He_1
  for (int k = 1; k < n; ++k) {
    const double p_next = z * p - k * p_prev;
    const double d_next = p + z * d - k * d_prev;
    p_prev = p;
    d_prev = d;
    p = p_next;
    d = d_next;
  }
  he = p;
  he_prime = d;
}

}  // namespace

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double weber_poly(int n, double z) {
  check_order(n);
  double he, hep;
  weber_poly_pair(n, z, he, hep);
  return he;
}

double d_n(int n, double z) {
  check_order(n);
  return weber_poly(n, z) * std::exp(-0.25 * z * z);
}

double d_n_prime(int n, double z) {
  check_order(n);
  double he, hep;
  weber_poly_pair(n, z, he, hep);
  return (hep - 0.5 * z * he) * std::exp(-0.25 * z * z);
}

RecurrenceResiduals recurrence_residuals(int n, double z) {
  if (n < 1) throw Error(Errc::ConfigError, "pcf: recurrence residuals need n >= 1");
  check_order(n + 1);
  const double dm = d_n(n - 1, z);
  const double d0 = d_n(n, z);
  const double dp = d_n(n + 1, z);
  const double dd = d_n_prime(n, z);

  RecurrenceResiduals r;
  r.r1 = dp - z * d0 + n * dm;
  r.r2 = dd + 0.5 * z * d0 - n * dm;
  r.r3 = dd - 0.5 * z * d0 + dp;
  r.scale = std::max({std::fabs(dm), std::fabs(d0), std::fabs(dp), std::fabs(dd),
                      std::fabs(z * d0), std::fabs(double(n) * dm)});
  return r;
}

QuadratureRule gauss_hermite(int count) {
  if (count < 2 || count > 256)
    throw Error(Errc::ConfigError, "pcf: gauss_hermite node count must be in [2, 256]");

  const double eps = 1e-14;
  const int max_newton = 100;
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}

  QuadratureRule rule;
  rule.nodes.assign(count, 0.0);
  rule.weights.assign(count, 0.0);

  const int half = (count + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // asymptotic initial guesses for the i-th largest root
    if (i == 0) {
      z = std::sqrt(2.0 * count + 1.0) - 1.85575 * std::pow(2.0 * count + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(double(count), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[count - 1];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[count - 2];
    } else {
      z = 2.0 * z - rule.nodes[count - i + 1];
    }

    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < max_newton; ++it) {
      // orthonormal Hermite recurrence wrt e^{-t^2}
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < count; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * count) * p2;
      const double dz = p1 / pp;
      z -= dz;
      if (std::fabs(dz) <= eps) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw Error(Errc::ConvergenceFailure, "pcf: gauss_hermite Newton iteration did not converge");

    rule.nodes[count - 1 - i] = z;   // positive half, descending fill from the top
    rule.nodes[i] = -z;
    rule.weights[count - 1 - i] = 2.0 / (pp * pp);
    rule.weights[i] = rule.weights[count - 1 - i];
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.0;  // exact central node
  return rule;
}

double inner_product_dd(int l, int n, double dz_dx) {
  check_order(l);
  check_order(n);
  if (l != n) return 0.0;
  return kSqrt2Pi / dz_dx * factorial(n);
}

double matrix_element_x(int l, int n, double y, const ZGeometry& geom) {
  check_order(l);
  check_order(n);
  const double inv2 = 1.0 / (geom.dz_dx * geom.dz_dx);
  double v = 0.0;
  if (l == n + 1) v += kSqrt2Pi * factorial(n + 1) * inv2;
  if (l == n - 1) v += kSqrt2Pi * factorial(n) * inv2;
  if (l == n) v += geom.dx_dy * y / geom.dz_dx * kSqrt2Pi * factorial(n);
  return v;
}

double matrix_element_x2(int l, int n, double y, const ZGeometry& geom) {
  check_order(l);
  check_order(n);
  const double inv3 = 1.0 / (geom.dz_dx * geom.dz_dx * geom.dz_dx);
  const double shift = geom.dz_dy * y;
  double v = 0.0;
  // z^2 moment: z^2 D_n = D_{n+2} + (2n+1) D_n + n(n-1) D_{n-2}
  if (l == n + 2) v += kSqrt2Pi * factorial(n + 2) * inv3;
  if (l == n) v += kSqrt2Pi * (2.0 * n + 1.0) * factorial(n) * inv3;
  if (l == n - 2) v += kSqrt2Pi * factorial(n) * inv3;
  // cross term -2 (dz_dy y) z
  if (l == n + 1) v += -2.0 * shift * kSqrt2Pi * factorial(n + 1) * inv3;
  if (l == n - 1) v += -2.0 * shift * kSqrt2Pi * factorial(n) * inv3;
  // shift term (dz_dy y)^2
  if (l == n) v += shift * shift * kSqrt2Pi * factorial(n) * inv3;
  return v;
}

}  // namespace bopshox::pcf
