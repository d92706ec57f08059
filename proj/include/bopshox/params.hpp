#pragma once

#include "bopshox/error.hpp"

namespace bopshox {

// Physical parameters of the bilinearly coupled oscillator pair.  Units use
// hbar = 1 throughout (fixed, not configurable).  Immutable once validated,
// safe to share across threads.
//
// Constraints: m, M, omega, Omega > 0; |delta| < 1; Omega < omega strictly
// (Omega = omega is rejected: the mixing-angle branch degenerates there and
// the normal-mode ordering 0 < lambda2 < lambda1 requires Omega < omega).
class SystemParams {
 public:
  struct Raw {
    double m = 1.0;
    double M = 1.0;
    double omega = 1.0;
    double Omega = 0.2;
    double delta = 0.6;
  };

  // Returns validated parameters or throws Error with code
  // NonPositiveParameter, CouplingOutOfRange or FrequencyOrderViolation.
  static SystemParams validate(const Raw& raw);

  double m() const noexcept { return m_; }
  double M() const noexcept { return M_; }
  double omega() const noexcept { return omega_; }
  double Omega() const noexcept { return Omega_; }
  double delta() const noexcept { return delta_; }

  // Omega / omega, cached at validation.
  double omega_bar() const noexcept { return omega_bar_; }

  // Bilinear coupling strength c = delta sqrt(mM) omega Omega (read-only,
  // round-trips to delta at machine precision).
  double coupling() const noexcept;

  // Same masses/frequencies, different coupling (re-validated).
  SystemParams with_delta(double delta) const;

 private:
  SystemParams(double m, double M, double omega, double Omega, double delta);

  double m_, M_, omega_, Omega_, delta_, omega_bar_;
};

// Quantum numbers of a product state: n indexes the fast (x) channel,
// l the slow (y) channel.
struct StateIndex {
  int n = 0;
  int l = 0;

  StateIndex(int n_in, int l_in) : n(n_in), l(l_in) {
    if (n < 0 || l < 0) throw Error(Errc::ConfigError, "params: state indices must be non-negative");
  }
};

}  // namespace bopshox
