#include "bopshox/params.hpp"

#include <cmath>

#include "bopshox/geometry.hpp"

namespace bopshox {

SystemParams::SystemParams(double m, double M, double omega, double Omega, double delta)
    : m_(m), M_(M), omega_(omega), Omega_(Omega), delta_(delta), omega_bar_(Omega / omega) {}

SystemParams SystemParams::validate(const Raw& raw) {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(Errc::NonPositiveParameter,
                  std::string("params: ") + name + " must be positive and finite");
  };
  positive(raw.m, "m");
  positive(raw.M, "M");
  positive(raw.omega, "omega");
  positive(raw.Omega, "Omega");
  if (!std::isfinite(raw.delta) || std::fabs(raw.delta) >= 1.0)
    throw Error(Errc::CouplingOutOfRange, "params: coupling delta must satisfy |delta| < 1");
  if (!(raw.Omega < raw.omega))
    throw Error(Errc::FrequencyOrderViolation, "params: Omega < omega is required");
  return SystemParams(raw.m, raw.M, raw.omega, raw.Omega, raw.delta);
}

double SystemParams::coupling() const noexcept {
  return delta_ * std::sqrt(m_ * M_) * omega_ * Omega_;
}

SystemParams SystemParams::with_delta(double delta) const {
  return validate(Raw{m_, M_, omega_, Omega_, delta});
}

ZGeometry ZGeometry::from(const SystemParams& p) {
  ZGeometry g;
  g.dz_dx = std::sqrt(2.0 * p.m() * p.omega());
  g.dz_dy = std::sqrt(2.0 * p.M() * p.Omega() * p.Omega() / p.omega()) * p.delta();
  g.dx_dy = -g.dz_dy / g.dz_dx;  // = -sqrt(M/m) Omega delta / omega
  return g;
}

}  // namespace bopshox
