#include "bopshox/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bopshox/bo.hpp"

namespace bopshox::phasespace {

namespace {

constexpr double kOverflowLimit = 1e300;
constexpr double kRescaleLimit = 1e120;

// phi'' = disc(y) phi with disc(y) = -2M(E - eps_n(y)) - beta_nn
//       = 2M(eps0 + a y^2/2 - E) - beta_nn
struct Field {
  double two_mass;
  double eps0;   // omega (n + 1/2)
  double curv;   // M Omega^2 (1 - delta^2)
  double beta;
  double energy;

  static Field make(const SystemParams& p, int n, double E) {
    Field f;
    f.two_mass = 2.0 * p.M();
    f.eps0 = p.omega() * (n + 0.5);
    f.curv = p.M() * p.Omega() * p.Omega() * (1.0 - p.delta() * p.delta());
    f.beta = bo::beta_diag(p, n);
    f.energy = E;
    return f;
  }

  double disc(double y) const {
    return two_mass * (eps0 + 0.5 * curv * y * y - energy) - beta;
  }
};

struct StepPoint {
  double phi, vartheta;
};

inline StepPoint rk4_step(const Field& f, double y, double h, StepPoint s) {
  const auto deriv = [&f](double yy, const StepPoint& q) {
    return StepPoint{q.vartheta, f.disc(yy) * q.phi};
  };
  const StepPoint k1 = deriv(y, s);
  const StepPoint k2 = deriv(y + 0.5 * h, {s.phi + 0.5 * h * k1.phi, s.vartheta + 0.5 * h * k1.vartheta});
  const StepPoint k3 = deriv(y + 0.5 * h, {s.phi + 0.5 * h * k2.phi, s.vartheta + 0.5 * h * k2.vartheta});
  const StepPoint k4 = deriv(y + h, {s.phi + h * k3.phi, s.vartheta + h * k3.vartheta});
  s.phi += h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
  s.vartheta += h / 6.0 * (k1.vartheta + 2.0 * k2.vartheta + 2.0 * k3.vartheta + k4.vartheta);
  return s;
}

// Plain run used by the public integrate(); throws on overflow.
StepPoint run_fixed(const Field& f, double y0, double y1, int steps, StepPoint init,
                    std::vector<PhaseState>* record) {
  const double h = (y1 - y0) / steps;
  StepPoint s = init;
  if (record) {
    record->clear();
    record->reserve(steps + 1);
    record->push_back({y0, s.phi, s.vartheta});
  }
  for (int i = 0; i < steps; ++i) {
    const double y = y0 + i * h;
    s = rk4_step(f, y, h, s);
    if (std::fabs(s.phi) > kOverflowLimit || std::fabs(s.vartheta) > kOverflowLimit)
      throw Error(Errc::Overflow, "phasespace: trajectory diverged past 1e300");
    if (record) record->push_back({y0 + (i + 1) * h, s.phi, s.vartheta});
  }
  return s;
}

struct ScaledSample {
  double y, phi, vartheta, log_scale;
};

struct ScaledEnd {
  double phi, vartheta;  // in the final (arbitrary positive) scale
};

// Shooting runs rescale on the fly: the field is linear, so a positive common
// factor changes neither signs, node counts nor log-derivatives.
ScaledEnd run_rescaled(const Field& f, double y0, double y1, int steps, StepPoint init,
                       std::vector<ScaledSample>* record) {
  const double h = (y1 - y0) / steps;
  StepPoint s = init;
  double log_scale = 0.0;
  if (record) {
    record->clear();
    record->reserve(steps + 1);
    record->push_back({y0, s.phi, s.vartheta, log_scale});
  }
  for (int i = 0; i < steps; ++i) {
    s = rk4_step(f, y0 + i * h, h, s);
    const double mag = std::max(std::fabs(s.phi), std::fabs(s.vartheta));
    if (mag > kRescaleLimit) {
      s.phi /= kRescaleLimit;
      s.vartheta /= kRescaleLimit;
      log_scale += std::log(kRescaleLimit);
    }
    if (record) record->push_back({y0 + (i + 1) * h, s.phi, s.vartheta, log_scale});
  }
  return {s.phi, s.vartheta};
}

// Rebuild a rescaled run with sup-norm 1.
std::vector<PhaseState> reconstruct(const std::vector<ScaledSample>& raw) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& s : raw) {
    if (s.phi != 0.0) top = std::max(top, std::log(std::fabs(s.phi)) + s.log_scale);
  }
  if (!std::isfinite(top)) top = 0.0;  // identically zero run
  std::vector<PhaseState> out;
  out.reserve(raw.size());
  for (const auto& s : raw) {
    const double gain = std::exp(s.log_scale - top);
    out.push_back({s.y, s.phi * gain, s.vartheta * gain});
  }
  return out;
}

}  // namespace

std::pair<double, double> tangent_field(const SystemParams& p, int n, double E,
                                        const PhaseState& state) {
  const Field f = Field::make(p, n, E);
  return {state.vartheta, f.disc(state.y) * state.phi};
}

Mat2 a_matrix(const SystemParams& p, int n, double E, double y, double alpha_nn) {
  const Field f = Field::make(p, n, E);
  return {0.0, 1.0, f.disc(y), -2.0 * alpha_nn};
}

StabilityReport stability_eigenvalues(const SystemParams& p, int n, double E, double y) {
  const Field f = Field::make(p, n, E);
  const double disc = f.disc(y);
  StabilityReport rep;
  rep.y = y;
  if (disc > 0.0) {
    const double r = std::sqrt(disc);
    rep.eig1 = {-r, 0.0};
    rep.eig2 = {r, 0.0};
    rep.classification = Stability::Hyperbolic;
  } else if (disc < 0.0) {
    const double r = std::sqrt(-disc);
    rep.eig1 = {0.0, -r};
    rep.eig2 = {0.0, r};
    rep.classification = Stability::Elliptic;
  } else {
    rep.eig1 = rep.eig2 = {0.0, 0.0};
    rep.classification = Stability::Parabolic;
  }
  return rep;
}

std::optional<std::pair<double, double>> turning_points(const SystemParams& p, int n, double E) {
  const double floor = bo::omega1_tilde(p) * (n + 0.5);
  const double curv = p.M() * p.Omega() * p.Omega() * (1.0 - p.delta() * p.delta());
  const double radicand = 2.0 * (E - floor) / curv;
  if (radicand < 0.0) return std::nullopt;
  const double yp = std::sqrt(radicand);
  return std::make_pair(-yp, yp);
}

int count_nodes(const std::vector<PhaseState>& samples) {
  int nodes = 0;
  double last = 0.0;
  for (const auto& s : samples) {
    if (s.phi == 0.0) continue;
    if (last != 0.0 && std::signbit(s.phi) != std::signbit(last)) ++nodes;
    last = s.phi;
  }
  return nodes;
}

Trajectory integrate(const SystemParams& p, int n, double E, double y_start, double y_end,
                     const PhaseState& init, const StepControl& ctrl) {
  if (!(y_start < y_end))
    throw Error(Errc::ConfigError, "phasespace: integrate requires y_start < y_end");
  if (!std::isfinite(init.phi) || !std::isfinite(init.vartheta))
    throw Error(Errc::ConfigError, "phasespace: initial state must be finite");

  const Field f = Field::make(p, n, E);
  const StepPoint start{init.phi, init.vartheta};

  int steps = std::max(2, ctrl.initial_steps);
  StepPoint prev = run_fixed(f, y_start, y_end, steps, start, nullptr);
  for (;;) {
    if (2 * steps > ctrl.max_steps)
      throw Error(Errc::StepUnderflow,
                  "phasespace: step halving exceeded " + std::to_string(ctrl.max_steps) +
                      " steps without converging");
    const StepPoint next = run_fixed(f, y_start, y_end, 2 * steps, start, nullptr);
    const double scale = std::max(std::fabs(next.phi), 1e-300);
    const bool settled = std::fabs(next.phi - prev.phi) <= ctrl.target_rel * scale;
    steps *= 2;
    prev = next;
    if (settled) break;
  }

  Trajectory traj;
  traj.n = n;
  traj.energy = E;
  run_fixed(f, y_start, y_end, steps, start, &traj.samples);
  traj.node_count = count_nodes(traj.samples);
  return traj;
}

std::pair<double, double> default_bracket(const SystemParams& p, int n, int l) {
  const double center = bo::energy(p, StateIndex(n, l));
  const double half = 0.5 * bo::omega2_tilde(p);
  return {center - half, center + half};
}

ShootResult shoot_eigenvalue(const SystemParams& p, int n, int l, double tol) {
  return shoot_eigenvalue(p, n, l, default_bracket(p, n, l), tol);
}

ShootResult shoot_eigenvalue(const SystemParams& p, int n, int l,
                             std::pair<double, double> bracket, double tol) {
  if (n < 0 || l < 0) throw Error(Errc::ConfigError, "phasespace: quantum numbers must be >= 0");
  if (!(bracket.first < bracket.second))
    throw Error(Errc::BracketFailure, "phasespace: empty energy bracket");
  if (!(tol > 0.0)) throw Error(Errc::ConfigError, "phasespace: tolerance must be positive");

  // Domain end: twice the outermost turning point plus five decay lengths of
  // the slow oscillator, well into the hyperbolic tail.
  double y_plus = 0.0;
  if (const auto tp = turning_points(p, n, bracket.second)) y_plus = tp->second;
  const double domain = 2.0 * y_plus + 5.0 / std::sqrt(p.M() * bo::omega2_tilde(p));

  // Log-derivative mismatch of the two tail solutions at y = 0; its sign
  // flips once at the bracketed eigenvalue.
  const auto mismatch = [&](double E, int steps) {
    const Field f = Field::make(p, n, E);
    const double kappa = std::sqrt(std::max(f.disc(-domain), 0.0));
    const ScaledEnd left = run_rescaled(f, -domain, 0.0, steps, {1.0, kappa}, nullptr);
    const ScaledEnd right = run_rescaled(f, domain, 0.0, steps, {1.0, -kappa}, nullptr);
    return left.vartheta * right.phi - right.vartheta * left.phi;
  };

  const auto bisect = [&](int steps) {
    double lo = bracket.first, hi = bracket.second;
    double flo = mismatch(lo, steps);
    const double fhi = mismatch(hi, steps);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
      throw Error(Errc::BracketFailure, "phasespace: mismatch has equal signs at bracket ends");
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= 0.25 * tol * std::fabs(mid)) return mid;
      const double fm = mismatch(mid, steps);
      if (fm == 0.0) return mid;
      if (std::signbit(fm) == std::signbit(flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    throw Error(Errc::NonConvergence, "phasespace: bisection exceeded 200 iterations");
  };

  // Refine the grid until the eigenvalue itself is step-insensitive.
  int steps = 2048;
  double energy = bisect(steps);
  for (;;) {
    if (2 * steps > (1 << 20))
      throw Error(Errc::NonConvergence, "phasespace: step refinement exceeded 2^20 steps");
    const double refined = bisect(2 * steps);
    const bool settled = std::fabs(refined - energy) <= 0.25 * tol * std::fabs(refined);
    steps *= 2;
    energy = refined;
    if (settled) break;
  }

  // Converged trajectory: both tail runs spliced at y = 0 and normalized to
  // sup-norm 1.
  const Field f = Field::make(p, n, energy);
  const double kappa = std::sqrt(std::max(f.disc(-domain), 0.0));
  std::vector<ScaledSample> left_raw, right_raw;
  run_rescaled(f, -domain, 0.0, steps, {1.0, kappa}, &left_raw);
  run_rescaled(f, domain, 0.0, steps, {1.0, -kappa}, &right_raw);
  std::vector<PhaseState> left = reconstruct(left_raw);
  std::vector<PhaseState> right = reconstruct(right_raw);

  const PhaseState& lc = left.back();   // left value at y = 0
  const PhaseState& rc = right.back();  // right value at y = 0
  const double ratio = std::fabs(lc.phi) >= std::fabs(lc.vartheta) ? lc.phi / rc.phi
                                                                   : lc.vartheta / rc.vartheta;

  Trajectory traj;
  traj.n = n;
  traj.energy = energy;
  traj.samples = std::move(left);
  traj.samples.reserve(traj.samples.size() + right.size());
  for (auto it = right.rbegin() + 1; it != right.rend(); ++it)
    traj.samples.push_back({it->y, ratio * it->phi, ratio * it->vartheta});
  traj.node_count = count_nodes(traj.samples);

  if (traj.node_count != l)
    throw Error(Errc::BracketFailure,
                "phasespace: bracketed state has " + std::to_string(traj.node_count) +
                    " nodes, expected " + std::to_string(l));

  ShootResult result;
  result.energy = energy;
  result.trajectory = std::move(traj);
  return result;
}

}  // namespace bopshox::phasespace
