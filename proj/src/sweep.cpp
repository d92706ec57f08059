#include "bopshox/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bopshox/analysis.hpp"
#include "bopshox/bo.hpp"
#include "bopshox/exact.hpp"

namespace bopshox::sweep {

namespace {

// Fills rows[i] = kernel(i) either in order or under OpenMP; each slot is
// written exactly once, so both paths yield identical bytes.
void fill_rows(std::vector<std::vector<double>>& rows,
               const std::function<std::vector<double>(std::size_t)>& kernel, Exec exec) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(rows.size());
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) rows[i] = kernel(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) rows[i] = kernel(i);
}

}  // namespace

void set_thread_cap_from_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("BOPSHOX_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1)
      omp_set_num_threads(static_cast<int>(std::min(cap, long(omp_get_num_procs()))));
  }
#endif
}

std::vector<double> delta_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(lo <= hi))
    throw Error(Errc::ConfigError, "sweep: bad delta grid specification");
  std::vector<double> grid;
  const int count = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
  grid.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double d = lo + i * step;
    if (std::fabs(d) < 1.0) grid.push_back(d);
  }
  return grid;
}

Dataset region_map(int nx, int ny, Exec exec) {
  if (nx < 2 || ny < 2) throw Error(Errc::ConfigError, "sweep: region map grid too small");
  Dataset ds;
  ds.name = "figure1";
  ds.columns = {"delta", "Omega_bar", "B", "sign"};
  ds.key_column = "B";
  ds.rows.resize(static_cast<std::size_t>(nx) * ny);
  fill_rows(
      ds.rows,
      [nx, ny](std::size_t idx) {
        const int i = static_cast<int>(idx) / ny;
        const int j = static_cast<int>(idx) % ny;
        const double delta = (i + 0.5) / nx;      // cell centers of (0,1)^2
        const double omega_bar = (j + 0.5) / ny;
        const double b = analysis::region_b(delta, omega_bar);
        return std::vector<double>{delta, omega_bar, b, double((b > 0.0) - (b < 0.0))};
      },
      exec);
  return ds;
}

Dataset error_lattice(const SystemParams& p, int n_max, int refine, Exec exec) {
  if (n_max < 1 || refine < 1) throw Error(Errc::ConfigError, "sweep: bad lattice specification");
  const int points = n_max * refine + 1;
  Dataset ds;
  ds.name = "figure2";
  ds.columns = {"n", "l", "eps_bo"};
  ds.key_column = "eps_bo";
  ds.rows.resize(static_cast<std::size_t>(points) * points);
  fill_rows(
      ds.rows,
      [&p, points, refine](std::size_t idx) {
        const int i = static_cast<int>(idx) / points;
        const int j = static_cast<int>(idx) % points;
        const double n = double(i) / refine;
        const double l = double(j) / refine;
        return std::vector<double>{n, l, analysis::relative_error(p, n, l)};
      },
      exec);
  return ds;
}

Dataset overlap_sweep(const SystemParams& p, const std::vector<double>& deltas, int n_max,
                      int nodes, Exec exec) {
  if (n_max < 0) throw Error(Errc::ConfigError, "sweep: n_max must be >= 0");
  const int states = (n_max + 1) * (n_max + 1);
  Dataset ds;
  ds.name = "figure3";
  ds.columns = {"delta", "n", "l", "sigma"};
  ds.key_column = "sigma";
  ds.rows.resize(deltas.size() * states);
  fill_rows(
      ds.rows,
      [&](std::size_t idx) {
        const std::size_t di = idx / states;
        const int si = static_cast<int>(idx % states);
        const int n = si / (n_max + 1);
        const int l = si % (n_max + 1);
        const SystemParams q = p.with_delta(deltas[di]);
        const double sigma = analysis::overlap_sigma(q, StateIndex(n, l), nodes).sigma;
        return std::vector<double>{deltas[di], double(n), double(l), sigma};
      },
      exec);
  return ds;
}

Dataset g_components_sweep(const SystemParams& p, const std::vector<double>& deltas, Exec exec) {
  Dataset ds;
  ds.name = "figure4";
  ds.columns = {"delta", "G11", "G12", "G21", "G22", "Gt11", "Gt12", "Gt21", "Gt22"};
  ds.key_column = "G21";
  ds.rows.resize(deltas.size());
  fill_rows(
      ds.rows,
      [&](std::size_t idx) {
        const SystemParams q = p.with_delta(deltas[idx]);
        const Mat2 g = exact::g_matrix(q);
        const Mat2 gt = bo::g_tilde(q);
        return std::vector<double>{deltas[idx], g.a11, g.a12, g.a21, g.a22,
                                   gt.a11, gt.a12, gt.a21, gt.a22};
      },
      exec);
  return ds;
}

Dataset qu_sweep(const SystemParams& p, const std::vector<double>& deltas, Exec exec) {
  Dataset ds;
  ds.name = "figure5";
  ds.columns = {"delta", "Gt11", "Gt12", "Gt21", "Gt22", "Ut11", "Ut12", "Ut21", "Ut22"};
  ds.key_column = "Ut12";
  ds.rows.resize(deltas.size());
  fill_rows(
      ds.rows,
      [&](std::size_t idx) {
        const SystemParams q = p.with_delta(deltas[idx]);
        const Mat2 gt = bo::g_tilde(q);
        const auto qu = analysis::qu_decompose(q);
        return std::vector<double>{deltas[idx], gt.a11, gt.a12, gt.a21, gt.a22,
                                   qu.U_tilde.a11, qu.U_tilde.a12, qu.U_tilde.a21, qu.U_tilde.a22};
      },
      exec);
  return ds;
}

}  // namespace bopshox::sweep
