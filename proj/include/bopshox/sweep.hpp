#pragma once

#include <vector>

#include "bopshox/dataset.hpp"
#include "bopshox/params.hpp"

namespace bopshox::sweep {

// Every kernel computes each row independently, so the parallel build fills
// the same preallocated slots as the serial reference and the two produce
// byte-identical datasets.  Serial is kept as the reference for tests.
enum class Exec { Serial, Parallel };

// Applies the BOPSHOX_THREADS cap to the OpenMP runtime (no-op when unset,
// unparsable, or built without OpenMP).
void set_thread_cap_from_env();

std::vector<double> delta_grid(double lo, double hi, double step);

// figure 1: columns delta, Omega_bar, B, sign on an nx x ny cell-centered
// grid over (0,1)^2.
Dataset region_map(int nx, int ny, Exec exec);

// figure 2: columns n, l, eps_bo on the refined lattice [0, n_max] with
// `refine` cells per unit (41 x 41 points for n_max=10, refine=4).
Dataset error_lattice(const SystemParams& p, int n_max, int refine, Exec exec);

// figure 3: columns delta, n, l, sigma for n,l <= n_max over the delta grid.
Dataset overlap_sweep(const SystemParams& p, const std::vector<double>& deltas, int n_max,
                      int nodes, Exec exec);

// figure 4: columns delta, G11..G22, Gt11..Gt22 over the delta grid.
Dataset g_components_sweep(const SystemParams& p, const std::vector<double>& deltas, Exec exec);

// figure 5: columns delta, Gt11..Gt22, Ut11..Ut22 over the delta grid.
Dataset qu_sweep(const SystemParams& p, const std::vector<double>& deltas, Exec exec);

}  // namespace bopshox::sweep
