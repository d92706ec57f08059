#include "bopshox/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bopshox/analysis.hpp"
#include "bopshox/bo.hpp"
#include "bopshox/dataset.hpp"
#include "bopshox/exact.hpp"
#include "bopshox/phasespace.hpp"
#include "bopshox/sweep.hpp"

namespace bopshox::cli {

namespace {

struct Options {
  std::optional<double> m, M, omega, Omega, delta, Omega_bar;
  std::string config;
  std::string out = ".";
  std::string format = "csv";
  int nodes = 80;
  double tol = 1e-8;

  // per-command extras
  int n = 0, l = 0;
  int n_max = -1;           // -1: command default
  bool n_set = false, l_set = false;
  std::string sweep_delta;  // lo:hi:step
  int figure = 0;
};

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(Errc::ConfigError, "cli: cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size())
    throw Error(Errc::ConfigError, "cli: trailing characters in " + what + " '" + text + "'");
  return v;
}

SystemParams build_params(const Options& o) {
  SystemParams::Raw raw;
  if (!o.config.empty()) raw = parse_config_file(o.config, raw);
  if (o.m) raw.m = *o.m;
  if (o.M) raw.M = *o.M;
  if (o.omega) raw.omega = *o.omega;
  if (o.Omega) raw.Omega = *o.Omega;
  if (o.Omega_bar) raw.Omega = *o.Omega_bar * raw.omega;
  if (o.delta) raw.delta = *o.delta;
  return SystemParams::validate(raw);
}

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  throw Error(Errc::ConfigError, "cli: format must be csv or json");
}

std::vector<double> parse_sweep(const std::string& spec) {
  double v[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t next = i < 2 ? spec.find(':', pos) : spec.size();
    if (next == std::string::npos)
      throw Error(Errc::ConfigError, "cli: sweep must look like lo:hi:step");
    v[i] = parse_number(spec.substr(pos, next - pos), "sweep bound");
    pos = next + 1;
  }
  return sweep::delta_grid(v[0], v[1], v[2]);
}

void emit(const Dataset& ds, const Options& o) {
  const auto path = write_file(ds, o.out, parse_format(o.format));
  std::cout << summary_line(ds, path) << "\n";
}

int lattice_max(const Options& o, int fallback) { return o.n_max >= 0 ? o.n_max : fallback; }

void cmd_exact(const SystemParams& p, const Options& o) {
  const auto nm = exact::normal_modes(p);
  Dataset summary;
  summary.name = "exact_summary";
  summary.columns = {"lambda1", "lambda2", "theta", "omega1", "omega2",
                     "G11", "G12", "G21", "G22"};
  summary.key_column = "lambda1";
  summary.rows = {{nm.lambda1, nm.lambda2, nm.theta, nm.omega1, nm.omega2,
                   nm.G.a11, nm.G.a12, nm.G.a21, nm.G.a22}};
  emit(summary, o);

  const int top = lattice_max(o, 10);
  Dataset energies;
  energies.name = "exact_energies";
  energies.columns = {"n", "l", "E"};
  energies.key_column = "E";
  for (int n = 0; n <= top; ++n)
    for (int l = 0; l <= top; ++l)
      energies.rows.push_back({double(n), double(l), exact::energy(p, StateIndex(n, l))});
  emit(energies, o);
}

void cmd_bo(const SystemParams& p, const Options& o) {
  const Mat2 gt = bo::g_tilde(p);
  const Mat2 rt = bo::r_tilde(p);
  Dataset summary;
  summary.name = "bo_summary";
  summary.columns = {"omega1_tilde", "omega2_tilde", "Gt11", "Gt12", "Gt21", "Gt22",
                     "Rt11", "Rt12", "Rt21", "Rt22"};
  summary.key_column = "omega1_tilde";
  summary.rows = {{bo::omega1_tilde(p), bo::omega2_tilde(p), gt.a11, gt.a12, gt.a21, gt.a22,
                   rt.a11, rt.a12, rt.a21, rt.a22}};
  emit(summary, o);

  const int top = lattice_max(o, 10);
  Dataset energies;
  energies.name = "bo_energies";
  energies.columns = {"n", "l", "E_bo", "beta_nn"};
  energies.key_column = "E_bo";
  for (int n = 0; n <= top; ++n)
    for (int l = 0; l <= top; ++l)
      energies.rows.push_back(
          {double(n), double(l), bo::energy(p, StateIndex(n, l)), bo::beta_diag(p, n)});
  emit(energies, o);
}

void cmd_shoot(const SystemParams& p, const Options& o) {
  const auto result = phasespace::shoot_eigenvalue(p, o.n, o.l, o.tol);
  const double closed = bo::energy(p, StateIndex(o.n, o.l));
  const double residual = analysis::offdiagonal_residual(p, o.n, result.trajectory);
  Dataset ds;
  ds.name = "shoot";
  ds.columns = {"n", "l", "E_shoot", "E_closed", "rel_error", "node_count", "offdiag_residual"};
  ds.key_column = "E_shoot";
  ds.rows = {{double(o.n), double(o.l), result.energy, closed,
              std::fabs(result.energy - closed) / closed, double(result.trajectory.node_count),
              residual}};
  emit(ds, o);
}

void cmd_errors(const SystemParams& p, const Options& o) {
  const int top = lattice_max(o, 10);
  Dataset table;
  table.name = "errors";
  table.columns = {"n", "l", "E_exact", "E_bo", "eps_bo"};
  table.key_column = "eps_bo";
  for (int n = 0; n <= top; ++n)
    for (int l = 0; l <= top; ++l) {
      const StateIndex s(n, l);
      table.rows.push_back({double(n), double(l), exact::energy(p, s), bo::energy(p, s),
                            analysis::error_breakdown(p, s).eps_bo});
    }
  emit(table, o);

  Dataset summary;
  summary.name = "errors_summary";
  summary.columns = {"eps_omega", "eps_Omega", "omega_bar1", "omega_bar2", "B",
                     "slope", "intercept", "degenerate"};
  summary.key_column = "B";
  const auto b = analysis::error_breakdown(p, StateIndex(0, 0));
  double slope = 0.0, intercept = 0.0, degenerate = 1.0;
  if (p.delta() != 0.0) {
    const auto line = analysis::zero_error_line(p);
    slope = line.slope;
    intercept = line.intercept;
    degenerate = 0.0;
  }
  summary.rows = {{b.eps_omega, b.eps_Omega, b.omega_bar1, b.omega_bar2, b.region_b,
                   slope, intercept, degenerate}};
  emit(summary, o);
}

void cmd_overlap(const SystemParams& p, const Options& o) {
  Dataset ds;
  ds.name = "overlap";
  ds.columns = {"n", "l", "sigma", "convergence"};
  ds.key_column = "sigma";
  if (o.n_set || o.l_set) {
    const auto r = analysis::overlap_sigma(p, StateIndex(o.n, o.l), o.nodes);
    ds.rows = {{double(o.n), double(o.l), r.sigma, r.convergence}};
  } else {
    const int top = lattice_max(o, 5);
    for (int n = 0; n <= top; ++n)
      for (int l = 0; l <= top; ++l) {
        const auto r = analysis::overlap_sigma(p, StateIndex(n, l), o.nodes);
        ds.rows.push_back({double(n), double(l), r.sigma, r.convergence});
      }
  }
  emit(ds, o);
}

void cmd_qu(const SystemParams& p, const Options& o) {
  if (!o.sweep_delta.empty()) {
    const auto deltas = parse_sweep(o.sweep_delta);
    Dataset ds = sweep::qu_sweep(p, deltas, sweep::Exec::Parallel);
    ds.name = "qu_sweep";
    emit(ds, o);
    return;
  }
  const auto f = analysis::qu_decompose(p);
  Dataset ds;
  ds.name = "qu";
  ds.columns = {"delta", "Q11", "Q12", "Q21", "Q22", "U11", "U12", "U22",
                "Ut11", "Ut12", "Ut22", "deviation"};
  ds.key_column = "deviation";
  ds.rows = {{p.delta(), f.Q.a11, f.Q.a12, f.Q.a21, f.Q.a22, f.U.a11, f.U.a12, f.U.a22,
              f.U_tilde.a11, f.U_tilde.a12, f.U_tilde.a22, f.deviation}};
  emit(ds, o);
}

void cmd_figure(const SystemParams& p, const Options& o) {
  Dataset ds;
  switch (o.figure) {
    case 1:
      ds = sweep::region_map(400, 400, sweep::Exec::Parallel);
      break;
    case 2:
      ds = sweep::error_lattice(p, lattice_max(o, 10), 4, sweep::Exec::Parallel);
      break;
    case 3:
      ds = sweep::overlap_sweep(p, sweep::delta_grid(0.0, 0.995, 0.005), lattice_max(o, 5),
                                o.nodes, sweep::Exec::Parallel);
      break;
    case 4:
      ds = sweep::g_components_sweep(p, sweep::delta_grid(0.0, 0.995, 0.005),
                                     sweep::Exec::Parallel);
      break;
    case 5:
      ds = sweep::qu_sweep(p, sweep::delta_grid(0.0, 0.995, 0.005), sweep::Exec::Parallel);
      break;
    default:
      throw Error(Errc::ConfigError, "cli: figure index must be 1..5");
  }
  validate_schema(ds, figure_schema(o.figure));
  emit(ds, o);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--m", o.m, "mass of the fast oscillator");
  cmd->add_option("--M", o.M, "mass of the slow oscillator");
  cmd->add_option("--omega", o.omega, "fast angular frequency");
  cmd->add_option("--Omega", o.Omega, "slow angular frequency");
  cmd->add_option("--Omega-bar", o.Omega_bar, "slow frequency as a fraction of omega");
  cmd->add_option("--delta", o.delta, "dimensionless coupling, |delta| < 1");
  cmd->add_option("--config", o.config, "key=value parameter file");
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--format", o.format, "csv or json")->capture_default_str();
  cmd->add_option("--nodes", o.nodes, "Gauss-Hermite nodes per axis")->capture_default_str();
  cmd->add_option("--tol", o.tol, "relative shooting tolerance")->capture_default_str();
}

}  // namespace

SystemParams::Raw parse_config_file(const std::filesystem::path& path, SystemParams::Raw base) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cli: cannot read config file " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string entry = strip(line);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ConfigError,
                  "cli: " + path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = strip(entry.substr(0, eq));
    const double value = parse_number(strip(entry.substr(eq + 1)), "config value");
    if (key == "m")
      base.m = value;
    else if (key == "M")
      base.M = value;
    else if (key == "omega")
      base.omega = value;
    else if (key == "Omega")
      base.Omega = value;
    else if (key == "delta")
      base.delta = value;
    else
      throw Error(Errc::ConfigError, "cli: unknown config key '" + key + "'");
  }
  return base;
}

int run(int argc, const char* const* argv) {
  Options o;
  CLI::App app{"Exact and Born-Oppenheimer spectra of two bilinearly coupled harmonic "
               "oscillators, with a phase-space shooting eigensolver and error analysis"};
  app.require_subcommand(1);

  CLI::App* c_exact = app.add_subcommand("exact", "normal modes, energies and G matrix");
  CLI::App* c_bo = app.add_subcommand("bo", "effective frequencies, energies, G~ and R~");
  CLI::App* c_shoot = app.add_subcommand("shoot", "recover one eigenvalue by shooting");
  CLI::App* c_errors = app.add_subcommand("errors", "relative-error table and zero line");
  CLI::App* c_overlap = app.add_subcommand("overlap", "exact/BO wavefunction overlaps");
  CLI::App* c_qu = app.add_subcommand("qu", "QU factorization of G");
  CLI::App* c_figure = app.add_subcommand("figure", "emit a figure dataset (1-5)");

  for (CLI::App* cmd : {c_exact, c_bo, c_shoot, c_errors, c_overlap, c_qu, c_figure})
    add_common(cmd, o);
  for (CLI::App* cmd : {c_exact, c_bo, c_errors, c_overlap})
    cmd->add_option("--nmax", o.n_max, "largest quantum number in tables");
  c_shoot->add_option("--n", o.n, "fast quantum number")->capture_default_str();
  c_shoot->add_option("--l", o.l, "slow quantum number")->capture_default_str();
  c_overlap->add_option("--n", o.n, "fast quantum number")->each([&o](const std::string&) {
    o.n_set = true;
  });
  c_overlap->add_option("--l", o.l, "slow quantum number")->each([&o](const std::string&) {
    o.l_set = true;
  });
  c_qu->add_option("--sweep-delta", o.sweep_delta, "coupling sweep lo:hi:step");
  c_figure->add_option("index", o.figure, "figure number 1-5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sweep::set_thread_cap_from_env();
    const SystemParams p = build_params(o);
    if (c_exact->parsed()) cmd_exact(p, o);
    if (c_bo->parsed()) cmd_bo(p, o);
    if (c_shoot->parsed()) cmd_shoot(p, o);
    if (c_errors->parsed()) cmd_errors(p, o);
    if (c_overlap->parsed()) cmd_overlap(p, o);
    if (c_qu->parsed()) cmd_qu(p, o);
    if (c_figure->parsed()) cmd_figure(p, o);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_config_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace bopshox::cli
