#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grid.hpp"
#include "initial_data.hpp"
#include "model.hpp"
#include "numerics.hpp"

namespace gburgers {

enum class Scheme { godunov_upwind, lax_friedrichs };

struct SchemeChoice {
  Scheme flux = Scheme::godunov_upwind;
  double cfl = 0.45;  // must lie in (0, 1)
};

struct RunConfig {
  Grid1D grid;
  ModelParams params;
  std::optional<InitialSpec> initial;
  double t_end = 0.0;
  std::vector<double> snapshot_times;  // sorted, unique, within [0, t_end]
  SchemeChoice scheme;
  std::optional<double> epsilon;  // viscous runs only
};

struct RunDiagnostics {
  long step_count = 0;
  std::vector<double> dt_history;
  std::vector<std::string> warnings;
};

// Everything a run produces.  Besides the state snapshots it keeps the
// as-integrated bookkeeping the scheme actually performed: cumulative
// per-interface flux integrals and per-cell absorbed integrals, which let the
// entropy checker reproduce the discrete conservation law to roundoff.
struct RunResult {
  std::vector<double> times;
  std::vector<Field> snapshots;
  std::vector<Field> psi_snapshots;       // psi(x,t) = integral of u^m dtau
  std::vector<Field> absorbed_snapshots;  // per-cell integral of u^p dtau
  // flux_integrals[k][j]: integral over (0, times[k]] of the numerical flux
  // through interface j (j = 0 is the left boundary, j = n the right).
  std::vector<std::vector<double>> flux_integrals;
  std::vector<double> mass_at;      // total_mass at times[k]
  std::vector<double> absorbed_at;  // cumulative absorbed mass at times[k]
  std::vector<double> outflow_at;   // cumulative net boundary loss at times[k]

  Field initial;
  Field psi;  // at t_end
  double absorbed_mass = 0.0;
  double outflow = 0.0;

  RunConfig config;
  RunDiagnostics diagnostics;

  int index_of_time(double t) const;  // throws UsageError when t is not a snapshot
  const Field& snapshot(double t) const { return snapshots[static_cast<std::size_t>(index_of_time(t))]; }
  const Field& psi_at(double t) const { return psi_snapshots[static_cast<std::size_t>(index_of_time(t))]; }
};

// Per-run accumulators shared by the substeps; all compensated.
struct StepAccounting {
  explicit StepAccounting(int n_cells)
      : absorbed_cell(static_cast<std::size_t>(n_cells)),
        flux_interface(static_cast<std::size_t>(n_cells) + 1) {}
  CompensatedArray absorbed_cell;
  CompensatedArray flux_interface;
  NeumaierSum absorbed_total;
  NeumaierSum outflow;  // net: right boundary minus left boundary
};

// Interface flux F(uL, uR).  godunov_upwind reduces to f(uL) because the flux
// is nondecreasing on u >= 0; lax_friedrichs needs alpha >= local speeds.
double numerical_flux(double uL, double uR, double m, const SchemeChoice& scheme, double alpha);

// cfl * dx / max(flux_deriv(linf(f), m), floor); the run loop additionally
// caps the step to land exactly on snapshot times.
double cfl_dt(const Field& f, double m, double dx, double cfl);

// One forward-Euler conservative update.  Ghost cells: zero inflow on the
// left, copy-out on the right.  Negative roundoff is clamped; anything worse
// aborts.
Field hyperbolic_substep(const Field& f, double dt, double m, const SchemeChoice& scheme);
Field hyperbolic_substep(const Field& f, double dt, double m, const SchemeChoice& scheme,
                         StepAccounting& acct);

// Strang step: exact absorption for dt/2, hyperbolic dt, absorption dt/2.
// With absorption disabled this is exactly hyperbolic_substep.
Field step(const Field& f, double dt, const ModelParams& params, const SchemeChoice& scheme);
Field step(const Field& f, double dt, const ModelParams& params, const SchemeChoice& scheme,
           StepAccounting& acct);

RunResult run(const RunConfig& config);
RunResult run(const RunConfig& config, const Field& initial);

// Two runs advanced in lockstep with a shared step sequence (the smaller of
// the two stable steps each time).  Cell-wise comparison and L1 contraction
// are per-step statements about one and the same update operator, so they
// hold to roundoff only when the runs share every dt; independently adapted
// sequences would separate the trajectories at discretization level.
// Grids, t_end, and snapshot times must match; model/scheme may differ.
std::pair<RunResult, RunResult> run_pair(const RunConfig& config_a, const Field& initial_a,
                                         const RunConfig& config_b, const Field& initial_b);

}  // namespace gburgers
