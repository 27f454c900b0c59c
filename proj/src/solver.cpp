#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "errors.hpp"
#include "march.hpp"
#include "tolerances.hpp"

namespace gburgers {

namespace {

void validate_scheme(const SchemeChoice& s) {
  if (!(s.cfl > 0.0) || !(s.cfl < 1.0)) {
    throw ConfigError("scheme: cfl must lie in (0, 1), got " + std::to_string(s.cfl));
  }
}

void validate_config(const RunConfig& cfg) {
  if (cfg.grid.n < 4) throw ConfigError("run: grid not initialized");
  cfg.params.validate();
  validate_scheme(cfg.scheme);
  if (!std::isfinite(cfg.t_end) || !(cfg.t_end > 0.0)) {
    throw ConfigError("run: t_end must be > 0");
  }
  double prev = -1.0;
  for (double t : cfg.snapshot_times) {
    if (!std::isfinite(t) || t < 0.0 || t > cfg.t_end) {
      throw ConfigError("run: snapshot times must lie in [0, t_end]");
    }
    if (t <= prev) throw ConfigError("run: snapshot times must be strictly increasing");
    prev = t;
  }
}

Field hyperbolic_impl(const Field& f, double dt, double m, const SchemeChoice& scheme,
                      StepAccounting* acct) {
  const Grid1D& g = f.grid();
  const int n = g.n;
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw NumericalError("substep: invalid dt");

  const double smax = flux_deriv(linf(f), m);
  if (dt * smax > g.dx * (1.0 + tol::cfl_check.value)) {
    throw NumericalError("substep: CFL violation, dt * max_speed exceeds dx");
  }
  const double alpha = std::max(smax, tol::speed_floor);

  std::vector<double> F(static_cast<std::size_t>(n) + 1);
  F[0] = numerical_flux(0.0, f[0], m, scheme, alpha);  // zero inflow
  for (int i = 1; i < n; ++i) {
    F[static_cast<std::size_t>(i)] = numerical_flux(f[i - 1], f[i], m, scheme, alpha);
  }
  F[static_cast<std::size_t>(n)] = numerical_flux(f[n - 1], f[n - 1], m, scheme, alpha);  // copy-out

  const double lambda = dt / g.dx;
  Field out(g);
  for (int i = 0; i < n; ++i) {
    double v = f[i] - lambda * (F[static_cast<std::size_t>(i) + 1] - F[static_cast<std::size_t>(i)]);
    if (v < 0.0) {
      if (v < -tol::negative_clamp.value) {
        throw NumericalError("substep: negative state " + std::to_string(v) + " at cell " +
                             std::to_string(i));
      }
      v = 0.0;
    }
    out[i] = v;
  }

  if (acct != nullptr) {
    for (int j = 0; j <= n; ++j) {
      acct->flux_interface.add(static_cast<std::size_t>(j), F[static_cast<std::size_t>(j)] * dt);
    }
    acct->outflow.add((F[static_cast<std::size_t>(n)] - F[0]) * dt);
  }
  return out;
}

}  // namespace

double numerical_flux(double uL, double uR, double m, const SchemeChoice& scheme, double alpha) {
  switch (scheme.flux) {
    case Scheme::godunov_upwind:
      (void)flux(uR, m);  // still reject negative states on the right
      return flux(uL, m);
    case Scheme::lax_friedrichs: {
      const double need = flux_deriv(std::max(uL, uR), m);
      if (alpha < need * (1.0 - 1e-12)) {
        throw DomainError("numerical_flux: Lax-Friedrichs alpha below local speed");
      }
      return 0.5 * (flux(uL, m) + flux(uR, m)) - 0.5 * alpha * (uR - uL);
    }
  }
  throw UsageError("numerical_flux: unknown scheme");
}

double cfl_dt(const Field& f, double m, double dx, double cfl) {
  if (!(dx > 0.0)) throw ConfigError("cfl_dt: dx must be > 0");
  if (!(cfl > 0.0) || !(cfl < 1.0)) throw ConfigError("cfl_dt: cfl must lie in (0, 1)");
  const double speed = flux_deriv(linf(f), m);
  return cfl * dx / std::max(speed, tol::speed_floor);
}

Field hyperbolic_substep(const Field& f, double dt, double m, const SchemeChoice& scheme) {
  return hyperbolic_impl(f, dt, m, scheme, nullptr);
}

Field hyperbolic_substep(const Field& f, double dt, double m, const SchemeChoice& scheme,
                         StepAccounting& acct) {
  return hyperbolic_impl(f, dt, m, scheme, &acct);
}

Field step(const Field& f, double dt, const ModelParams& params, const SchemeChoice& scheme) {
  StepAccounting scratch(f.size());
  return step(f, dt, params, scheme, scratch);
}

Field step(const Field& f, double dt, const ModelParams& params, const SchemeChoice& scheme,
           StepAccounting& acct) {
  params.validate();
  if (!params.absorption_enabled) {
    return hyperbolic_impl(f, dt, params.m, scheme, &acct);
  }
  const Field a = detail::absorb_field(f, params.p, 0.5 * dt, &acct);
  const Field h = hyperbolic_impl(a, dt, params.m, scheme, &acct);
  return detail::absorb_field(h, params.p, 0.5 * dt, &acct);
}

int RunResult::index_of_time(double t) const {
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] == t) return static_cast<int>(k);
  }
  throw UsageError("result: time " + std::to_string(t) + " is not a stored snapshot");
}

namespace detail {

Field absorb_field(const Field& f, double p, double dt, StepAccounting* acct) {
  Field out(f.grid());
  NeumaierSum removed;
  for (int i = 0; i < f.size(); ++i) {
    const double nu = absorb_exact(f[i], p, dt);
    out[i] = nu;
    if (acct != nullptr) {
      const double d = f[i] - nu;
      acct->absorbed_cell.add(static_cast<std::size_t>(i), d);
      removed.add(d);
    }
  }
  if (acct != nullptr) acct->absorbed_total.add(removed.value() * f.grid().dx);
  return out;
}

RunResult time_march(const RunConfig& config, const Field& initial,
                     const std::function<double(const Field&)>& dt_policy,
                     const std::function<Field(const Field&, double, StepAccounting&)>& do_step) {
  validate_config(config);
  if (!same_grid(initial.grid(), config.grid)) {
    throw UsageError("run: initial data lives on a different grid");
  }
  for (int i = 0; i < initial.size(); ++i) {
    if (!(initial[i] >= 0.0)) throw DomainError("run: initial data must be nonnegative");
  }

  const Grid1D& g = config.grid;
  const double mass0 = total_mass(initial);
  const double linf0 = linf(initial);

  RunResult r;
  r.config = config;
  r.initial = initial;

  // Finite-speed containment is advisory: the a-priori bound m*linf^(m-1)
  // is wildly conservative for large m, so a violation is recorded, not fatal.
  double right_support = g.xmin;
  for (int i = 0; i < initial.size(); ++i) {
    if (initial[i] > 0.0) right_support = g.xmin + (static_cast<double>(i) + 1.0) * g.dx;
  }
  const double nspeed = speed_bound(config.params.m, linf0);
  const double reach_time =
      nspeed > 0.0 ? (g.xmax - right_support) / nspeed : std::numeric_limits<double>::infinity();
  if (right_support + nspeed * config.t_end + 10.0 * g.dx > g.xmax) {
    r.diagnostics.warnings.push_back(
        "containment: worst-case speed estimate reaches the right boundary before t_end");
  }

  CompensatedArray psi(static_cast<std::size_t>(g.n));
  StepAccounting acct(g.n);
  Field u = initial;

  const auto record = [&](double t, const Field& state) {
    r.times.push_back(t);
    r.snapshots.push_back(state);
    r.psi_snapshots.push_back(Field(g, psi.values()));
    r.absorbed_snapshots.push_back(Field(g, acct.absorbed_cell.values()));
    r.flux_integrals.push_back(acct.flux_interface.values());
    r.mass_at.push_back(total_mass(state));
    r.absorbed_at.push_back(acct.absorbed_total.value());
    r.outflow_at.push_back(acct.outflow.value());
  };

  std::size_t next = 0;
  const auto& snaps = config.snapshot_times;
  if (next < snaps.size() && snaps[next] == 0.0) {
    record(0.0, u);
    ++next;
  }

  double t = 0.0;
  while (t < config.t_end) {
    double dt = dt_policy(u);
    if (!(dt > 0.0) || !std::isfinite(dt)) {
      throw NumericalError("run: dt policy produced an unusable step at t=" + std::to_string(t));
    }
    const double t_next = (next < snaps.size()) ? snaps[next] : config.t_end;
    bool land = false;
    if (t + dt >= t_next) {
      dt = t_next - t;
      land = true;
    }

    for (int i = 0; i < g.n; ++i) {
      psi.add(static_cast<std::size_t>(i), flux(u[i], config.params.m) * dt);
    }

    u = do_step(u, dt, acct);
    for (int i = 0; i < g.n; ++i) {
      if (!std::isfinite(u[i])) {
        throw NumericalError("run: non-finite state at step " +
                             std::to_string(r.diagnostics.step_count) + ", cell " +
                             std::to_string(i));
      }
    }

    ++r.diagnostics.step_count;
    r.diagnostics.dt_history.push_back(dt);
    t = land ? t_next : t + dt;
    if (land && next < snaps.size() && t == snaps[next]) {
      record(t, u);
      ++next;
    }
    if (r.diagnostics.step_count > tol::max_steps) {
      throw NumericalError("run: exceeded the maximum step count");
    }
  }

  r.psi = Field(g, psi.values());
  r.absorbed_mass = acct.absorbed_total.value();
  r.outflow = acct.outflow.value();
  if (r.outflow > 0.01 * mass0 && config.t_end < reach_time) {
    r.diagnostics.warnings.push_back(
        "containment: boundary outflow exceeded 1% of the initial mass");
  }
  return r;
}

}  // namespace detail

RunResult run(const RunConfig& config, const Field& initial) {
  const double m = config.params.m;
  const double cfl = config.scheme.cfl;
  const double dx = config.grid.dx;
  return detail::time_march(
      config, initial, [&](const Field& f) { return cfl_dt(f, m, dx, cfl); },
      [&](const Field& f, double dt, StepAccounting& acct) {
        return step(f, dt, config.params, config.scheme, acct);
      });
}

RunResult run(const RunConfig& config) {
  if (!config.initial.has_value()) throw ConfigError("run: config carries no initial data");
  return run(config, realize(*config.initial, config.grid));
}

namespace {

// Per-run state of one member of a lockstep pair; mirrors time_march's
// bookkeeping but leaves the step-size choice to the shared outer loop.
struct PairTrack {
  RunConfig cfg;
  Field u;
  CompensatedArray psi;
  StepAccounting acct;
  RunResult r;

  PairTrack(const RunConfig& c, const Field& u0)
      : cfg(c), u(u0), psi(static_cast<std::size_t>(c.grid.n)), acct(c.grid.n) {
    if (!same_grid(u0.grid(), c.grid)) {
      throw UsageError("run_pair: initial data lives on a different grid");
    }
    for (int i = 0; i < u0.size(); ++i) {
      if (!(u0[i] >= 0.0)) throw DomainError("run_pair: initial data must be nonnegative");
    }
    r.config = c;
    r.initial = u0;
  }

  void record(double t) {
    r.times.push_back(t);
    r.snapshots.push_back(u);
    r.psi_snapshots.push_back(Field(cfg.grid, psi.values()));
    r.absorbed_snapshots.push_back(Field(cfg.grid, acct.absorbed_cell.values()));
    r.flux_integrals.push_back(acct.flux_interface.values());
    r.mass_at.push_back(total_mass(u));
    r.absorbed_at.push_back(acct.absorbed_total.value());
    r.outflow_at.push_back(acct.outflow.value());
  }

  void advance(double dt) {
    for (int i = 0; i < cfg.grid.n; ++i) {
      psi.add(static_cast<std::size_t>(i), flux(u[i], cfg.params.m) * dt);
    }
    u = step(u, dt, cfg.params, cfg.scheme, acct);
    for (int i = 0; i < cfg.grid.n; ++i) {
      if (!std::isfinite(u[i])) {
        throw NumericalError("run_pair: non-finite state at step " +
                             std::to_string(r.diagnostics.step_count) + ", cell " +
                             std::to_string(i));
      }
    }
    ++r.diagnostics.step_count;
    r.diagnostics.dt_history.push_back(dt);
  }

  void finish() {
    r.psi = Field(cfg.grid, psi.values());
    r.absorbed_mass = acct.absorbed_total.value();
    r.outflow = acct.outflow.value();
  }
};

}  // namespace

std::pair<RunResult, RunResult> run_pair(const RunConfig& config_a, const Field& initial_a,
                                         const RunConfig& config_b, const Field& initial_b) {
  validate_config(config_a);
  validate_config(config_b);
  if (!same_grid(config_a.grid, config_b.grid)) {
    throw UsageError("run_pair: configs use different grids");
  }
  if (config_a.t_end != config_b.t_end || config_a.snapshot_times != config_b.snapshot_times) {
    throw UsageError("run_pair: time axes must match");
  }
  if (config_a.epsilon.has_value() || config_b.epsilon.has_value()) {
    throw UsageError("run_pair: viscous runs are not supported in lockstep");
  }

  PairTrack a(config_a, initial_a);
  PairTrack b(config_b, initial_b);
  const double dx = config_a.grid.dx;

  std::size_t next = 0;
  const auto& snaps = config_a.snapshot_times;
  if (next < snaps.size() && snaps[next] == 0.0) {
    a.record(0.0);
    b.record(0.0);
    ++next;
  }

  double t = 0.0;
  long steps = 0;
  while (t < config_a.t_end) {
    double dt = std::min(cfl_dt(a.u, config_a.params.m, dx, config_a.scheme.cfl),
                         cfl_dt(b.u, config_b.params.m, dx, config_b.scheme.cfl));
    if (!(dt > 0.0) || !std::isfinite(dt)) {
      throw NumericalError("run_pair: unusable step at t=" + std::to_string(t));
    }
    const double t_next = (next < snaps.size()) ? snaps[next] : config_a.t_end;
    bool land = false;
    if (t + dt >= t_next) {
      dt = t_next - t;
      land = true;
    }
    a.advance(dt);
    b.advance(dt);
    t = land ? t_next : t + dt;
    if (land && next < snaps.size() && t == snaps[next]) {
      a.record(t);
      b.record(t);
      ++next;
    }
    if (++steps > tol::max_steps) {
      throw NumericalError("run_pair: exceeded the maximum step count");
    }
  }

  a.finish();
  b.finish();
  return {std::move(a.r), std::move(b.r)};
}

}  // namespace gburgers
