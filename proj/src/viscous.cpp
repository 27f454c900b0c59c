#include "viscous.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "march.hpp"
#include "tolerances.hpp"

namespace gburgers {

namespace {

double stable_dt(const Field& f, double eps, double m, double factor) {
  const double dx = f.grid().dx;
  const double speed = std::max(flux_deriv(linf(f), m), tol::speed_floor);
  return factor * std::min(dx / speed, dx * dx / (2.0 * eps));
}

Field viscous_impl(const Field& f, double dt, double eps, const ModelParams& params,
                   StepAccounting* acct) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ConfigError("viscous: eps must be > 0");
  params.validate();
  const Grid1D& g = f.grid();
  const int n = g.n;

  if (dt > stable_dt(f, eps, params.m, 0.45) * (1.0 + tol::viscous_stability.value)) {
    throw NumericalError("viscous: dt violates the explicit stability bound");
  }

  const double before = linf(f);

  // Interface fluxes, advective (upwind) plus diffusive, with zero-gradient
  // ghosts: copies on both sides, so boundary interfaces carry no diffusion.
  std::vector<double> G(static_cast<std::size_t>(n) + 1);
  G[0] = flux(f[0], params.m);
  for (int j = 1; j < n; ++j) {
    G[static_cast<std::size_t>(j)] =
        flux(f[j - 1], params.m) - eps * (f[j] - f[j - 1]) / g.dx;
  }
  G[static_cast<std::size_t>(n)] = flux(f[n - 1], params.m);

  const double lambda = dt / g.dx;
  Field out(g);
  for (int i = 0; i < n; ++i) {
    double v = f[i] - lambda * (G[static_cast<std::size_t>(i) + 1] - G[static_cast<std::size_t>(i)]);
    if (v < 0.0) {
      if (v < -tol::negative_clamp.value) {
        throw NumericalError("viscous: negative state " + std::to_string(v) + " at cell " +
                             std::to_string(i));
      }
      v = 0.0;
    }
    out[i] = v;
  }

  const double after = linf(out);
  if (after > before * (1.0 + tol::viscous_linf_step.value) + tol::viscous_linf_step.value) {
    throw NumericalError("viscous: maximum principle violated within a step");
  }

  if (acct != nullptr) {
    for (int j = 0; j <= n; ++j) {
      acct->flux_interface.add(static_cast<std::size_t>(j), G[static_cast<std::size_t>(j)] * dt);
    }
    acct->outflow.add((G[static_cast<std::size_t>(n)] - G[0]) * dt);
  }

  if (!params.absorption_enabled) return out;
  return detail::absorb_field(out, params.p, dt, acct);
}

}  // namespace

Field viscous_step(const Field& f, double dt, double eps, const ModelParams& params) {
  return viscous_impl(f, dt, eps, params, nullptr);
}

Field viscous_step(const Field& f, double dt, double eps, const ModelParams& params,
                   StepAccounting& acct) {
  return viscous_impl(f, dt, eps, params, &acct);
}

RunResult run_viscous(const RunConfig& config, const Field& initial) {
  if (!config.epsilon.has_value()) throw ConfigError("run_viscous: config.epsilon is required");
  const double eps = *config.epsilon;
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ConfigError("run_viscous: eps must be > 0");
  const double factor = std::min(config.scheme.cfl, 0.45);
  return detail::time_march(
      config, initial,
      [&, eps, factor](const Field& f) { return stable_dt(f, eps, config.params.m, factor); },
      [&, eps](const Field& f, double dt, StepAccounting& acct) {
        return viscous_impl(f, dt, eps, config.params, &acct);
      });
}

RunResult run_viscous(const RunConfig& config) {
  if (!config.initial.has_value()) throw ConfigError("run_viscous: config carries no initial data");
  return run_viscous(config, realize(*config.initial, config.grid));
}

}  // namespace gburgers
