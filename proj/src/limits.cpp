#include "limits.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "tolerances.hpp"

namespace gburgers {

MesaResult mesa_project(const Field& u0) {
  const Grid1D& g = u0.grid();
  Field v(g);
  Field psi(g);

  double s = 0.0;     // running surplus, in mass units
  double prev = 0.0;  // psi at the previous cell
  for (int i = 0; i < g.n; ++i) {
    if (!(u0[i] >= 0.0)) {
      throw DomainError("mesa_project: negative input at cell " + std::to_string(i));
    }
    s = std::max(0.0, s + (u0[i] - 1.0) * g.dx);
    psi[i] = s;
    // Difference the sweep itself so v + (psi_i - psi_{i-1})/dx = u0 holds to
    // roundoff: while s grows v is pinned at 1, while it drains v fills to 1,
    // and where s = 0 the data passes through untouched.
    double vi = u0[i] - (s - prev) / g.dx;
    if (vi < 0.0) {
      if (vi < -tol::negative_clamp.value) {
        throw NumericalError("mesa_project: sweep produced " + std::to_string(vi) + " at cell " +
                             std::to_string(i));
      }
      vi = 0.0;
    }
    v[i] = vi;
    prev = s;
  }

  if (s > tol::mesa_margin.value) {
    throw DomainError("mesa_project: grid too small on the right, " + std::to_string(s) +
                      " mass units left undrained at the last cell");
  }
  return {v, psi};
}

Field truncate_at_one(const Field& u0) {
  Field out(u0.grid());
  for (int i = 0; i < u0.size(); ++i) {
    if (!(u0[i] >= 0.0)) {
      throw DomainError("truncate_at_one: negative input at cell " + std::to_string(i));
    }
    out[i] = std::min(u0[i], 1.0);
  }
  return out;
}

Field ode_limit_solution(const Field& v0, double p, double t) {
  if (!(t >= 0.0)) throw DomainError("ode_limit_solution: t must be >= 0");
  Field out(v0.grid());
  for (int i = 0; i < v0.size(); ++i) out[i] = absorb_exact(v0[i], p, t);
  return out;
}

Field predicted_m_limit(const Field& u0, double p, double t) {
  return ode_limit_solution(mesa_project(u0).v, p, t);
}

RunResult predicted_p_limit(const Field& u0, double m, double t_end,
                            const std::vector<double>& snapshot_times,
                            const SchemeChoice& scheme) {
  RunConfig cfg;
  cfg.grid = u0.grid();
  cfg.params = ModelParams{m, 2.0, false};
  cfg.t_end = t_end;
  cfg.snapshot_times = snapshot_times;
  cfg.scheme = scheme;
  return run(cfg, truncate_at_one(u0));
}

double iterated_limits_gap(const Field& u0) {
  const Field a = mesa_project(u0).v;
  const Field b = mesa_project(truncate_at_one(u0)).v;
  return l1_distance(a, b);
}

}  // namespace gburgers
