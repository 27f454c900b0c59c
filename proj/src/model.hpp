#pragma once

namespace gburgers {

// Parameters of u_t + (u^m)_x = -u^p on nonnegative data.
struct ModelParams {
  double m = 2.0;
  double p = 2.0;
  bool absorption_enabled = true;

  void validate() const;  // throws ConfigError
};

// f(u) = u^m on u >= 0.
double flux(double u, double m);

// f'(u) = m u^(m-1); 0 at u = 0.
double flux_deriv(double u, double m);

// Exact solution of w' = -w^p, w(0) = u, evaluated at dt.  Semigroup in dt,
// monotone in u, and an exact fixed point at u = 0.
double absorb_exact(double u, double p, double dt);

// Sup-norm decay bound for absorption-free runs: u(t)^m <= 2*mass0/((m-1)t),
// returned as the bound on u itself.
double decay_bound(double m, double t, double mass0);

// Spatially constant supersolution under absorption:
// ((p-1)t + linf0^(1-p))^(-1/(p-1)).
double p_barrier(double p, double t, double linf0);

// Finite propagation speed of data bounded by linf0: m * linf0^(m-1).
double speed_bound(double m, double linf0);

}  // namespace gburgers
