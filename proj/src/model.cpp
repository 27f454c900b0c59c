#include "model.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "numerics.hpp"

namespace gburgers {

void ModelParams::validate() const {
  if (!std::isfinite(m) || m <= 1.0) {
    throw ConfigError("model: m must be a finite real > 1 (got " + std::to_string(m) + ")");
  }
  if (absorption_enabled && (!std::isfinite(p) || p <= 1.0)) {
    throw ConfigError("model: p must be a finite real > 1 when absorption is on (got " +
                      std::to_string(p) + ")");
  }
}

double flux(double u, double m) {
  if (!(u >= 0.0)) throw DomainError("flux: negative (or NaN) state");
  return upow(u, m);
}

double flux_deriv(double u, double m) {
  if (!(u >= 0.0)) throw DomainError("flux_deriv: negative (or NaN) state");
  if (u == 0.0) return 0.0;
  return m * upow(u, m - 1.0);
}

double absorb_exact(double u, double p, double dt) {
  if (!(p > 1.0)) throw ConfigError("absorb_exact: p must be > 1");
  if (!(u >= 0.0)) throw DomainError("absorb_exact: negative (or NaN) state");
  if (!(dt >= 0.0)) throw DomainError("absorb_exact: negative (or NaN) dt");
  if (u == 0.0 || dt == 0.0) return u;

  const double pm1 = p - 1.0;
  if (p == 2.0) return u / (1.0 + dt * u);  // closed form, no transcendentals

  // z = (p-1) dt u^(p-1), computed through logs so huge exponents stay exact
  // where representable and collapse to the t -> infinity asymptote otherwise.
  const double z = pm1 * dt * std::pow(u, pm1);
  if (!std::isfinite(z)) {
    const double log_z = std::log(pm1) + std::log(dt) + pm1 * std::log(u);
    return std::exp(std::log(u) - log_z / pm1);
  }
  return u * std::exp(-std::log1p(z) / pm1);
}

double decay_bound(double m, double t, double mass0) {
  if (!(m > 1.0)) throw DomainError("decay_bound: m must be > 1");
  if (!(t > 0.0)) throw DomainError("decay_bound: t must be > 0");
  if (!(mass0 >= 0.0)) throw DomainError("decay_bound: mass0 must be >= 0");
  return std::pow(2.0 * mass0 / ((m - 1.0) * t), 1.0 / m);
}

double p_barrier(double p, double t, double linf0) {
  if (!(p > 1.0)) throw DomainError("p_barrier: p must be > 1");
  if (!(t >= 0.0)) throw DomainError("p_barrier: t must be >= 0");
  if (!(linf0 >= 0.0)) throw DomainError("p_barrier: linf0 must be >= 0");
  if (linf0 == 0.0) return 0.0;
  if (t == 0.0) return linf0;
  const double pm1 = p - 1.0;
  const double base = pm1 * t + std::pow(linf0, -pm1);
  if (!std::isfinite(base)) return 0.0;
  return std::pow(base, -1.0 / pm1);
}

double speed_bound(double m, double linf0) {
  if (!(m > 1.0)) throw DomainError("speed_bound: m must be > 1");
  if (!(linf0 >= 0.0)) throw DomainError("speed_bound: linf0 must be >= 0");
  if (linf0 == 0.0) return 0.0;
  return m * upow(linf0, m - 1.0);
}

}  // namespace gburgers
