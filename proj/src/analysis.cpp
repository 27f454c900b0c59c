#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

#include "errors.hpp"
#include "tolerances.hpp"

namespace gburgers {

namespace {

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Nine spatial hats with peaks spread across the interior; each vanishes on
// the first and last cell so boundary fluxes never enter the functional.
std::vector<std::vector<double>> spatial_hats(const Grid1D& g) {
  const double w = (g.xmax - g.xmin - 2.0 * g.dx) / 10.0;
  std::vector<std::vector<double>> hats;
  hats.reserve(9);
  for (int h = 1; h <= 9; ++h) {
    const double c = g.xmin + g.dx + h * w;
    std::vector<double> eta(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) {
      eta[static_cast<std::size_t>(i)] =
          std::max(0.0, 1.0 - std::abs(cell_center(g, i) - c) / w);
    }
    hats.push_back(std::move(eta));
  }
  return hats;
}

// Discrete Kruzhkov functional for one test function: the spatial hat eta
// times the hat in snapshot index peaking at snapshot q.  States pair with
// the time increment of the test function, recorded flux integrals with its
// spatial increment at the interval's end, recorded absorption with its value
// at the interval's end.  At k = 0 the terms are the weak form itself and the
// sum telescopes to roundoff.
double kruzhkov_value(const RunResult& res, double k, double m,
                      const std::vector<double>& eta, std::size_t q) {
  const Grid1D& g = res.initial.grid();
  const int n = g.n;
  const double km = flux(k, m);
  NeumaierSum acc;

  // Interval [t_{q-1}, t_q]: the test function rises from 0 to eta.
  {
    const double dtn = res.times[q] - res.times[q - 1];
    const Field& u = res.snapshots[q - 1];
    const auto& phi0 = res.flux_integrals[q - 1];
    const auto& phi1 = res.flux_integrals[q];
    const Field& a0 = res.absorbed_snapshots[q - 1];
    const Field& a1 = res.absorbed_snapshots[q];
    for (int i = 0; i < n; ++i) {
      const double e = eta[static_cast<std::size_t>(i)];
      if (e == 0.0) continue;
      acc.add(std::abs(u[i] - k) * e * g.dx);
      // sign(u - k); at k = 0 the entropy |u - k| is u itself and the source
      // weight is identically +1, which keeps the telescoping exact even in
      // cells that were empty at t_{q-1} but absorbed mass mid-interval.
      const double sg = (k == 0.0) ? 1.0 : (u[i] > k ? 1.0 : (u[i] < k ? -1.0 : 0.0));
      const double da = a1[i] - a0[i];
      acc.add(-sg * da * e * g.dx);
    }
    for (int j = 1; j < n; ++j) {
      const double de = eta[static_cast<std::size_t>(j)] - eta[static_cast<std::size_t>(j) - 1];
      if (de == 0.0) continue;
      const auto ju = static_cast<std::size_t>(j);
      acc.add(std::abs((phi1[ju] - phi0[ju]) - km * dtn) * de);
    }
  }
  // Interval [t_q, t_{q+1}]: it falls back to 0; only the time term remains.
  {
    const Field& u = res.snapshots[q];
    for (int i = 0; i < n; ++i) {
      const double e = eta[static_cast<std::size_t>(i)];
      if (e == 0.0) continue;
      acc.add(-std::abs(u[i] - k) * e * g.dx);
    }
  }
  return acc.value();
}

void require_snapshots(const RunResult& res, const char* who) {
  if (res.times.size() < 3) {
    throw UsageError(std::string(who) + ": need at least 3 snapshots");
  }
  if (res.times.size() != res.snapshots.size() ||
      res.times.size() != res.flux_integrals.size() ||
      res.times.size() != res.absorbed_snapshots.size()) {
    throw UsageError(std::string(who) + ": result is missing recorded ledgers");
  }
}

template <typename Fn>
auto at_parameter(double param, Fn&& fn) -> decltype(fn()) {
  const std::string tag = "parameter " + fmt_num(param) + ": ";
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(tag + e.what());
  } catch (const DomainError& e) {
    throw DomainError(tag + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(tag + e.what());
  } catch (const IoError& e) {
    throw IoError(tag + e.what());
  } catch (const UsageError& e) {
    throw UsageError(tag + e.what());
  }
}

}  // namespace

bool BoundReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const BoundCheck& BoundReport::at(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw UsageError("report: no check named " + name);
}

double entropy_residual(const RunResult& result, double k, double m, double p) {
  (void)p;  // absorption enters through the recorded per-cell ledger
  if (!(k >= 0.0)) throw DomainError("entropy_residual: k must be >= 0");
  require_snapshots(result, "entropy_residual");

  const auto hats = spatial_hats(result.initial.grid());
  double worst = 0.0;
  for (const auto& eta : hats) {
    for (std::size_t q = 1; q + 1 < result.times.size(); ++q) {
      worst = std::min(worst, kruzhkov_value(result, k, m, eta, q));
    }
  }
  return worst;
}

double conservation_defect(const RunResult& result) {
  require_snapshots(result, "conservation_defect");
  const double m = result.config.params.m;
  const auto hats = spatial_hats(result.initial.grid());
  double worst = 0.0;
  for (const auto& eta : hats) {
    for (std::size_t q = 1; q + 1 < result.times.size(); ++q) {
      worst = std::max(worst, std::abs(kruzhkov_value(result, 0.0, m, eta, q)));
    }
  }
  return worst;
}

BoundReport audit_bounds(const RunResult& result, const RunConfig& config) {
  BoundReport rep;
  const double linf0 = linf(result.initial);
  const double mass0 = total_mass(result.initial);
  const double mass_scale = std::max(mass0, 1e-30);

  {
    double lo = 0.0;
    double hi = linf0;
    for (const auto& s : result.snapshots) {
      for (int i = 0; i < s.size(); ++i) {
        lo = std::min(lo, s[i]);
        hi = std::max(hi, s[i]);
      }
    }
    const double slack =
        std::min(lo + tol::positivity.value, linf0 + tol::positivity.value - hi);
    rep.checks.push_back({"positivity_linf", slack, tol::positivity.value, slack >= 0.0});
  }

  {
    double defect = 0.0;
    for (std::size_t s = 0; s < result.times.size(); ++s) {
      const double miss =
          std::abs(result.mass_at[s] + result.absorbed_at[s] + result.outflow_at[s] - mass0);
      defect = std::max(defect, miss / mass_scale);
    }
    const double slack = tol::mass_ledger_rel.value - defect;
    rep.checks.push_back({"mass_ledger", slack, tol::mass_ledger_rel.value, slack >= 0.0});
  }

  if (config.params.absorption_enabled) {
    double slack = std::numeric_limits<double>::max();
    for (std::size_t s = 0; s + 1 < result.times.size(); ++s) {
      slack = std::min(slack, result.mass_at[s] + tol::mass_ledger_rel.value * mass_scale -
                                  result.mass_at[s + 1]);
    }
    if (result.times.size() < 2) slack = 0.0;
    rep.checks.push_back(
        {"mass_nonincreasing", slack, tol::mass_ledger_rel.value, slack >= 0.0});

    double bslack = std::numeric_limits<double>::max();
    for (std::size_t s = 0; s < result.times.size(); ++s) {
      const double bar = p_barrier(config.params.p, result.times[s], linf0);
      bslack = std::min(bslack, bar + tol::barrier_headroom.value - linf(result.snapshots[s]));
    }
    if (result.times.empty()) bslack = tol::barrier_headroom.value;
    rep.checks.push_back(
        {"absorption_barrier", bslack, tol::barrier_headroom.value, bslack >= 0.0});
  } else {
    double defect = 0.0;
    for (std::size_t s = 0; s < result.times.size(); ++s) {
      defect = std::max(
          defect, std::abs(result.mass_at[s] + result.outflow_at[s] - mass0) / mass_scale);
    }
    const double slack = tol::mass_ledger_rel.value - defect;
    rep.checks.push_back(
        {"mass_conservation", slack, tol::mass_ledger_rel.value, slack >= 0.0});

    double dslack = std::numeric_limits<double>::max();
    bool any = false;
    for (std::size_t s = 0; s < result.times.size(); ++s) {
      const double t = result.times[s];
      if (t < 0.1) continue;
      any = true;
      const double peak = linf(result.snapshots[s]);
      const double cap = 2.0 * mass0 / ((config.params.m - 1.0) * t);
      const double ratio = (peak == 0.0) ? 0.0 : upow(peak, config.params.m) / cap;
      dslack = std::min(dslack, 1.0 + tol::decay_headroom.value - ratio);
    }
    if (any) {
      rep.checks.push_back({"decay_bound", dslack, tol::decay_headroom.value, dslack >= 0.0});
    }
  }

  return rep;
}

BoundReport contraction_check(const RunResult& a, const RunResult& b, double R, double N) {
  if (!same_grid(a.initial.grid(), b.initial.grid())) {
    throw UsageError("contraction_check: runs live on different grids");
  }
  if (a.times != b.times) {
    throw UsageError("contraction_check: snapshot times are not aligned");
  }
  if (!(R > 0.0) || !(N >= 0.0)) {
    throw UsageError("contraction_check: need R > 0 and N >= 0");
  }
  const Grid1D& g = a.initial.grid();

  Field diff0(g);
  for (int i = 0; i < g.n; ++i) diff0[i] = a.initial[i] - b.initial[i];
  const double window_tol = 2.0 * g.dx * linf(diff0);
  const double lo0 = std::max(g.xmin, -R);
  const double hi0 = std::min(g.xmax, R);
  const double d0 = (lo0 < hi0) ? l1_window(diff0, lo0, hi0) : 0.0;

  BoundReport rep;
  {
    double slack = d0 + window_tol;
    for (std::size_t s = 0; s < a.times.size(); ++s) {
      const double t = a.times[s];
      if (N > 0.0 && t >= R / N) continue;
      const double lo = std::max(g.xmin, -R + N * t);
      const double hi = std::min(g.xmax, R - N * t);
      if (!(lo < hi)) continue;
      Field d(g);
      for (int i = 0; i < g.n; ++i) d[i] = a.snapshots[s][i] - b.snapshots[s][i];
      slack = std::min(slack, d0 + window_tol - l1_window(d, lo, hi));
    }
    rep.checks.push_back({"windowed_contraction", slack, window_tol, slack >= 0.0});
  }
  {
    double prev = l1_distance(a.initial, b.initial);
    double slack = tol::contraction_monotone.value;
    for (std::size_t s = 0; s < a.times.size(); ++s) {
      const double cur = l1_distance(a.snapshots[s], b.snapshots[s]);
      slack = std::min(slack, prev + tol::contraction_monotone.value - cur);
      prev = cur;
    }
    rep.checks.push_back(
        {"full_domain_monotone", slack, tol::contraction_monotone.value, slack >= 0.0});
  }
  return rep;
}

double psi_time_independence(const RunResult& result, double t1, double t2) {
  const auto i1 = static_cast<std::size_t>(result.index_of_time(t1));
  const auto i2 = static_cast<std::size_t>(result.index_of_time(t2));
  return l1_distance(result.psi_snapshots[i2], result.psi_snapshots[i1]);
}

double psi_time_difference_bound(double m, double mass0, double t1, double t2) {
  if (!(m > 1.0)) throw DomainError("psi_time_difference_bound: m must be > 1");
  if (!(t1 >= 0.0) || !(t2 >= t1)) {
    throw DomainError("psi_time_difference_bound: need 0 <= t1 <= t2");
  }
  if (!(mass0 >= 0.0)) throw DomainError("psi_time_difference_bound: mass0 must be >= 0");
  const double inv_m = 1.0 / m;
  return (m / (m - 1.0)) * std::pow(m - 1.0, inv_m) * std::pow(2.0, 1.0 - inv_m) *
         std::pow(mass0, 2.0 - inv_m) * (std::pow(t2, inv_m) - std::pow(t1, inv_m));
}

ConvergenceTable convergence_study(std::vector<double> parameters,
                                   const std::vector<double>& times, double window_a,
                                   double window_b,
                                   const std::function<RunResult(double)>& runner,
                                   const std::function<Field(double)>& reference) {
  std::sort(parameters.begin(), parameters.end());
  if (parameters.size() < 3) {
    throw ConfigError("convergence_study: need at least 3 parameter values");
  }
  for (std::size_t i = 1; i < parameters.size(); ++i) {
    if (!(parameters[i] > parameters[i - 1])) {
      throw ConfigError("convergence_study: parameter values must be distinct");
    }
  }
  if (times.empty()) throw ConfigError("convergence_study: need at least one evaluation time");
  if (!runner || !reference) throw UsageError("convergence_study: runner and reference required");

  ConvergenceTable tab;
  tab.norm = "sup over times of L1 on [" + fmt_num(window_a) + ", " + fmt_num(window_b) + "]";
  tab.times = times;

  double prev_err = 0.0;
  for (std::size_t idx = 0; idx < parameters.size(); ++idx) {
    const double param = parameters[idx];
    const double err = at_parameter(param, [&] {
      const RunResult res = runner(param);
      if (idx == 0) tab.grid = res.initial.grid();
      double e = 0.0;
      for (double t : times) {
        const Field& u = res.snapshot(t);
        const Field ref = reference(t);
        if (!same_grid(ref.grid(), u.grid())) {
          throw UsageError("convergence_study: reference grid mismatch");
        }
        Field d(u.grid());
        for (int i = 0; i < d.size(); ++i) d[i] = u[i] - ref[i];
        e = std::max(e, l1_window(d, window_a, window_b));
      }
      return e;
    });
    const double ratio = (idx == 0 || err == 0.0) ? 0.0 : prev_err / err;
    tab.rows.push_back({param, err, ratio});
    prev_err = err;
  }
  return tab;
}

}  // namespace gburgers
