#include "gburgers.h"

#include <algorithm>
#include <cstdio>
#include <new>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "initial_data.hpp"
#include "limits.hpp"
#include "model.hpp"
#include "solver.hpp"
#include "tolerances.hpp"
#include "viscous.hpp"

struct gb_grid {
  gburgers::Grid1D g;
};
struct gb_field {
  gburgers::Field f;
};
struct gb_result {
  gburgers::RunResult r;
};
struct gb_mesa {
  gburgers::MesaResult m;
};
struct gb_table {
  gburgers::ConvergenceTable t;
};
struct gb_report {
  gburgers::BoundReport rep;
};

namespace {

thread_local std::string g_last_error;

gb_status fail(gb_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs the body and maps thrown library errors onto status codes.
template <typename Fn>
gb_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const gburgers::ConfigError& e) {
    return fail(GB_ERR_CONFIG, e.what());
  } catch (const gburgers::DomainError& e) {
    return fail(GB_ERR_DOMAIN, e.what());
  } catch (const gburgers::NumericalError& e) {
    return fail(GB_ERR_NUMERICAL, e.what());
  } catch (const gburgers::IoError& e) {
    return fail(GB_ERR_IO, e.what());
  } catch (const gburgers::UsageError& e) {
    return fail(GB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GB_ERR_INTERNAL, "unknown failure");
  }
}

gb_status require(bool ok, const char* what) {
  return ok ? GB_OK : fail(GB_ERR_INVALID_ARGUMENT, what);
}

gb_status copy_text(const std::string& s, char* buf, int cap) {
  if (buf == nullptr || cap <= 0) {
    return fail(GB_ERR_INVALID_ARGUMENT, "output buffer is null or empty");
  }
  std::snprintf(buf, static_cast<std::size_t>(cap), "%s", s.c_str());
  return GB_OK;
}

gburgers::RunConfig make_config(const gburgers::Grid1D& grid, const gb_run_params& p) {
  gburgers::RunConfig cfg;
  cfg.grid = grid;
  cfg.params.m = p.m;
  cfg.params.p = p.p;
  cfg.params.absorption_enabled = p.absorption != 0;
  cfg.t_end = p.t_end;
  if (p.n_snapshot_times < 0 || (p.n_snapshot_times > 0 && p.snapshot_times == nullptr)) {
    throw gburgers::UsageError("run params: snapshot_times is null");
  }
  cfg.snapshot_times.assign(p.snapshot_times, p.snapshot_times + p.n_snapshot_times);
  switch (p.scheme) {
    case GB_SCHEME_GODUNOV_UPWIND:
      cfg.scheme.flux = gburgers::Scheme::godunov_upwind;
      break;
    case GB_SCHEME_LAX_FRIEDRICHS:
      cfg.scheme.flux = gburgers::Scheme::lax_friedrichs;
      break;
    default:
      throw gburgers::ConfigError("run params: unknown scheme id " + std::to_string(p.scheme));
  }
  cfg.scheme.cfl = p.cfl == 0.0 ? 0.45 : p.cfl;
  return cfg;
}

// Sorted unique copy, for turning evaluation times into snapshot times.
std::vector<double> sorted_times(const double* times, int n) {
  if (n <= 0 || times == nullptr) {
    throw gburgers::UsageError("study: need at least one time");
  }
  std::vector<double> v(times, times + n);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

gburgers::SchemeChoice make_scheme(int scheme, double cfl) {
  gburgers::SchemeChoice sc;
  switch (scheme) {
    case GB_SCHEME_GODUNOV_UPWIND:
      sc.flux = gburgers::Scheme::godunov_upwind;
      break;
    case GB_SCHEME_LAX_FRIEDRICHS:
      sc.flux = gburgers::Scheme::lax_friedrichs;
      break;
    default:
      throw gburgers::ConfigError("study: unknown scheme id " + std::to_string(scheme));
  }
  sc.cfl = cfl == 0.0 ? 0.45 : cfl;
  return sc;
}

gb_status check_index(const gb_result* r, int idx, const char* who) {
  if (r == nullptr) return fail(GB_ERR_INVALID_ARGUMENT, std::string(who) + ": null result");
  if (idx < 0 || idx >= static_cast<int>(r->r.times.size())) {
    return fail(GB_ERR_INVALID_ARGUMENT, std::string(who) + ": snapshot index out of range");
  }
  return GB_OK;
}

gb_status check_report_index(const gb_report* rep, int idx, const char* who) {
  if (rep == nullptr) return fail(GB_ERR_INVALID_ARGUMENT, std::string(who) + ": null report");
  if (idx < 0 || idx >= static_cast<int>(rep->rep.checks.size())) {
    return fail(GB_ERR_INVALID_ARGUMENT, std::string(who) + ": check index out of range");
  }
  return GB_OK;
}

}  // namespace

extern "C" {

const char* gb_version(void) { return "1.0.0"; }

const char* gb_last_error_message(void) { return g_last_error.c_str(); }

gb_status gb_tolerance(const char* name, double* out) {
  if (gb_status s = require(name && out, "gb_tolerance: null argument")) return s;
  static const struct {
    const char* name;
    double value;
  } table[] = {
      {"negative_clamp", gburgers::tol::negative_clamp.value},
      {"positivity", gburgers::tol::positivity.value},
      {"mass_ledger_rel", gburgers::tol::mass_ledger_rel.value},
      {"chunked_sum_rel", gburgers::tol::chunked_sum_rel.value},
      {"semigroup_rel", gburgers::tol::semigroup_rel.value},
      {"barrier_headroom", gburgers::tol::barrier_headroom.value},
      {"decay_headroom", gburgers::tol::decay_headroom.value},
      {"psi_bound_headroom", gburgers::tol::psi_bound_headroom.value},
      {"contraction_monotone", gburgers::tol::contraction_monotone.value},
      {"comparison_pointwise", gburgers::tol::comparison_pointwise.value},
      {"mesa_flat", gburgers::tol::mesa_flat.value},
      {"mesa_recursion", gburgers::tol::mesa_recursion.value},
      {"mesa_margin", gburgers::tol::mesa_margin.value},
      {"conservation_defect_abs", gburgers::tol::conservation_defect_abs.value},
      {"entropy_residual_dx", gburgers::tol::entropy_residual_dx.value},
      {"viscous_barrier_cell", gburgers::tol::viscous_barrier_cell.value},
  };
  for (const auto& row : table) {
    if (std::string(name) == row.name) {
      *out = row.value;
      return GB_OK;
    }
  }
  return fail(GB_ERR_INVALID_ARGUMENT, std::string("gb_tolerance: unknown name ") + name);
}

/* ---- grid ---- */

gb_status gb_grid_create(double xmin, double xmax, int n, gb_grid** out) {
  if (gb_status s = require(out != nullptr, "gb_grid_create: out is null")) return s;
  return guarded([&] {
    *out = new gb_grid{gburgers::make_grid(xmin, xmax, n)};
    return GB_OK;
  });
}

void gb_grid_destroy(gb_grid* g) { delete g; }

gb_status gb_grid_n(const gb_grid* g, int* out) {
  if (gb_status s = require(g && out, "gb_grid_n: null argument")) return s;
  *out = g->g.n;
  return GB_OK;
}

gb_status gb_grid_xmin(const gb_grid* g, double* out) {
  if (gb_status s = require(g && out, "gb_grid_xmin: null argument")) return s;
  *out = g->g.xmin;
  return GB_OK;
}

gb_status gb_grid_xmax(const gb_grid* g, double* out) {
  if (gb_status s = require(g && out, "gb_grid_xmax: null argument")) return s;
  *out = g->g.xmax;
  return GB_OK;
}

gb_status gb_grid_dx(const gb_grid* g, double* out) {
  if (gb_status s = require(g && out, "gb_grid_dx: null argument")) return s;
  *out = g->g.dx;
  return GB_OK;
}

/* ---- fields ---- */

gb_status gb_field_create(const gb_grid* g, const double* values, gb_field** out) {
  if (gb_status s = require(g && out, "gb_field_create: null argument")) return s;
  return guarded([&] {
    if (values == nullptr) {
      *out = new gb_field{gburgers::Field(g->g)};
    } else {
      std::vector<double> v(values, values + g->g.n);
      *out = new gb_field{gburgers::Field(g->g, std::move(v))};
    }
    return GB_OK;
  });
}

gb_status gb_field_from_box(const gb_grid* g, double height, double a, double b, gb_field** out) {
  if (gb_status s = require(g && out, "gb_field_from_box: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{gburgers::realize(gburgers::BoxSpec{height, a, b}, g->g)};
    return GB_OK;
  });
}

gb_status gb_field_from_multibox(const gb_grid* g, const double* heights, const double* as,
                                 const double* bs, int count, gb_field** out) {
  if (gb_status s = require(g && out && heights && as && bs && count > 0,
                            "gb_field_from_multibox: null argument or empty list")) {
    return s;
  }
  return guarded([&] {
    gburgers::MultiBoxSpec spec;
    for (int i = 0; i < count; ++i) spec.push_back({heights[i], as[i], bs[i]});
    *out = new gb_field{gburgers::realize(spec, g->g)};
    return GB_OK;
  });
}

gb_status gb_field_from_bump(const gb_grid* g, double height, double center, double width,
                             gb_field** out) {
  if (gb_status s = require(g && out, "gb_field_from_bump: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{gburgers::realize(gburgers::BumpSpec{height, center, width}, g->g)};
    return GB_OK;
  });
}

gb_status gb_field_from_samples(const gb_grid* g, const char* csv_path, gb_field** out) {
  if (gb_status s = require(g && out && csv_path, "gb_field_from_samples: null argument")) {
    return s;
  }
  return guarded([&] {
    *out = new gb_field{gburgers::realize(gburgers::SamplesSpec{csv_path}, g->g)};
    return GB_OK;
  });
}

void gb_field_destroy(gb_field* f) { delete f; }

gb_status gb_field_size(const gb_field* f, int* out) {
  if (gb_status s = require(f && out, "gb_field_size: null argument")) return s;
  *out = f->f.size();
  return GB_OK;
}

gb_status gb_field_values(const gb_field* f, double* out) {
  if (gb_status s = require(f && out, "gb_field_values: null argument")) return s;
  const auto& v = f->f.values();
  std::copy(v.begin(), v.end(), out);
  return GB_OK;
}

gb_status gb_field_total_mass(const gb_field* f, double* out) {
  if (gb_status s = require(f && out, "gb_field_total_mass: null argument")) return s;
  return guarded([&] {
    *out = gburgers::total_mass(f->f);
    return GB_OK;
  });
}

gb_status gb_field_linf(const gb_field* f, double* out) {
  if (gb_status s = require(f && out, "gb_field_linf: null argument")) return s;
  return guarded([&] {
    *out = gburgers::linf(f->f);
    return GB_OK;
  });
}

gb_status gb_field_l1_window(const gb_field* f, double a, double b, double* out) {
  if (gb_status s = require(f && out, "gb_field_l1_window: null argument")) return s;
  return guarded([&] {
    *out = gburgers::l1_window(f->f, a, b);
    return GB_OK;
  });
}

gb_status gb_field_l1_distance(const gb_field* a, const gb_field* b, double* out) {
  if (gb_status s = require(a && b && out, "gb_field_l1_distance: null argument")) return s;
  return guarded([&] {
    *out = gburgers::l1_distance(a->f, b->f);
    return GB_OK;
  });
}

gb_status gb_field_write_csv(const gb_field* f, const char* path) {
  if (gb_status s = require(f && path, "gb_field_write_csv: null argument")) return s;
  return guarded([&] {
    gburgers::write_field_csv(f->f, path);
    return GB_OK;
  });
}

gb_status gb_field_read_csv(const char* path, gb_field** out) {
  if (gb_status s = require(path && out, "gb_field_read_csv: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{gburgers::read_field_csv(path)};
    return GB_OK;
  });
}

/* ---- model scalars ---- */

gb_status gb_flux(double u, double m, double* out) {
  if (gb_status s = require(out != nullptr, "gb_flux: out is null")) return s;
  return guarded([&] {
    *out = gburgers::flux(u, m);
    return GB_OK;
  });
}

gb_status gb_flux_deriv(double u, double m, double* out) {
  if (gb_status s = require(out != nullptr, "gb_flux_deriv: out is null")) return s;
  return guarded([&] {
    *out = gburgers::flux_deriv(u, m);
    return GB_OK;
  });
}

gb_status gb_absorb_exact(double u, double p, double dt, double* out) {
  if (gb_status s = require(out != nullptr, "gb_absorb_exact: out is null")) return s;
  return guarded([&] {
    *out = gburgers::absorb_exact(u, p, dt);
    return GB_OK;
  });
}

gb_status gb_decay_bound(double m, double t, double mass0, double* out) {
  if (gb_status s = require(out != nullptr, "gb_decay_bound: out is null")) return s;
  return guarded([&] {
    *out = gburgers::decay_bound(m, t, mass0);
    return GB_OK;
  });
}

gb_status gb_p_barrier(double p, double t, double linf0, double* out) {
  if (gb_status s = require(out != nullptr, "gb_p_barrier: out is null")) return s;
  return guarded([&] {
    *out = gburgers::p_barrier(p, t, linf0);
    return GB_OK;
  });
}

gb_status gb_speed_bound(double m, double linf0, double* out) {
  if (gb_status s = require(out != nullptr, "gb_speed_bound: out is null")) return s;
  return guarded([&] {
    *out = gburgers::speed_bound(m, linf0);
    return GB_OK;
  });
}

/* ---- running the solvers ---- */

gb_status gb_run(const gb_field* initial, const gb_run_params* params, gb_result** out) {
  if (gb_status s = require(initial && params && out, "gb_run: null argument")) return s;
  return guarded([&] {
    const auto cfg = make_config(initial->f.grid(), *params);
    *out = new gb_result{gburgers::run(cfg, initial->f)};
    return GB_OK;
  });
}

gb_status gb_run_viscous(const gb_field* initial, const gb_run_params* params, gb_result** out) {
  if (gb_status s = require(initial && params && out, "gb_run_viscous: null argument")) return s;
  return guarded([&] {
    auto cfg = make_config(initial->f.grid(), *params);
    cfg.epsilon = params->epsilon;
    *out = new gb_result{gburgers::run_viscous(cfg, initial->f)};
    return GB_OK;
  });
}

void gb_result_destroy(gb_result* r) { delete r; }

gb_status gb_result_snapshot_count(const gb_result* r, int* out) {
  if (gb_status s = require(r && out, "gb_result_snapshot_count: null argument")) return s;
  *out = static_cast<int>(r->r.times.size());
  return GB_OK;
}

gb_status gb_result_time(const gb_result* r, int idx, double* out) {
  if (gb_status s = check_index(r, idx, "gb_result_time")) return s;
  if (gb_status s = require(out != nullptr, "gb_result_time: out is null")) return s;
  *out = r->r.times[static_cast<std::size_t>(idx)];
  return GB_OK;
}

gb_status gb_result_snapshot(const gb_result* r, int idx, gb_field** out) {
  if (gb_status s = check_index(r, idx, "gb_result_snapshot")) return s;
  if (gb_status s = require(out != nullptr, "gb_result_snapshot: out is null")) return s;
  return guarded([&] {
    *out = new gb_field{r->r.snapshots[static_cast<std::size_t>(idx)]};
    return GB_OK;
  });
}

gb_status gb_result_psi_snapshot(const gb_result* r, int idx, gb_field** out) {
  if (gb_status s = check_index(r, idx, "gb_result_psi_snapshot")) return s;
  if (gb_status s = require(out != nullptr, "gb_result_psi_snapshot: out is null")) return s;
  return guarded([&] {
    *out = new gb_field{r->r.psi_snapshots[static_cast<std::size_t>(idx)]};
    return GB_OK;
  });
}

gb_status gb_result_mass_at(const gb_result* r, int idx, double* out) {
  if (gb_status s = check_index(r, idx, "gb_result_mass_at")) return s;
  if (gb_status s = require(out != nullptr, "gb_result_mass_at: out is null")) return s;
  *out = r->r.mass_at[static_cast<std::size_t>(idx)];
  return GB_OK;
}

gb_status gb_result_absorbed_at(const gb_result* r, int idx, double* out) {
  if (gb_status s = check_index(r, idx, "gb_result_absorbed_at")) return s;
  if (gb_status s = require(out != nullptr, "gb_result_absorbed_at: out is null")) return s;
  *out = r->r.absorbed_at[static_cast<std::size_t>(idx)];
  return GB_OK;
}

gb_status gb_result_outflow_at(const gb_result* r, int idx, double* out) {
  if (gb_status s = check_index(r, idx, "gb_result_outflow_at")) return s;
  if (gb_status s = require(out != nullptr, "gb_result_outflow_at: out is null")) return s;
  *out = r->r.outflow_at[static_cast<std::size_t>(idx)];
  return GB_OK;
}

gb_status gb_result_psi(const gb_result* r, gb_field** out) {
  if (gb_status s = require(r && out, "gb_result_psi: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{r->r.psi};
    return GB_OK;
  });
}

gb_status gb_result_absorbed_mass(const gb_result* r, double* out) {
  if (gb_status s = require(r && out, "gb_result_absorbed_mass: null argument")) return s;
  *out = r->r.absorbed_mass;
  return GB_OK;
}

gb_status gb_result_outflow(const gb_result* r, double* out) {
  if (gb_status s = require(r && out, "gb_result_outflow: null argument")) return s;
  *out = r->r.outflow;
  return GB_OK;
}

gb_status gb_result_step_count(const gb_result* r, long* out) {
  if (gb_status s = require(r && out, "gb_result_step_count: null argument")) return s;
  *out = r->r.diagnostics.step_count;
  return GB_OK;
}

gb_status gb_result_warning_count(const gb_result* r, int* out) {
  if (gb_status s = require(r && out, "gb_result_warning_count: null argument")) return s;
  *out = static_cast<int>(r->r.diagnostics.warnings.size());
  return GB_OK;
}

gb_status gb_result_warning(const gb_result* r, int idx, char* buf, int cap) {
  if (gb_status s = require(r != nullptr, "gb_result_warning: null result")) return s;
  if (idx < 0 || idx >= static_cast<int>(r->r.diagnostics.warnings.size())) {
    return fail(GB_ERR_INVALID_ARGUMENT, "gb_result_warning: index out of range");
  }
  return copy_text(r->r.diagnostics.warnings[static_cast<std::size_t>(idx)], buf, cap);
}

/* ---- singular limits ---- */

gb_status gb_mesa_project(const gb_field* u0, gb_mesa** out) {
  if (gb_status s = require(u0 && out, "gb_mesa_project: null argument")) return s;
  return guarded([&] {
    *out = new gb_mesa{gburgers::mesa_project(u0->f)};
    return GB_OK;
  });
}

void gb_mesa_destroy(gb_mesa* m) { delete m; }

gb_status gb_mesa_v(const gb_mesa* m, gb_field** out) {
  if (gb_status s = require(m && out, "gb_mesa_v: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{m->m.v};
    return GB_OK;
  });
}

gb_status gb_mesa_psi(const gb_mesa* m, gb_field** out) {
  if (gb_status s = require(m && out, "gb_mesa_psi: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{m->m.psi};
    return GB_OK;
  });
}

gb_status gb_truncate_at_one(const gb_field* u0, gb_field** out) {
  if (gb_status s = require(u0 && out, "gb_truncate_at_one: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{gburgers::truncate_at_one(u0->f)};
    return GB_OK;
  });
}

gb_status gb_ode_limit_solution(const gb_field* v0, double p, double t, gb_field** out) {
  if (gb_status s = require(v0 && out, "gb_ode_limit_solution: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{gburgers::ode_limit_solution(v0->f, p, t)};
    return GB_OK;
  });
}

gb_status gb_predicted_m_limit(const gb_field* u0, double p, double t, gb_field** out) {
  if (gb_status s = require(u0 && out, "gb_predicted_m_limit: null argument")) return s;
  return guarded([&] {
    *out = new gb_field{gburgers::predicted_m_limit(u0->f, p, t)};
    return GB_OK;
  });
}

gb_status gb_iterated_limits_gap(const gb_field* u0, double* out) {
  if (gb_status s = require(u0 && out, "gb_iterated_limits_gap: null argument")) return s;
  return guarded([&] {
    *out = gburgers::iterated_limits_gap(u0->f);
    return GB_OK;
  });
}

/* ---- checks and studies ---- */

gb_status gb_entropy_residual(const gb_result* r, double k, double m, double p, double* out) {
  if (gb_status s = require(r && out, "gb_entropy_residual: null argument")) return s;
  return guarded([&] {
    *out = gburgers::entropy_residual(r->r, k, m, p);
    return GB_OK;
  });
}

gb_status gb_conservation_defect(const gb_result* r, double* out) {
  if (gb_status s = require(r && out, "gb_conservation_defect: null argument")) return s;
  return guarded([&] {
    *out = gburgers::conservation_defect(r->r);
    return GB_OK;
  });
}

gb_status gb_audit_bounds(const gb_result* r, gb_report** out) {
  if (gb_status s = require(r && out, "gb_audit_bounds: null argument")) return s;
  return guarded([&] {
    *out = new gb_report{gburgers::audit_bounds(r->r, r->r.config)};
    return GB_OK;
  });
}

gb_status gb_contraction_check(const gb_result* a, const gb_result* b, double R, double N,
                               gb_report** out) {
  if (gb_status s = require(a && b && out, "gb_contraction_check: null argument")) return s;
  return guarded([&] {
    *out = new gb_report{gburgers::contraction_check(a->r, b->r, R, N)};
    return GB_OK;
  });
}

gb_status gb_psi_time_independence(const gb_result* r, double t1, double t2, double* out) {
  if (gb_status s = require(r && out, "gb_psi_time_independence: null argument")) return s;
  return guarded([&] {
    *out = gburgers::psi_time_independence(r->r, t1, t2);
    return GB_OK;
  });
}

gb_status gb_psi_time_difference_bound(double m, double mass0, double t1, double t2,
                                       double* out) {
  if (gb_status s = require(out != nullptr, "gb_psi_time_difference_bound: out is null")) {
    return s;
  }
  return guarded([&] {
    *out = gburgers::psi_time_difference_bound(m, mass0, t1, t2);
    return GB_OK;
  });
}

void gb_report_destroy(gb_report* rep) { delete rep; }

gb_status gb_report_check_count(const gb_report* rep, int* out) {
  if (gb_status s = require(rep && out, "gb_report_check_count: null argument")) return s;
  *out = static_cast<int>(rep->rep.checks.size());
  return GB_OK;
}

gb_status gb_report_name(const gb_report* rep, int idx, char* buf, int cap) {
  if (gb_status s = check_report_index(rep, idx, "gb_report_name")) return s;
  return copy_text(rep->rep.checks[static_cast<std::size_t>(idx)].name, buf, cap);
}

gb_status gb_report_slack(const gb_report* rep, int idx, double* out) {
  if (gb_status s = check_report_index(rep, idx, "gb_report_slack")) return s;
  if (gb_status s = require(out != nullptr, "gb_report_slack: out is null")) return s;
  *out = rep->rep.checks[static_cast<std::size_t>(idx)].slack;
  return GB_OK;
}

gb_status gb_report_tolerance(const gb_report* rep, int idx, double* out) {
  if (gb_status s = check_report_index(rep, idx, "gb_report_tolerance")) return s;
  if (gb_status s = require(out != nullptr, "gb_report_tolerance: out is null")) return s;
  *out = rep->rep.checks[static_cast<std::size_t>(idx)].tolerance;
  return GB_OK;
}

gb_status gb_report_pass(const gb_report* rep, int idx, int* out) {
  if (gb_status s = check_report_index(rep, idx, "gb_report_pass")) return s;
  if (gb_status s = require(out != nullptr, "gb_report_pass: out is null")) return s;
  *out = rep->rep.checks[static_cast<std::size_t>(idx)].pass ? 1 : 0;
  return GB_OK;
}

gb_status gb_report_all_pass(const gb_report* rep, int* out) {
  if (gb_status s = require(rep && out, "gb_report_all_pass: null argument")) return s;
  *out = rep->rep.all_pass() ? 1 : 0;
  return GB_OK;
}

gb_status gb_study_limit_m(const gb_field* u0, double p, const double* m_values, int n_values,
                           const double* times, int n_times, double window_a, double window_b,
                           int scheme, double cfl, gb_table** out) {
  if (gb_status s = require(u0 && m_values && n_values > 0 && out,
                            "gb_study_limit_m: null argument or empty value list")) {
    return s;
  }
  return guarded([&] {
    const auto snaps = sorted_times(times, n_times);
    const auto sc = make_scheme(scheme, cfl);
    const gburgers::Field& data = u0->f;
    auto runner = [&](double m) {
      gburgers::RunConfig cfg;
      cfg.grid = data.grid();
      cfg.params = gburgers::ModelParams{m, p, true};
      cfg.t_end = snaps.back();
      cfg.snapshot_times = snaps;
      cfg.scheme = sc;
      return gburgers::run(cfg, data);
    };
    auto reference = [&](double t) { return gburgers::predicted_m_limit(data, p, t); };
    *out = new gb_table{gburgers::convergence_study(
        std::vector<double>(m_values, m_values + n_values), snaps, window_a, window_b, runner,
        reference)};
    return GB_OK;
  });
}

gb_status gb_study_limit_p(const gb_field* u0, double m, const double* p_values, int n_values,
                           const double* times, int n_times, double window_a, double window_b,
                           int scheme, double cfl, gb_table** out) {
  if (gb_status s = require(u0 && p_values && n_values > 0 && out,
                            "gb_study_limit_p: null argument or empty value list")) {
    return s;
  }
  return guarded([&] {
    const auto snaps = sorted_times(times, n_times);
    const auto sc = make_scheme(scheme, cfl);
    const gburgers::Field& data = u0->f;
    const gburgers::RunResult ref_run =
        gburgers::predicted_p_limit(data, m, snaps.back(), snaps, sc);
    auto runner = [&](double p) {
      gburgers::RunConfig cfg;
      cfg.grid = data.grid();
      cfg.params = gburgers::ModelParams{m, p, true};
      cfg.t_end = snaps.back();
      cfg.snapshot_times = snaps;
      cfg.scheme = sc;
      return gburgers::run(cfg, data);
    };
    auto reference = [&](double t) { return ref_run.snapshot(t); };
    *out = new gb_table{gburgers::convergence_study(
        std::vector<double>(p_values, p_values + n_values), snaps, window_a, window_b, runner,
        reference)};
    return GB_OK;
  });
}

gb_status gb_study_viscous(const gb_field* u0, const gb_run_params* params,
                           const double* eps_values, int n_values, double t, gb_table** out) {
  if (gb_status s = require(u0 && params && eps_values && n_values > 0 && out,
                            "gb_study_viscous: null argument or empty value list")) {
    return s;
  }
  return guarded([&] {
    const gburgers::Field& data = u0->f;
    auto base = make_config(data.grid(), *params);
    if (std::find(base.snapshot_times.begin(), base.snapshot_times.end(), t) ==
        base.snapshot_times.end()) {
      throw gburgers::UsageError("gb_study_viscous: t must be one of the snapshot times");
    }
    const gburgers::RunResult hyp = gburgers::run(base, data);
    const gburgers::Field& target = hyp.snapshot(t);
    auto runner = [&](double eps) {
      auto cfg = base;
      cfg.epsilon = eps;
      return gburgers::run_viscous(cfg, data);
    };
    auto reference = [&](double) { return target; };
    *out = new gb_table{gburgers::convergence_study(
        std::vector<double>(eps_values, eps_values + n_values), std::vector<double>{t},
        data.grid().xmin, data.grid().xmax, runner, reference)};
    return GB_OK;
  });
}

void gb_table_destroy(gb_table* t) { delete t; }

gb_status gb_table_row_count(const gb_table* t, int* out) {
  if (gb_status s = require(t && out, "gb_table_row_count: null argument")) return s;
  *out = static_cast<int>(t->t.rows.size());
  return GB_OK;
}

gb_status gb_table_row(const gb_table* t, int idx, double* parameter, double* error,
                       double* ratio) {
  if (gb_status s = require(t != nullptr, "gb_table_row: null table")) return s;
  if (idx < 0 || idx >= static_cast<int>(t->t.rows.size())) {
    return fail(GB_ERR_INVALID_ARGUMENT, "gb_table_row: index out of range");
  }
  const auto& row = t->t.rows[static_cast<std::size_t>(idx)];
  if (parameter != nullptr) *parameter = row.parameter;
  if (error != nullptr) *error = row.error;
  if (ratio != nullptr) *ratio = row.ratio;
  return GB_OK;
}

gb_status gb_table_norm(const gb_table* t, char* buf, int cap) {
  if (gb_status s = require(t != nullptr, "gb_table_norm: null table")) return s;
  return copy_text(t->t.norm, buf, cap);
}

}  // extern "C"
