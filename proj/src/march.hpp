#pragma once

// Internal: shared time-marching loop for the hyperbolic and viscous runs.

#include <functional>

#include "solver.hpp"

namespace gburgers::detail {

// dt_policy proposes a stable step for the current state; do_step advances it.
// The loop caps dt so snapshot times and t_end are hit exactly, accumulates
// psi with the pre-step field, and records ledgers/diagnostics.
RunResult time_march(const RunConfig& config, const Field& initial,
                     const std::function<double(const Field&)>& dt_policy,
                     const std::function<Field(const Field&, double, StepAccounting&)>& do_step);

// Cellwise absorb_exact with optional ledger recording.
Field absorb_field(const Field& f, double p, double dt, StepAccounting* acct);

}  // namespace gburgers::detail
