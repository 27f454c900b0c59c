#pragma once

#include "solver.hpp"

namespace gburgers {

// Explicit upwind + centered-diffusion update followed by an exact absorption
// substep over the full dt.  Ghost cells are zero-gradient copies on both
// sides, so spatially constant data is changed by absorption alone.
// Requires dt <= 0.45 * min(dx / max_speed, dx^2 / (2 eps)).
Field viscous_step(const Field& f, double dt, double eps, const ModelParams& params);
Field viscous_step(const Field& f, double dt, double eps, const ModelParams& params,
                   StepAccounting& acct);

// Same contract as run(), driven by viscous_step with the diffusive dt policy.
// config.epsilon must be set and positive.
RunResult run_viscous(const RunConfig& config);
RunResult run_viscous(const RunConfig& config, const Field& initial);

}  // namespace gburgers
