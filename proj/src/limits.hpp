#pragma once

#include <vector>

#include "solver.hpp"

namespace gburgers {

// Height-1 obstacle projection of a profile: v is the flattened limit shape,
// psi the nonnegative corrector with v + forward-difference(psi)/dx = input.
struct MesaResult {
  Field v;
  Field psi;
};

// Left-to-right running-surplus sweep.  s accumulates the mass above height 1
// and drains where the data sits below 1; because the flux transports to the
// right, displaced mass settles on the right of its origin.  Requires the
// surplus to drain before the last cell, otherwise the grid is too small.
MesaResult mesa_project(const Field& u0);

// Cell-wise min(u, 1).
Field truncate_at_one(const Field& u0);

// Cell-wise exact absorption flow over time t applied to v0.
Field ode_limit_solution(const Field& v0, double p, double t);

// Large-m prediction: project onto the mesa, then let pure absorption act.
Field predicted_m_limit(const Field& u0, double p, double t);

// Large-p prediction: absorption-off transport started from min(u0, 1).
RunResult predicted_p_limit(const Field& u0, double m, double t_end,
                            const std::vector<double>& snapshot_times,
                            const SchemeChoice& scheme = SchemeChoice{});

// L1 distance between the two orders of taking the limits: projecting first
// versus truncating first.  Positive for any data exceeding height 1.
double iterated_limits_gap(const Field& u0);

}  // namespace gburgers
