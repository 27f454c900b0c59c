#pragma once

namespace gburgers::tol {

// Every tolerance used by the library lives here, together with the reason it
// has the value it has.  Call sites refer to these constants by name; no
// numeric tolerance is hard-coded elsewhere.
struct Tolerance {
  double value;
  const char* rationale;
};

inline constexpr Tolerance negative_clamp{
    1e-15,
    "negative values this small are update roundoff and are clamped to 0; "
    "anything larger means the scheme lost monotonicity and the run aborts"};

inline constexpr Tolerance positivity{
    1e-15,
    "per-cell positivity / maximum-principle slack for roundoff in the "
    "monotone update"};

inline constexpr Tolerance mass_ledger_rel{
    1e-11,
    "relative closure of mass(t) + absorbed(<=t) + outflow(<=t) = mass(0); "
    "compensated accumulators leave only the update-arithmetic random walk"};

inline constexpr Tolerance chunked_sum_rel{
    1e-13,
    "total_mass must not depend on summation chunking; Neumaier compensation "
    "keeps the defect far below this"};

inline constexpr Tolerance semigroup_rel{
    1e-12,
    "absorb_exact(absorb_exact(u,s),t) vs absorb_exact(u,s+t): the flow is "
    "exact, only exp/log roundoff remains"};

inline constexpr Tolerance barrier_headroom{
    1e-3,
    "linf(u(t)) <= spatially-constant absorption barrier: holds to roundoff "
    "for the split scheme, slack covers long-run accumulation"};

inline constexpr Tolerance decay_headroom{
    0.05,
    "sup u^m <= 2*mass0/((m-1)t) has a factor-2 cushion over the exact "
    "box-data profile; 5% absorbs discretization error"};

inline constexpr Tolerance psi_bound_headroom{
    0.05,
    "L1 time-difference of psi against its closed-form bound; 5% covers "
    "quadrature and transport error"};

inline constexpr Tolerance contraction_monotone{
    1e-12,
    "full-domain L1 difference of two runs may not grow; roundoff per "
    "snapshot interval is orders below this"};

inline constexpr Tolerance comparison_pointwise{
    1e-12,
    "absorption-on solution may not exceed the absorption-off twin per cell; "
    "slack for desynchronized adaptive steps"};

inline constexpr Tolerance mesa_flat{
    1e-12,
    "mesa output obeys v <= 1 up to sweep roundoff"};

inline constexpr Tolerance mesa_recursion{
    1e-10,
    "v + discrete derivative of psi must reproduce the input; the sweep "
    "satisfies this identically, slack is accumulation roundoff"};

inline constexpr Tolerance mesa_margin{
    1e-10,
    "sweep residue at the last cell above this means the displaced mass did "
    "not fit inside the grid"};

inline constexpr Tolerance conservation_defect_abs{
    1e-10,
    "entropy residual at k=0 (and k>=linf) telescopes to the as-recorded "
    "conservation defect, which is pure roundoff"};

inline constexpr Tolerance entropy_residual_dx{
    10.0,
    "most negative admissible Kruzhkov residual, in units of dx, for an "
    "entropic shock resolved by a monotone scheme"};

inline constexpr Tolerance cfl_check{
    1e-12,
    "relative slack when verifying dt * max_speed <= dx inside a substep"};

inline constexpr Tolerance viscous_stability{
    1e-9,
    "relative slack on dt <= 0.45*min(dx/speed, dx^2/(2 eps)) to tolerate "
    "roundoff in the policy itself"};

inline constexpr Tolerance viscous_barrier_cell{
    1e-12,
    "constant data under the viscous scheme follows absorb_exact per cell; "
    "only semigroup roundoff accumulates"};

inline constexpr Tolerance viscous_linf_step{
    1e-14,
    "per-step maximum-principle slack for the explicit viscous update"};

inline constexpr double speed_floor = 1e-14;  // max(flux_deriv, floor) in dt policies

inline constexpr long max_steps = 50'000'000;  // hard stop against runaway dt collapse

}  // namespace gburgers::tol
