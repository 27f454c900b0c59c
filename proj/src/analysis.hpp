#pragma once

#include <functional>
#include <string>
#include <vector>

#include "solver.hpp"

namespace gburgers {

// One audited bound.  slack is the bound (with its stated tolerance already
// added) minus the worst observation, so slack >= 0 means the check passed
// with that much room.
struct BoundCheck {
  std::string name;
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_pass() const;
  const BoundCheck& at(const std::string& name) const;  // throws UsageError when absent
};

struct ConvergenceRow {
  double parameter = 0.0;
  double error = 0.0;
  double ratio = 0.0;  // previous error / this error; 0 on the first row or on exact zeros
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::string norm;  // description of the error functional
  std::vector<double> times;
  Grid1D grid;
};

// Most negative value over the fixed test-function family of the discrete
// Kruzhkov functional for entropy level k (0 when none is negative).  The
// functional pairs snapshot states with the flux and absorption integrals the
// scheme actually recorded, so at k = 0 (and k above the data) it telescopes
// to the run's conservation defect.  Needs at least 3 snapshots.
double entropy_residual(const RunResult& result, double k, double m, double p);

// Largest |weak-form defect| over the same test-function family: how far the
// recorded snapshots, flux integrals and absorption ledger are from an exact
// discrete conservation law.  Pure roundoff for an intact run.
double conservation_defect(const RunResult& result);

// L-infinity / positivity, mass ledger and trend, the absorption barrier
// (absorption on) and the sup-norm decay bound (absorption off, t >= 0.1).
BoundReport audit_bounds(const RunResult& result, const RunConfig& config);

// Windowed L1 contraction for two runs differing only in initial data:
// || uA(t) - uB(t) ||_L1 on [-R + Nt, R - Nt] (clipped to the domain) must
// not exceed the initial distance on [-R, R]; the full-domain distance must
// be nonincreasing across snapshots.  Snapshots with t >= R/N are skipped.
BoundReport contraction_check(const RunResult& a, const RunResult& b, double R, double N);

// || psi(t2) - psi(t1) ||_L1 between two stored snapshots.
double psi_time_independence(const RunResult& result, double t1, double t2);

// Closed-form ceiling for the value above:
// (m/(m-1)) (m-1)^(1/m) 2^(1-1/m) mass0^(2-1/m) (t2^(1/m) - t1^(1/m)).
double psi_time_difference_bound(double m, double mass0, double t1, double t2);

// For each parameter (ascending), run the solver and take the sup over the
// requested times of the windowed L1 distance to reference(t).  Parameters
// are sorted internally, so any input order yields the same table.  Runner
// failures are rethrown with the parameter value attached.
ConvergenceTable convergence_study(std::vector<double> parameters,
                                   const std::vector<double>& times, double window_a,
                                   double window_b,
                                   const std::function<RunResult(double)>& runner,
                                   const std::function<Field(double)>& reference);

}  // namespace gburgers
