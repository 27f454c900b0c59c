// Acceptance gate: eleven numbered behavioral checks, one PASS/FAIL line
// each, nonzero exit if any fail.  Every solver run performed here feeds the
// shared mass-ledger tally that check 8 reports on.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "initial_data.hpp"
#include "limits.hpp"
#include "model.hpp"
#include "solver.hpp"
#include "viscous.hpp"

using namespace gburgers;
using Clock = std::chrono::steady_clock;

namespace {

double g_worst_ledger_slack = std::numeric_limits<double>::infinity();
long g_audited_runs = 0;

void note_ledger(const RunResult& r) {
  const BoundReport rep = audit_bounds(r, r.config);
  g_worst_ledger_slack = std::min(g_worst_ledger_slack, rep.at("mass_ledger").slack);
  ++g_audited_runs;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i != 0 ? " " : "") + num(v[i]);
  return s;
}

struct Line {
  bool pass = false;
  std::string label;
  std::string detail;
};

RunConfig make_cfg(const Grid1D& g, double m, double p, bool absorption, double t_end,
                   std::vector<double> snaps) {
  RunConfig cfg;
  cfg.grid = g;
  cfg.params = ModelParams{m, p, absorption};
  cfg.t_end = t_end;
  cfg.snapshot_times = std::move(snaps);
  return cfg;
}

template <typename Fn>
Line guarded(const std::string& label, Fn&& body) {
  Line line;
  line.label = label;
  try {
    auto [pass, detail] = body();
    line.pass = pass;
    line.detail = std::move(detail);
  } catch (const std::exception& e) {
    line.pass = false;
    line.detail = std::string("exception: ") + e.what();
  }
  return line;
}

}  // namespace

int main() {
  const Grid1D G = make_grid(-1.0, 6.0, 1400);  // dx = 1/200
  const Field u0 = realize(BoxSpec{2.0, 0.0, 1.0}, G);
  std::vector<Line> lines(12);

  // 1: projection of box(2,[0,1]) is the height-1 rectangle on [0,2], with the
  // unit-peak tent corrector, in well under 0.1 s
  lines[1] = guarded("mesa projection of a tall box", [&] {
    const auto t0 = Clock::now();
    const MesaResult mesa = mesa_project(u0);
    const double dt = seconds_since(t0);

    const Field vref = realize(BoxSpec{1.0, 0.0, 2.0}, G);
    Field tent(G);
    for (int i = 0; i < G.n; ++i) {
      tent[i] = std::max(0.0, 1.0 - std::abs(cell_center(G, i) - 1.0));
    }
    const double ev = l1_distance(mesa.v, vref);
    const double epsi = l1_distance(mesa.psi, tent);
    const bool pass = ev <= 2.0 * G.dx && epsi <= 2.0 * G.dx && dt < 0.1;
    return std::pair{pass, "|v-rect|=" + num(ev) + " |psi-tent|=" + num(epsi) + " tol=" +
                               num(2.0 * G.dx) + " " + num(dt) + "s"};
  });

  // 2: errors against the mesa+ODE prediction shrink strictly in m and end
  // below 0.08 at m = 32
  lines[2] = guarded("large-m limit convergence", [&] {
    const auto t0 = Clock::now();
    auto runner = [&](double m) {
      RunResult r = run(make_cfg(G, m, 2.0, true, 1.0, {0.5, 1.0}), u0);
      note_ledger(r);
      return r;
    };
    auto reference = [&](double t) { return predicted_m_limit(u0, 2.0, t); };
    const ConvergenceTable tab =
        convergence_study({4.0, 8.0, 16.0, 32.0}, {0.5, 1.0}, G.xmin, G.xmax, runner, reference);
    const double dt = seconds_since(t0);

    std::vector<double> errs;
    for (const auto& row : tab.rows) errs.push_back(row.error);
    const bool pass = strictly_decreasing(errs) && errs.back() <= 0.08 && dt < 60.0;
    return std::pair{pass, "e_m={" + join(errs) + "} cap=0.08 " + num(dt) + "s"};
  });

  // 3: errors against the truncate-then-transport prediction shrink strictly
  // in p and end below 0.05 at p = 64
  lines[3] = guarded("large-p limit convergence", [&] {
    const auto t0 = Clock::now();
    const RunResult ref_run = predicted_p_limit(u0, 2.0, 0.5, {0.25, 0.5});
    note_ledger(ref_run);
    auto runner = [&](double p) {
      RunResult r = run(make_cfg(G, 2.0, p, true, 0.5, {0.25, 0.5}), u0);
      note_ledger(r);
      return r;
    };
    auto reference = [&](double t) { return Field(ref_run.snapshot(t)); };
    const ConvergenceTable tab = convergence_study({4.0, 8.0, 16.0, 32.0, 64.0}, {0.25, 0.5},
                                                   G.xmin, G.xmax, runner, reference);
    const double dt = seconds_since(t0);

    std::vector<double> errs;
    for (const auto& row : tab.rows) errs.push_back(row.error);
    const bool pass = strictly_decreasing(errs) && errs.back() <= 0.05 && dt < 60.0;
    return std::pair{pass, "e_p={" + join(errs) + "} cap=0.05 " + num(dt) + "s"};
  });

  // 4: the two orders of (project, truncate) differ by exactly the over-1 mass
  lines[4] = guarded("iterated limits gap", [&] {
    const auto t0 = Clock::now();
    const double g2 = iterated_limits_gap(u0);
    const double g3 = iterated_limits_gap(realize(BoxSpec{3.0, 0.0, 1.0}, G));
    const double g1 = iterated_limits_gap(realize(BoxSpec{1.0, 0.0, 1.0}, G));
    const double dt = seconds_since(t0);
    const double tol = 4.0 * G.dx;
    const bool pass =
        std::abs(g2 - 1.0) <= tol && std::abs(g3 - 2.0) <= tol && g1 <= 1e-10 && dt < 1.0;
    return std::pair{pass, "gap(2)=" + num(g2) + " gap(3)=" + num(g3) + " gap(1)=" + num(g1) +
                               " tol=" + num(tol) + " " + num(dt) + "s"};
  });

  // shared by checks 5 and 8: the (m, p) matrix run in lockstep against the
  // absorption-off twin
  struct MatrixEntry {
    double m = 0.0;
    double p = 0.0;
    RunResult on;
    RunResult off;
  };
  std::vector<MatrixEntry> matrix;
  std::string matrix_error;
  try {
    for (double m : {2.0, 8.0, 32.0}) {
      for (double p : {2.0, 8.0, 32.0}) {
        const RunConfig cfg_on = make_cfg(G, m, p, true, 1.0, {0.25, 0.5, 1.0});
        const RunConfig cfg_off = make_cfg(G, m, 2.0, false, 1.0, {0.25, 0.5, 1.0});
        auto [on, off] = run_pair(cfg_on, u0, cfg_off, u0);
        note_ledger(on);
        note_ledger(off);
        matrix.push_back({m, p, std::move(on), std::move(off)});
      }
    }
  } catch (const std::exception& e) {
    matrix_error = std::string("exception: ") + e.what();
  }

  // 5: every absorbing snapshot respects the ODE barrier
  lines[5] = guarded("absorption barrier matrix", [&] {
    if (!matrix_error.empty()) return std::pair{false, matrix_error};
    double worst = std::numeric_limits<double>::infinity();
    bool pass = true;
    for (const auto& e : matrix) {
      const BoundReport rep = audit_bounds(e.on, e.on.config);
      const BoundCheck& barrier = rep.at("absorption_barrier");
      worst = std::min(worst, barrier.slack);
      pass = pass && barrier.pass;
    }
    return std::pair{pass, "9 runs, m,p in {2,8,32}, worst slack=" + num(worst)};
  });

  // 6: with absorption off the sup norm obeys the mass-based decay ceiling
  lines[6] = guarded("sup-norm decay bound", [&] {
    double worst = std::numeric_limits<double>::infinity();
    bool pass = true;
    for (double m : {4.0, 8.0, 16.0, 32.0}) {
      const RunResult r = run(make_cfg(G, m, 2.0, false, 1.0, {0.1, 0.25, 0.5, 1.0}), u0);
      note_ledger(r);
      const BoundReport rep = audit_bounds(r, r.config);
      const BoundCheck& decay = rep.at("decay_bound");
      worst = std::min(worst, decay.slack);
      pass = pass && decay.pass;
    }
    return std::pair{pass, "m in {4,8,16,32}, t>=0.1, worst slack=" + num(worst)};
  });

  // 7: L1 distance between random box pairs contracts in the shrinking window
  // and never grows over the whole line
  lines[7] = guarded("L1 contraction, random pairs", [&] {
    const Grid1D g = make_grid(-4.0, 4.0, 800);
    std::mt19937 rng(20260814u);
    std::uniform_real_distribution<double> height(0.2, 2.2);
    std::uniform_real_distribution<double> left(-1.5, 0.9);
    std::uniform_real_distribution<double> width(0.1, 0.6);

    bool pass = true;
    double worst = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 20; ++trial) {
      const double a1 = left(rng);
      const Field f1 = realize(BoxSpec{height(rng), a1, a1 + width(rng)}, g);
      const double a2 = left(rng);
      const Field f2 = realize(BoxSpec{height(rng), a2, a2 + width(rng)}, g);
      const RunConfig cfg = make_cfg(g, 2.0, 2.0, true, 0.5, {0.25, 0.5});
      auto [ra, rb] = run_pair(cfg, f1, cfg, f2);
      note_ledger(ra);
      note_ledger(rb);
      const double N = speed_bound(2.0, std::max(linf(f1), linf(f2)));
      const BoundReport rep = contraction_check(ra, rb, 3.0, N);
      pass = pass && rep.all_pass();
      worst = std::min(worst, std::min(rep.at("windowed_contraction").slack,
                                       rep.at("full_domain_monotone").slack));
    }
    return std::pair{pass, "20 pairs, worst slack=" + num(worst)};
  });

  // 9: psi settles between t = 1 and t = 2 at the closed-form rate, faster for
  // larger m
  lines[9] = guarded("psi time stabilization", [&] {
    std::vector<double> measured;
    bool within = true;
    for (double m : {8.0, 16.0, 32.0}) {
      const RunResult r = run(make_cfg(G, m, 2.0, false, 2.0, {1.0, 2.0}), u0);
      note_ledger(r);
      const double d = psi_time_independence(r, 1.0, 2.0);
      const double bound = psi_time_difference_bound(m, total_mass(u0), 1.0, 2.0);
      within = within && d <= bound * 1.05;
      measured.push_back(d);
    }
    const bool pass = within && strictly_decreasing(measured);
    return std::pair{pass, "d_m={" + join(measured) + "} bounds={0.887 0.410 0.193}"};
  });

  // 10: Kruzhkov residuals of the moving-shock run never drop below -10 dx,
  // and the extreme entropy levels telescope to the conservation defect
  lines[10] = guarded("entropy residual floor", [&] {
    const Grid1D g = make_grid(-1.0, 1.0, 400);
    const Field shock0 = realize(BoxSpec{1.0, -1.0, 0.0}, g);
    const RunResult r =
        run(make_cfg(g, 2.0, 2.0, false, 0.5, {0.1, 0.2, 0.3, 0.4, 0.5}), shock0);
    note_ledger(r);

    const double hi = linf(shock0);
    double min_resid = 0.0;
    for (int i = 0; i <= 8; ++i) {
      min_resid = std::min(min_resid, entropy_residual(r, hi * i / 8.0, 2.0, 2.0));
    }
    const double defect = conservation_defect(r);
    const double agree0 = std::abs(-entropy_residual(r, 0.0, 2.0, 2.0) - defect);
    const double agree_hi = std::abs(-entropy_residual(r, 1.5 * hi, 2.0, 2.0) - defect);
    const bool pass = min_resid >= -10.0 * g.dx && defect <= 1e-10 && agree0 <= 1e-10 &&
                      agree_hi <= 1e-10;
    return std::pair{pass, "min resid=" + num(min_resid) + " floor=" + num(-10.0 * g.dx) +
                               " defect=" + num(defect) +
                               " agreement=" + num(std::max(agree0, agree_hi))};
  });

  // 11: the viscous profiles approach the hyperbolic one as eps drops, and
  // constant data follows the absorption ODE cell for cell
  lines[11] = guarded("vanishing viscosity", [&] {
    const Grid1D g = make_grid(-1.0, 1.0, 400);
    const Field shock0 = realize(BoxSpec{1.0, -0.5, 0.0}, g);
    const RunConfig hyp_cfg = make_cfg(g, 2.0, 2.0, false, 0.5, {0.5});
    const RunResult hyp = run(hyp_cfg, shock0);
    note_ledger(hyp);

    std::vector<double> errs;
    for (double eps : {0.1, 0.01, 0.001}) {
      RunConfig cfg = hyp_cfg;
      cfg.epsilon = eps;
      const RunResult vis = run_viscous(cfg, shock0);
      note_ledger(vis);
      errs.push_back(l1_distance(vis.snapshot(0.5), hyp.snapshot(0.5)));
    }

    const Grid1D gc = make_grid(0.0, 1.0, 50);
    const Field const0 = realize(BoxSpec{0.8, 0.0, 1.0}, gc);
    RunConfig ccfg = make_cfg(gc, 2.0, 3.0, true, 0.5, {0.25, 0.5});
    ccfg.epsilon = 0.05;
    const RunResult cres = run_viscous(ccfg, const0);
    note_ledger(cres);
    double worst_cell = 0.0;
    for (std::size_t k = 0; k < cres.times.size(); ++k) {
      const double expect = p_barrier(3.0, cres.times[k], 0.8);
      for (int i = 0; i < gc.n; ++i) {
        worst_cell = std::max(worst_cell, std::abs(cres.snapshots[k][i] - expect));
      }
    }

    const bool pass = strictly_decreasing(errs) && worst_cell <= 1e-12;
    return std::pair{pass, "e_eps={" + join(errs) + "} const-data dev=" + num(worst_cell)};
  });

  // 8 last: it reports on the ledger of every run the binary performed
  lines[8] = guarded("absorption comparison + mass ledger", [&] {
    if (!matrix_error.empty()) return std::pair{false, matrix_error};
    double worst_gap = -std::numeric_limits<double>::infinity();
    for (const auto& e : matrix) {
      for (std::size_t k = 0; k < e.on.snapshots.size(); ++k) {
        for (int i = 0; i < G.n; ++i) {
          worst_gap = std::max(worst_gap, e.on.snapshots[k][i] - e.off.snapshots[k][i]);
        }
      }
    }
    const bool pass = worst_gap <= 1e-12 && g_worst_ledger_slack >= 0.0;
    return std::pair{pass, "max(u_on-u_off)=" + num(worst_gap) + ", ledger slack=" +
                               num(g_worst_ledger_slack) + " over " +
                               std::to_string(g_audited_runs) + " runs"};
  });

  int failures = 0;
  for (int i = 1; i <= 11; ++i) {
    std::printf("%s  %2d. %-36s (%s)\n", lines[i].pass ? "PASS" : "FAIL", i,
                lines[i].label.c_str(), lines[i].detail.c_str());
    if (!lines[i].pass) ++failures;
  }
  std::printf("%d/11 checks passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
