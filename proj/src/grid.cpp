#include "grid.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "numerics.hpp"

namespace gburgers {

Grid1D make_grid(double xmin, double xmax, int n) {
  if (!std::isfinite(xmin) || !std::isfinite(xmax)) {
    throw ConfigError("grid: xmin/xmax must be finite");
  }
  if (!(xmax > xmin)) {
    throw ConfigError("grid: xmax must be greater than xmin (got xmin=" +
                      std::to_string(xmin) + ", xmax=" + std::to_string(xmax) + ")");
  }
  if (n < 4) {
    throw ConfigError("grid: n must be at least 4 (got n=" + std::to_string(n) + ")");
  }
  Grid1D g;
  g.xmin = xmin;
  g.xmax = xmax;
  g.n = n;
  g.dx = (xmax - xmin) / static_cast<double>(n);
  return g;
}

bool same_grid(const Grid1D& a, const Grid1D& b) {
  return a.xmin == b.xmin && a.xmax == b.xmax && a.n == b.n;
}

Field::Field(const Grid1D& g, std::vector<double> values) : grid_(g), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != g.n) {
    throw UsageError("field: value count does not match grid cell count");
  }
  for (double x : v_) {
    if (!std::isfinite(x)) throw DomainError("field: entries must be finite");
  }
}

double l1_window(const Field& f, double a, double b) {
  const Grid1D& g = f.grid();
  if (!(a < b)) throw DomainError("l1_window: need a < b");
  if (a < g.xmin || b > g.xmax) {
    throw DomainError("l1_window: window [" + std::to_string(a) + ", " + std::to_string(b) +
                      "] lies outside the grid domain");
  }
  NeumaierSum s;
  for (int i = 0; i < f.size(); ++i) {
    const double x = cell_center(g, i);
    if (x >= a && x <= b) s.add(std::abs(f[i]));
  }
  return s.value() * g.dx;
}

double total_mass(const Field& f) {
  if (f.size() == 0) throw UsageError("total_mass: empty field");
  return l1_window(f, f.grid().xmin, f.grid().xmax);
}

double linf(const Field& f) {
  double m = 0.0;
  for (int i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
  return m;
}

double l1_distance(const Field& a, const Field& b) {
  if (!same_grid(a.grid(), b.grid())) throw UsageError("l1_distance: fields on different grids");
  NeumaierSum s;
  for (int i = 0; i < a.size(); ++i) s.add(std::abs(a[i] - b[i]));
  return s.value() * a.grid().dx;
}

}  // namespace gburgers
