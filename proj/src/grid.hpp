#pragma once

#include <vector>

namespace gburgers {

// Uniform 1D cell-centered grid on [xmin, xmax] with n cells.
struct Grid1D {
  double xmin = 0.0;
  double xmax = 0.0;
  int n = 0;
  double dx = 0.0;
};

Grid1D make_grid(double xmin, double xmax, int n);

inline double cell_center(const Grid1D& g, int i) {
  return g.xmin + (static_cast<double>(i) + 0.5) * g.dx;
}

bool same_grid(const Grid1D& a, const Grid1D& b);

// Cell-averaged scalar field on a Grid1D.  Value semantics.
class Field {
 public:
  Field() = default;
  explicit Field(const Grid1D& g) : grid_(g), v_(static_cast<std::size_t>(g.n), 0.0) {}
  Field(const Grid1D& g, std::vector<double> values);

  const Grid1D& grid() const { return grid_; }
  int size() const { return static_cast<int>(v_.size()); }

  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }

  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

 private:
  Grid1D grid_;
  std::vector<double> v_;
};

// Sum of |f_i| * dx over cells whose center lies in [a, b].
double l1_window(const Field& f, double a, double b);

// l1_window over the whole domain, compensated so the result does not depend
// on summation chunking.
double total_mass(const Field& f);

double linf(const Field& f);

// Convenience: || a - b ||_L1 over the full (shared) domain.
double l1_distance(const Field& a, const Field& b);

}  // namespace gburgers
