#include <cstdio>
#include <filesystem>
#include <limits>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "grid.hpp"
#include "initial_data.hpp"

using namespace gburgers;

TEST_CASE("make_grid computes dx and cell centers") {
  const Grid1D g = make_grid(-1.0, 1.0, 4);
  CHECK(g.n == 4);
  CHECK(g.dx == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cell_center(g, 0) == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(cell_center(g, 1) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(cell_center(g, 2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(cell_center(g, 3) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("make_grid rejects degenerate input") {
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 10), ConfigError);
  CHECK_THROWS_AS(make_grid(1.0, -1.0, 10), ConfigError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 3), ConfigError);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0), ConfigError);
}

TEST_CASE("same_grid compares the defining fields") {
  const Grid1D a = make_grid(0.0, 1.0, 10);
  const Grid1D b = make_grid(0.0, 1.0, 10);
  const Grid1D c = make_grid(0.0, 1.0, 20);
  const Grid1D d = make_grid(0.0, 2.0, 10);
  CHECK(same_grid(a, b));
  CHECK_FALSE(same_grid(a, c));
  CHECK_FALSE(same_grid(a, d));
}

TEST_CASE("Field rejects wrong sizes and non-finite entries") {
  const Grid1D g = make_grid(0.0, 1.0, 4);
  CHECK_THROWS_AS(Field(g, std::vector<double>{1.0, 2.0}), UsageError);
  CHECK_THROWS_AS(Field(g, std::vector<double>{1.0, 2.0, 3.0,
                                               std::numeric_limits<double>::quiet_NaN()}),
                  DomainError);
  const Field z(g);
  CHECK(z.size() == 4);
  CHECK(z[3] == 0.0);
}

TEST_CASE("norms: total_mass, linf, l1_distance") {
  const Grid1D g = make_grid(-1.0, 6.0, 1400);
  const Field f = realize(BoxSpec{2.0, 0.0, 1.0}, g);
  CHECK(total_mass(f) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(linf(f) == doctest::Approx(2.0).epsilon(1e-15));

  Field h = f;
  h[700] += 0.25;
  CHECK(l1_distance(f, h) == doctest::Approx(0.25 * g.dx).epsilon(1e-13));
  CHECK(l1_distance(f, f) == 0.0);

  const Grid1D g2 = make_grid(-1.0, 6.0, 700);
  CHECK_THROWS_AS(l1_distance(f, Field(g2)), UsageError);
}

TEST_CASE("l1_window splits additively at cell boundaries") {
  const Grid1D g = make_grid(0.0, 1.0, 8);
  std::vector<double> vals(8);
  for (int i = 0; i < 8; ++i) vals[static_cast<std::size_t>(i)] = 0.3 + 0.1 * i;
  const Field f(g, vals);

  const double cut = 0.5;  // lies on a cell boundary, so no center is double-counted
  const double left = l1_window(f, 0.0, cut);
  const double right = l1_window(f, cut, 1.0);
  const double whole = l1_window(f, 0.0, 1.0);
  CHECK(left + right == doctest::Approx(whole).epsilon(1e-13));
  CHECK(whole == doctest::Approx(total_mass(f)).epsilon(1e-15));
}

TEST_CASE("l1_window rejects bad windows") {
  const Grid1D g = make_grid(0.0, 1.0, 8);
  const Field f(g);
  CHECK_THROWS_AS(l1_window(f, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(l1_window(f, -0.1, 0.5), DomainError);
  CHECK_THROWS_AS(l1_window(f, 0.5, 1.1), DomainError);
}

TEST_CASE("field CSV round-trip reproduces values bitwise") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "gb_grid_csv_test";
  fs::create_directories(dir);
  const std::string path = (dir / "field.csv").string();

  const Grid1D g = make_grid(-0.3, 2.7, 16);
  std::vector<double> vals(16);
  for (int i = 0; i < 16; ++i) {
    vals[static_cast<std::size_t>(i)] = 0.1 + 1.0 / (3.0 + i);  // not exactly representable
  }
  const Field f(g, vals);
  write_field_csv(f, path);
  const Field r = read_field_csv(path);

  REQUIRE(r.size() == f.size());
  for (int i = 0; i < f.size(); ++i) CHECK(r[i] == f[i]);
  CHECK(r.grid().n == g.n);
  CHECK(r.grid().dx == doctest::Approx(g.dx).epsilon(1e-12));
  fs::remove_all(dir);
}
