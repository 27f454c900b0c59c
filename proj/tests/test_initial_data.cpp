#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "grid.hpp"
#include "initial_data.hpp"

using namespace gburgers;
namespace fs = std::filesystem;

TEST_CASE("box realization integrates exactly against cells") {
  const Grid1D g = make_grid(-1.0, 6.0, 1400);
  const Field f = realize(BoxSpec{2.0, 0.0, 1.0}, g);
  CHECK(total_mass(f) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(linf(f) == doctest::Approx(2.0).epsilon(1e-14));  // edge cells carry ulp-level overlap error

  // mass is preserved regardless of alignment with the mesh
  const Grid1D g2 = make_grid(-1.0, 6.0, 997);
  const Field f2 = realize(BoxSpec{1.3, 0.123, 2.71}, g2);
  CHECK(total_mass(f2) == doctest::Approx(1.3 * (2.71 - 0.123)).epsilon(1e-13));
}

TEST_CASE("box straddling a cell boundary splits by overlap") {
  const Grid1D g = make_grid(0.0, 0.04, 4);  // dx = 0.01
  const Field f = realize(BoxSpec{1.0, 0.005, 0.015}, g);
  CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(f[2] == 0.0);
  CHECK(f[3] == 0.0);
}

TEST_CASE("box validation") {
  const Grid1D g = make_grid(0.0, 1.0, 10);
  CHECK_THROWS_AS(realize(BoxSpec{-1.0, 0.1, 0.2}, g), DomainError);
  CHECK_THROWS_AS(realize(BoxSpec{1.0, 0.5, 0.5}, g), DomainError);
  CHECK_THROWS_AS(realize(BoxSpec{1.0, -0.1, 0.2}, g), DomainError);
  CHECK_THROWS_AS(realize(BoxSpec{1.0, 0.5, 1.2}, g), DomainError);
  // support touching the domain edges is allowed
  CHECK_NOTHROW(realize(BoxSpec{1.0, 0.0, 1.0}, g));
}

TEST_CASE("multibox sums overlapping boxes") {
  const Grid1D g = make_grid(0.0, 1.0, 100);
  const MultiBoxSpec boxes = {{1.0, 0.1, 0.5}, {0.5, 0.3, 0.9}};
  const Field f = realize(InitialSpec{boxes}, g);
  CHECK(total_mass(f) == doctest::Approx(1.0 * 0.4 + 0.5 * 0.6).epsilon(1e-13));
  CHECK(linf(f) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK_THROWS_AS(realize(InitialSpec{MultiBoxSpec{}}, g), DomainError);
}

TEST_CASE("bump: bounded by its height, compactly supported, positive mass") {
  const Grid1D g = make_grid(-1.0, 1.0, 200);
  const Field f = realize(BumpSpec{1.0, 0.0, 1.0}, g);
  CHECK(linf(f) <= 1.0 + 1e-12);
  CHECK(total_mass(f) > 0.1);
  for (int i = 0; i < g.n; ++i) {
    CHECK(f[i] >= 0.0);
    const double x = cell_center(g, i);
    if (std::abs(x) > 0.5 + g.dx) CHECK(f[i] == 0.0);
  }
  CHECK_THROWS_AS(realize(BumpSpec{1.0, 0.9, 0.5}, g), DomainError);
  CHECK_THROWS_AS(realize(BumpSpec{1.0, 0.0, -1.0}, g), DomainError);
}

TEST_CASE("samples variant loads a written field onto a matching grid") {
  const fs::path dir = fs::temp_directory_path() / "gb_samples_test";
  fs::create_directories(dir);
  const std::string path = (dir / "s.csv").string();

  const Grid1D g = make_grid(0.0, 1.0, 8);
  std::vector<double> vals = {0.0, 0.25, 0.5, 1.0, 1.0, 0.5, 0.25, 0.0};
  write_field_csv(Field(g, vals), path);

  const Field f = realize(SamplesSpec{path}, g);
  for (int i = 0; i < g.n; ++i) CHECK(f[i] == vals[static_cast<std::size_t>(i)]);
  fs::remove_all(dir);
}

TEST_CASE("read_field_csv rejects malformed input with line numbers") {
  const fs::path dir = fs::temp_directory_path() / "gb_csv_errors";
  fs::create_directories(dir);
  const auto write = [&](const char* name, const char* text) {
    std::ofstream out(dir / name);
    out << text;
    return (dir / name).string();
  };

  CHECK_THROWS_AS(read_field_csv((dir / "missing.csv").string()), IoError);
  CHECK_THROWS_AS(read_field_csv(write("empty.csv", "")), IoError);
  CHECK_THROWS_AS(read_field_csv(write("header.csv", "x,u\n")), IoError);
  CHECK_THROWS_AS(read_field_csv(write("bad.csv", "x,u\n0.1,abc\n")), IoError);
  CHECK_THROWS_AS(read_field_csv(write("nocomma.csv", "x,u\n0.1\n")), IoError);
  CHECK_THROWS_AS(
      read_field_csv(write("nonuniform.csv", "x,u\n0,1\n1,1\n3,1\n4,1\n5,1\n")), IoError);

  try {
    read_field_csv(write("bad2.csv", "x,u\n0.1,0\n0.2,oops\n"));
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }
  fs::remove_all(dir);
}
