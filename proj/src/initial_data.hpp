#pragma once

#include <string>
#include <variant>
#include <vector>

#include "grid.hpp"

namespace gburgers {

// Rectangular pulse: height on [a, b], zero elsewhere.
struct BoxSpec {
  double height = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// Smooth compactly supported bump centered at `center` with support width
// `width`; peak value is `height`.
struct BumpSpec {
  double height = 0.0;
  double center = 0.0;
  double width = 0.0;
};

// Point samples read from a field CSV, assigned to the nearest cell.
struct SamplesSpec {
  std::string path;
};

using MultiBoxSpec = std::vector<BoxSpec>;

using InitialSpec = std::variant<BoxSpec, MultiBoxSpec, BumpSpec, SamplesSpec>;

// Cell-average realization on the grid.  Boxes are integrated exactly against
// cells (partial overlaps get the exact overlap fraction); the bump uses
// 5-point Gauss-Legendre per cell; samples land on their containing cell.
Field realize(const InitialSpec& spec, const Grid1D& grid);

// CSV with header "x,u", one row per cell, 17 significant digits.
// write followed by read round-trips values bit-exactly.
Field read_field_csv(const std::string& path);
void write_field_csv(const Field& f, const std::string& path);

}  // namespace gburgers
