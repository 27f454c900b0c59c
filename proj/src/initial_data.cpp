#include "initial_data.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "errors.hpp"

namespace gburgers {

namespace {

void check_box(const BoxSpec& s, const Grid1D& g) {
  if (!(s.height >= 0.0)) throw DomainError("box: height must be >= 0");
  if (!(s.a < s.b)) throw DomainError("box: need a < b");
  if (s.a < g.xmin || s.b > g.xmax) throw DomainError("box: support outside the grid");
}

void add_box(Field& f, const BoxSpec& s) {
  const Grid1D& g = f.grid();
  for (int i = 0; i < g.n; ++i) {
    const double xl = g.xmin + static_cast<double>(i) * g.dx;
    const double xr = xl + g.dx;
    const double overlap = std::min(xr, s.b) - std::max(xl, s.a);
    if (overlap > 0.0) f[i] += s.height * (overlap / g.dx);
  }
}

double bump_value(const BumpSpec& s, double x) {
  const double t = 2.0 * (x - s.center) / s.width;
  if (std::abs(t) >= 1.0) return 0.0;
  return s.height * std::exp(1.0 - 1.0 / (1.0 - t * t));
}

Field realize_bump(const BumpSpec& s, const Grid1D& g) {
  if (!(s.height >= 0.0)) throw DomainError("bump: height must be >= 0");
  if (!(s.width > 0.0)) throw DomainError("bump: width must be > 0");
  if (s.center - 0.5 * s.width < g.xmin || s.center + 0.5 * s.width > g.xmax) {
    throw DomainError("bump: support outside the grid");
  }
  // 5-point Gauss-Legendre nodes/weights on [-1, 1].
  static constexpr double node[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                     0.5384693101056831, 0.9061798459386640};
  static constexpr double weight[5] = {0.2369268850561891, 0.4786286704993665,
                                       0.5688888888888889, 0.4786286704993665,
                                       0.2369268850561891};
  Field f(g);
  for (int i = 0; i < g.n; ++i) {
    const double xm = cell_center(g, i);
    double acc = 0.0;
    for (int q = 0; q < 5; ++q) {
      acc += weight[q] * bump_value(s, xm + 0.5 * g.dx * node[q]);
    }
    f[i] = 0.5 * acc;  // cell average
  }
  return f;
}

Field realize_samples(const SamplesSpec& s, const Grid1D& g) {
  const Field raw = read_field_csv(s.path);
  Field f(g);
  const Grid1D& rg = raw.grid();
  for (int j = 0; j < raw.size(); ++j) {
    const double x = cell_center(rg, j);
    const double u = raw[j];
    if (x < g.xmin || x > g.xmax) {
      throw DomainError("samples: sample at x=" + std::to_string(x) + " outside the grid");
    }
    if (!(u >= 0.0)) throw DomainError("samples: negative value at x=" + std::to_string(x));
    int i = static_cast<int>(std::floor((x - g.xmin) / g.dx));
    if (i < 0) i = 0;
    if (i >= g.n) i = g.n - 1;
    f[i] = u;
  }
  return f;
}

}  // namespace

Field realize(const InitialSpec& spec, const Grid1D& grid) {
  if (grid.n < 4) throw ConfigError("realize: grid not initialized");
  if (std::holds_alternative<BoxSpec>(spec)) {
    const auto& b = std::get<BoxSpec>(spec);
    check_box(b, grid);
    Field f(grid);
    add_box(f, b);
    return f;
  }
  if (std::holds_alternative<MultiBoxSpec>(spec)) {
    const auto& boxes = std::get<MultiBoxSpec>(spec);
    if (boxes.empty()) throw DomainError("multibox: empty box list");
    Field f(grid);
    for (const auto& b : boxes) {
      check_box(b, grid);
      add_box(f, b);
    }
    return f;
  }
  if (std::holds_alternative<BumpSpec>(spec)) {
    return realize_bump(std::get<BumpSpec>(spec), grid);
  }
  return realize_samples(std::get<SamplesSpec>(spec), grid);
}

namespace {

std::string strip_eol(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' ||
                        s.back() == '\t')) {
    s.pop_back();
  }
  return s;
}

double parse_number(const std::string& tok, const std::string& path, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw IoError(path + ":" + std::to_string(line) + ": malformed number '" + tok + "'");
  }
  if (!std::isfinite(v)) {
    throw IoError(path + ":" + std::to_string(line) + ": non-finite value");
  }
  return v;
}

}  // namespace

Field read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");

  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty file");
  if (strip_eol(line) != "x,u") {
    throw IoError(path + ":1: expected header 'x,u'");
  }

  std::vector<double> xs, us;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string row = strip_eol(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string::npos) {
      throw IoError(path + ":" + std::to_string(lineno) + ": expected 'x,u' row");
    }
    xs.push_back(parse_number(row.substr(0, comma), path, lineno));
    us.push_back(parse_number(row.substr(comma + 1), path, lineno));
  }
  if (xs.empty()) throw IoError(path + ": no data rows");
  if (xs.size() < 4) {
    throw IoError(path + ": fewer than 4 data rows; a grid needs at least 4 cells");
  }

  const int n = static_cast<int>(xs.size());
  const double dx = (xs.back() - xs.front()) / static_cast<double>(n - 1);
  if (!(dx > 0.0)) throw IoError(path + ": x column must be strictly increasing");
  const double scale = std::max({std::abs(xs.front()), std::abs(xs.back()), dx});
  for (int i = 0; i < n; ++i) {
    const double expect = xs.front() + static_cast<double>(i) * dx;
    if (std::abs(xs[i] - expect) > 1e-9 * scale) {
      throw IoError(path + ":" + std::to_string(i + 2) + ": non-uniform x spacing");
    }
  }
  const Grid1D g = make_grid(xs.front() - 0.5 * dx, xs.back() + 0.5 * dx, n);
  return Field(g, std::move(us));
}

void write_field_csv(const Field& f, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "x,u\n";
  char buf[80];
  for (int i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", cell_center(f.grid(), i), f[i]);
    out << buf;
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace gburgers
