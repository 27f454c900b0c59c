#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace gburgers {

// Neumaier compensated summation.  Used everywhere mass, psi, or ledger
// quantities accumulate, so results do not depend on chunking.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = s_ + x;
    if (std::abs(s_) >= std::abs(x)) {
      c_ += (s_ - t) + x;
    } else {
      c_ += (x - t) + s_;
    }
    s_ = t;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// One compensated accumulator per entry; snapshots materialize value+carry.
class CompensatedArray {
 public:
  CompensatedArray() = default;
  explicit CompensatedArray(std::size_t n) : s_(n, 0.0), c_(n, 0.0) {}

  void add(std::size_t i, double x) {
    const double t = s_[i] + x;
    if (std::abs(s_[i]) >= std::abs(x)) {
      c_[i] += (s_[i] - t) + x;
    } else {
      c_[i] += (x - t) + s_[i];
    }
    s_[i] = t;
  }

  double value(std::size_t i) const { return s_[i] + c_[i]; }
  std::size_t size() const { return s_.size(); }

  std::vector<double> values() const {
    std::vector<double> out(s_.size());
    for (std::size_t i = 0; i < s_.size(); ++i) out[i] = s_[i] + c_[i];
    return out;
  }

 private:
  std::vector<double> s_;
  std::vector<double> c_;
};

// pow with a fast exact-rounding-enough path for small integer exponents,
// used for fluxes so that every flux evaluation of the same state is
// bit-identical across the solver and the psi accumulator.
inline double upow(double base, double e) {
  if (e == 1.0) return base;
  if (e == 2.0) return base * base;
  const double r = std::floor(e);
  if (r == e && e >= 1.0 && e <= 512.0) {
    unsigned long k = static_cast<unsigned long>(e);
    double acc = 1.0;
    double b = base;
    while (k > 0) {
      if (k & 1UL) acc *= b;
      k >>= 1UL;
      if (k > 0) b *= b;
    }
    return acc;
  }
  return std::pow(base, e);
}

}  // namespace gburgers
