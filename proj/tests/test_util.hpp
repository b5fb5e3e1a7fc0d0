#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qroots/quaternion.hpp"
#include "qroots/std_poly.hpp"

namespace qroots::test {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  // Components uniform in [-box, box].
  Quaternion quaternion(double box) {
    return {uniform(-box, box), uniform(-box, box), uniform(-box, box), uniform(-box, box)};
  }

  Quaternion unit() {
    std::normal_distribution<double> gauss;
    Quaternion q{gauss(eng_), gauss(eng_), gauss(eng_), gauss(eng_)};
    return q / abs(q);
  }

  // Pure imaginary with norm in [lo, hi] (norm = squared length).
  Quaternion pure_imaginary(double norm_lo, double norm_hi) {
    std::normal_distribution<double> gauss;
    Quaternion x{0.0, gauss(eng_), gauss(eng_), gauss(eng_)};
    return x * (std::sqrt(uniform(norm_lo, norm_hi)) / abs(x));
  }

  // Monic of the given degree, lower coefficients in [-box, box]^4.
  StdPoly monic_poly(int degree, double box) {
    std::vector<Quaternion> c(degree + 1);
    for (int m = 0; m < degree; ++m) c[m] = quaternion(box);
    c[degree] = Quaternion{1.0};
    return StdPoly(std::move(c));
  }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

}  // namespace qroots::test
