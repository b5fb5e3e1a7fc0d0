#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <utility>

#include "qroots/quaternion.hpp"

namespace qroots::detail {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;  // row-major

// Gaussian elimination with partial pivoting; nullopt when A is (numerically)
// singular.
inline std::optional<Vec4> solve4(Mat4 a, Vec4 b) {
  double scale = 0.0;
  for (const auto& row : a)
    for (double v : row) scale = std::fmax(scale, std::fabs(v));
  if (scale == 0.0) return std::nullopt;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row) {
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    }
    if (std::fabs(a[pivot][col]) <= 1e-13 * scale) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int row = col + 1; row < 4; ++row) {
      const double factor = a[row][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[row][c] -= factor * a[col][c];
      b[row] -= factor * b[col];
    }
  }
  Vec4 x{};
  for (int row = 3; row >= 0; --row) {
    double acc = b[row];
    for (int c = row + 1; c < 4; ++c) acc -= a[row][c] * x[c];
    x[row] = acc / a[row][row];
  }
  return x;
}

inline Quaternion basis(int idx) {
  Quaternion e;
  if (idx == 0) e.re = 1.0;
  if (idx == 1) e.i = 1.0;
  if (idx == 2) e.j = 1.0;
  if (idx == 3) e.k = 1.0;
  return e;
}

// Directional derivative of z -> z^power at z along e:
// sum_{l=0}^{power-1} z^l e z^(power-1-l). `powers` holds z^0 .. z^(power-1).
template <class Powers>
Quaternion power_derivative(const Powers& powers, int power, const Quaternion& e) {
  Quaternion acc;
  for (int l = 0; l < power; ++l) acc += powers[l] * e * powers[power - 1 - l];
  return acc;
}

} // namespace qroots::detail
