#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>

namespace qroots {

// Global relative tolerance used for equality and zero tests.
inline constexpr double kDefaultTol = 1e-9;

// Real quaternion re + i*i + j*j + k*k with i^2 = j^2 = -1, k = ij, ji = -k.
struct Quaternion {
  double re = 0.0;
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re_, double i_ = 0.0, double j_ = 0.0, double k_ = 0.0)
      : re(re_), i(i_), j(j_), k(k_) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr std::array<double, 4> components() const { return {re, i, j, k}; }
  constexpr double operator[](int idx) const {
    return idx == 0 ? re : idx == 1 ? i : idx == 2 ? j : k;
  }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    re += o.re; i += o.i; j += o.j; k += o.k;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    re -= o.re; i -= o.i; j -= o.j; k -= o.k;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    re *= s; i *= s; j *= s; k *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    re /= s; i /= s; j /= s; k /= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.re, -q.i, -q.j, -q.k}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q /= s; }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.re * q.re - p.i * q.i - p.j * q.j - p.k * q.k,
          p.re * q.i + p.i * q.re + p.j * q.k - p.k * q.j,
          p.re * q.j - p.i * q.k + p.j * q.re + p.k * q.i,
          p.re * q.k + p.i * q.j - p.j * q.i + p.k * q.re};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.re, -q.i, -q.j, -q.k}; }

// Sum of squared components, i.e. q * conj(q).
constexpr double norm(const Quaternion& q) {
  return q.re * q.re + q.i * q.i + q.j * q.j + q.k * q.k;
}

// Euclidean length sqrt(norm(q)).
inline double abs(const Quaternion& q) { return std::sqrt(norm(q)); }

// Largest absolute component; the metric used for root deduplication.
inline double max_abs(const Quaternion& q) {
  return std::fmax(std::fmax(std::fabs(q.re), std::fabs(q.i)),
                   std::fmax(std::fabs(q.j), std::fabs(q.k)));
}

constexpr double real_part(const Quaternion& q) { return q.re; }
constexpr Quaternion imag_part(const Quaternion& q) { return {0.0, q.i, q.j, q.k}; }

// Throws ZeroDivisionError for q == 0.
Quaternion inverse(const Quaternion& q);

struct ConjNormInv {
  Quaternion conjugate;
  double norm;
  Quaternion inverse;
};

// Conjugate, norm and inverse in one call. Throws ZeroDivisionError for q == 0.
ConjNormInv conj_norm_inv(const Quaternion& q);

struct RealImag {
  double r;
  Quaternion x;
};

// q = r + x with r real and x pure imaginary.
constexpr RealImag split(const Quaternion& q) { return {q.re, imag_part(q)}; }

bool is_zero(const Quaternion& q, double tol = kDefaultTol);
// |Im q| <= tol * max(1, |q|). Zero counts as pure real.
bool is_pure_real(const Quaternion& q, double tol = kDefaultTol);
// |Re q| <= tol * max(1, |q|). Zero counts as pure imaginary.
bool is_pure_imaginary(const Quaternion& q, double tol = kDefaultTol);
// Componentwise closeness in the max-component metric, relative to 1 + |p|.
bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = kDefaultTol);

Quaternion pow(const Quaternion& q, int exponent);

// q = modulus * (cos(angle) + sin(angle) * axis), angle in [0, pi].
// The axis is a unit pure imaginary, absent when q is pure real.
struct PolarForm {
  double modulus = 0.0;
  double angle = 0.0;
  std::optional<Quaternion> axis;

  Quaternion reconstruct() const;
};

PolarForm polar(const Quaternion& q);

// exp(angle * axis) for a unit pure imaginary axis.
Quaternion exp_axis(double angle, const Quaternion& axis);

std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace qroots
