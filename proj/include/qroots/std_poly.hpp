#pragma once

#include <initializer_list>
#include <vector>

#include "qroots/quaternion.hpp"

namespace qroots {

// Standard (left-coefficient) polynomial in H[z], where z is central:
// f(z) = a_n z^n + ... + a_1 z + a_0 with coeffs()[m] = a_m.
//
// Trailing coefficients are trimmed eagerly: exactly zero ones on
// construction, and ones below tol * max|a_m| after ring operations.
class StdPoly {
public:
  StdPoly() = default;
  StdPoly(std::initializer_list<Quaternion> coeffs);
  explicit StdPoly(std::vector<Quaternion> coeffs);

  // z - a
  static StdPoly linear(const Quaternion& a);
  static StdPoly monomial(const Quaternion& coeff, int power);

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Quaternion& leading() const { return coeffs_.back(); }
  Quaternion operator[](int m) const;

  // Standard-form evaluation a_n z0^n + ... + a_0 (Horner with z0 on the right).
  Quaternion eval(const Quaternion& z0) const;
  Quaternion operator()(const Quaternion& z0) const { return eval(z0); }

  // sum |a_m| * max(1, |z0|)^m.
  double scale_at(const Quaternion& z0) const;
  double max_coeff() const;

  // Left-multiplies by the inverse leading coefficient; roots are unchanged.
  StdPoly monic() const;
  StdPoly conjugated() const;
  StdPoly trimmed(double tol) const;
  bool has_real_coeffs(double tol = kDefaultTol) const;

  friend StdPoly operator+(const StdPoly& f, const StdPoly& g);
  friend StdPoly operator-(const StdPoly& f, const StdPoly& g);
  friend StdPoly operator*(const StdPoly& f, const StdPoly& g);
  friend StdPoly operator*(const Quaternion& c, const StdPoly& f);
  friend StdPoly operator*(const StdPoly& f, const Quaternion& c);
  friend bool operator==(const StdPoly&, const StdPoly&) = default;

private:
  void trim();
  std::vector<Quaternion> coeffs_;
};

// Coefficientwise closeness in the max-component metric relative to the
// largest coefficient of either polynomial.
bool approx_equal(const StdPoly& f, const StdPoly& g, double tol);

StdPoly mul(const StdPoly& f, const StdPoly& g);

struct LinearQuotient {
  StdPoly quotient;
  Quaternion remainder;
};

// f = quotient * (z - a) + remainder by synthetic right division; the
// remainder equals f(a).
LinearQuotient right_div_linear(const StdPoly& f, const Quaternion& a);

// h_at_a * a * h_at_a^{-1}: if f = g*h, f(a) = 0 and h(a) != 0 this is a root
// of g. Throws ZeroDivisionError when h_at_a == 0.
Quaternion wedderburn_transfer(const Quaternion& a, const Quaternion& h_at_a);

// Product (z - roots[0]) (z - roots[1]) ... in H[z].
StdPoly from_linear_factors(const std::vector<Quaternion>& roots);

} // namespace qroots
