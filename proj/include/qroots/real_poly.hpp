#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "qroots/quaternion.hpp"

namespace qroots {

// Real univariate polynomial, coeffs[m] multiplies x^m. Trailing zeros are
// trimmed so that an empty coefficient list is the zero polynomial.
class RealPoly {
public:
  RealPoly() = default;
  RealPoly(std::initializer_list<double> coeffs);
  explicit RealPoly(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double leading() const { return coeffs_.back(); }
  double operator[](int m) const;

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  RealPoly derivative() const;
  // Drops trailing coefficients below tol * max|coeff|.
  RealPoly trimmed(double tol) const;
  RealPoly monic() const;

  // sum |c_m| * max(1, |x|)^m, the scale of rounding error in p(x).
  double scale_at(double x) const;

  friend RealPoly operator+(const RealPoly& p, const RealPoly& q);
  friend RealPoly operator-(const RealPoly& p, const RealPoly& q);
  friend RealPoly operator*(const RealPoly& p, const RealPoly& q);
  friend RealPoly operator*(double s, const RealPoly& p);

private:
  void trim();
  std::vector<double> coeffs_;
};

struct RealRoot {
  double value;
  int multiplicity;
};

enum class RootMethod {
  Auto,       // closed forms up to degree 4, simultaneous iteration beyond
  Iterative,  // simultaneous iteration for every degree
};

// All complex roots with multiplicity (Cardano/Ferrari up to degree 4 or
// Aberth iteration). Throws ZeroPolynomialError for p == 0.
std::vector<std::complex<double>> complex_roots(const RealPoly& p,
                                                RootMethod method = RootMethod::Auto);

// Real roots sorted ascending with multiplicities. Near-coincident roots
// (within 1e-6 * (1 + |x|)) are merged and their multiplicities summed.
// Throws ZeroPolynomialError for p == 0.
std::vector<RealRoot> real_roots(const RealPoly& p, double tol = kDefaultTol,
                                 RootMethod method = RootMethod::Auto);

// Reals that are roots of every nonzero member. The lowest-degree nonzero
// member is rooted and the candidates filtered by |p(x)| <= tol * scale.
// Throws AllZeroError when every member is identically zero.
std::vector<double> common_real_roots(const std::vector<RealPoly>& system,
                                      double tol = kDefaultTol);

// Monic greatest common divisor computed by the Euclidean algorithm,
// treating remainders below tol (relative) as zero.
RealPoly poly_gcd(const RealPoly& p, const RealPoly& q, double tol = 1e-9);

// Monic gcd of all nonzero members. Throws AllZeroError if there are none.
RealPoly common_factor(const std::vector<RealPoly>& system, double tol = 1e-9);

} // namespace qroots
