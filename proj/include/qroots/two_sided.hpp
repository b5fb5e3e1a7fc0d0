#pragma once

#include <vector>

#include "qroots/quaternion.hpp"
#include "qroots/std_poly.hpp"

namespace qroots {

// left * z^power * right
struct TwoSidedTerm {
  Quaternion left{1.0};
  int power = 0;
  Quaternion right{1.0};

  friend bool operator==(const TwoSidedTerm&, const TwoSidedTerm&) = default;
};

// Sum of two-sided terms, evaluated without moving coefficients across z.
class TwoSidedPoly {
public:
  TwoSidedPoly() = default;
  explicit TwoSidedPoly(std::vector<TwoSidedTerm> terms) : terms_(std::move(terms)) {}

  // z^2 + a z b + c
  static TwoSidedPoly quadratic(const Quaternion& a, const Quaternion& b, const Quaternion& c);
  // a_m z^m for every term; evaluates identically to f.
  static TwoSidedPoly from_standard(const StdPoly& f);

  const std::vector<TwoSidedTerm>& terms() const { return terms_; }
  int degree() const;

  Quaternion eval(const Quaternion& z0) const;
  Quaternion operator()(const Quaternion& z0) const { return eval(z0); }

  // sum |left| |right| max(1, |z0|)^power
  double scale_at(const Quaternion& z0) const;

private:
  std::vector<TwoSidedTerm> terms_;
};

Quaternion eval_two_sided(const TwoSidedPoly& f, const Quaternion& z0);

struct NormedRoot {
  Quaternion root;
  double norm;
};

// Pure imaginary roots of z^2 + a z b + c from the real roots N0 > 0 shared
// by the components of
//   p(N) = a'b'a'b' N^2 + (1 - a'b'a'cb' - a'cb'a'b') N + a'cb'a'cb',
// (x' = x^-1) with candidate z0 = a'b' N0 - a'cb'. Throws
// ZeroCoefficientError if a, b or c is zero.
std::vector<NormedRoot> pure_imaginary_roots_two_sided_quadratic(const Quaternion& a,
                                                                 const Quaternion& b,
                                                                 const Quaternion& c,
                                                                 double tol = kDefaultTol);

} // namespace qroots
