#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qroots/quaternion.hpp"
#include "qroots/root_set.hpp"
#include "qroots/std_poly.hpp"

namespace qroots {

// |f(z)| / scale(f, z) with scale(f, z) = sum |a_m| max(1, |z|)^m. A point
// is accepted as a root when this is <= tol.
double verify_root(const StdPoly& f, const Quaternion& z);

// Every probe point of the sphere passes verify_root <= tol.
bool verify_sphere(const StdPoly& f, const Sphere& s, double tol = kDefaultTol);

// A few Newton steps on the four real coordinates of z; returns the
// improved point, or z itself when no step reduces the residual.
Quaternion polish_root(const StdPoly& f, const Quaternion& z, int steps = 4);

// Depressed form of z^2 + a z + b after z -> z - Re(a)/2, with the depressed
// b split as m + n a + d where d anticommutes with a.
struct QuadraticNormalForm {
  double shift = 0.0;   // Re(a)/2; original root = depressed root - shift
  Quaternion a;         // pure imaginary
  Quaternion b;         // depressed constant term
  double m = 0.0;
  double n = 0.0;
  Quaternion d;
  double a_sq = 0.0;    // a^2 = -norm(a)
  double d_sq = 0.0;    // d^2 = -norm(d)
};

// Requires the depressed a to be nonzero for m, n, d to be meaningful; when
// it is zero, m = Re(b), n = 0 and d = Im(b).
QuadraticNormalForm quadratic_normal_form(const Quaternion& a, const Quaternion& b);

// Complete root set of z^2 + a z + b.
RootSet solve_quadratic(const Quaternion& a, const Quaternion& b, double tol = kDefaultTol);

// Roots of z^2 - (a + b) z + b a.
RootSet companion_quadratic_roots(const Quaternion& a, const Quaternion& b,
                                  double tol = kDefaultTol);

// All pure imaginary roots of f (normalized to monic on the left), including
// spheres centred at 0. Throws ConstantTermZeroError if f(0) = 0.
RootSet pure_imaginary_roots(const StdPoly& f, double tol = kDefaultTol);

// Positive common real roots of all components of gN and hN: the norms of
// pure imaginary spheres of roots. Throws ConstantTermZeroError if f(0) = 0.
std::vector<double> spherical_pure_imaginary(const StdPoly& f, double tol = kDefaultTol);

struct CubicSolution {
  RootSet roots;
  // f = (z - factors[0]) (z - factors[1]) (z - factors[2]) after
  // normalizing f to monic.
  std::array<Quaternion, 3> factors;
  // The pure imaginary root used to split off the right linear factor.
  Quaternion pivot;
};

// Roots of a cubic with at least one pure imaginary root. Throws
// NotSupportedError when there is none, ConstantTermZeroError if f(0) = 0.
CubicSolution solve_cubic(const StdPoly& f, double tol = kDefaultTol);

// Dispatches on degree: 1 and 2 always, 3 via solve_cubic. A zero constant
// term is handled by splitting off the root 0. Throws NotSupportedError for
// degree >= 4 and ZeroPolynomialError for f == 0.
RootSet solve(const StdPoly& f, double tol = kDefaultTol);

} // namespace qroots
