#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <utility>

#include "qroots/quaternion.hpp"
#include "qroots/real_poly.hpp"
#include "qroots/std_poly.hpp"

namespace qroots {

// Polynomial in two central real variables r and N. Keys are exponent pairs
// (power of r, power of N). Zero coefficients are never stored.
template <class Coeff>
class BivarPoly {
public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Coeff>;

  BivarPoly() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int r_power, int n_power, const Coeff& c) {
    auto& slot = terms_[{r_power, n_power}];
    slot += c;
    if (slot == Coeff{}) terms_.erase({r_power, n_power});
  }

  Coeff coeff(int r_power, int n_power) const {
    auto it = terms_.find({r_power, n_power});
    return it == terms_.end() ? Coeff{} : it->second;
  }

  Coeff eval(double r0, double n0) const {
    Coeff acc{};
    for (const auto& [e, c] : terms_) acc += std::pow(r0, e.first) * std::pow(n0, e.second) * c;
    return acc;
  }
  Coeff operator()(double r0, double n0) const { return eval(r0, n0); }

  int degree_r() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }
  int degree_n() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  friend BivarPoly operator+(const BivarPoly& p, const BivarPoly& q) {
    BivarPoly out = p;
    for (const auto& [e, c] : q.terms_) out.add_term(e.first, e.second, c);
    return out;
  }

  // Coefficients multiply in order (p's on the left); r and N commute with
  // everything.
  friend BivarPoly operator*(const BivarPoly& p, const BivarPoly& q) {
    BivarPoly out;
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_)
        out.add_term(ep.first + eq.first, ep.second + eq.second, cp * cq);
    return out;
  }

private:
  Terms terms_;
};

using CentralBivarPoly = BivarPoly<Quaternion>;
using RealBivarPoly = BivarPoly<double>;

CentralBivarPoly conj(const CentralBivarPoly& p);

struct GhPair {
  CentralBivarPoly g;
  CentralBivarPoly h;
};

// g, h with f(r0 + x0) = g(r0, N0) x0 + h(r0, N0) for every real r0, pure
// imaginary x0 and N0 = -x0^2.
GhPair decompose(const StdPoly& f);

// g(0, N) and h(0, N) as polynomials in the central variable N; for pure
// imaginary z0 of norm N0, f(z0) = gN(N0) z0 + hN(N0).
struct PureImagGh {
  StdPoly g;
  StdPoly h;
};

PureImagGh restrict_pure_imaginary(const GhPair& gh);

// R(N) = gN conj(gN) gN N + hN conj(gN) hN and its 1, i, j, k components.
struct NormEqResidual {
  StdPoly residual;
  std::array<RealPoly, 4> components;
};

// Throws DegenerateGError when gN is identically zero.
NormEqResidual norm_equation(const StdPoly& gN, const StdPoly& hN, double tol = kDefaultTol);

struct BivarNormEqResidual {
  CentralBivarPoly residual;
  std::array<RealBivarPoly, 4> components;
};

BivarNormEqResidual bivariate_norm_equation(const CentralBivarPoly& g, const CentralBivarPoly& h,
                                            double tol = kDefaultTol);

// Re(-conj(gN(N)) hN(N)); every pure imaginary root's norm is a zero of it.
RealPoly re_filter(const StdPoly& gN, const StdPoly& hN, double tol = kDefaultTol);

// The 1, i, j, k parts of a quaternion-coefficient polynomial in N, each
// trimmed of coefficients below tol * (largest coefficient magnitude).
std::array<RealPoly, 4> components(const StdPoly& p, double tol = kDefaultTol);

} // namespace qroots
