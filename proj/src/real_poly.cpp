#include "qroots/real_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qroots/errors.hpp"

namespace qroots {

using cplx = std::complex<double>;

RealPoly::RealPoly(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

RealPoly::RealPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RealPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double RealPoly::operator[](int m) const {
  return m >= 0 && m < static_cast<int>(coeffs_.size()) ? coeffs_[m] : 0.0;
}

double RealPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cplx RealPoly::operator()(cplx x) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPoly RealPoly::derivative() const {
  std::vector<double> d;
  for (std::size_t m = 1; m < coeffs_.size(); ++m) d.push_back(static_cast<double>(m) * coeffs_[m]);
  return RealPoly(std::move(d));
}

RealPoly RealPoly::trimmed(double tol) const {
  double biggest = 0.0;
  for (double c : coeffs_) biggest = std::fmax(biggest, std::fabs(c));
  std::vector<double> c = coeffs_;
  for (double& v : c) {
    if (std::fabs(v) <= tol * biggest) v = 0.0;
  }
  return RealPoly(std::move(c));
}

RealPoly RealPoly::monic() const {
  if (is_zero()) return *this;
  return (1.0 / leading()) * *this;
}

double RealPoly::scale_at(double x) const {
  const double ax = std::fmax(1.0, std::fabs(x));
  double s = 0.0;
  double power = 1.0;
  for (double c : coeffs_) {
    s += std::fabs(c) * power;
    power *= ax;
  }
  return s;
}

RealPoly operator+(const RealPoly& p, const RealPoly& q) {
  std::vector<double> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = p[static_cast<int>(m)] + q[static_cast<int>(m)];
  return RealPoly(std::move(c));
}

RealPoly operator-(const RealPoly& p, const RealPoly& q) { return p + (-1.0) * q; }

RealPoly operator*(const RealPoly& p, const RealPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<double> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0.0);
  for (std::size_t a = 0; a < p.coeffs_.size(); ++a)
    for (std::size_t b = 0; b < q.coeffs_.size(); ++b) c[a + b] += p.coeffs_[a] * q.coeffs_[b];
  return RealPoly(std::move(c));
}

RealPoly operator*(double s, const RealPoly& p) {
  std::vector<double> c = p.coeffs_;
  for (double& v : c) v *= s;
  return RealPoly(std::move(c));
}

namespace {

// Roots of c2 x^2 + c1 x + c0 with c2 != 0.
std::array<cplx, 2> quadratic_roots(double c2, double c1, double c0) {
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc >= 0.0) {
    const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
    if (q == 0.0) return {cplx(0.0), cplx(0.0)};
    return {cplx(q / c2), cplx(c0 / q)};
  }
  const double re = -c1 / (2.0 * c2);
  const double im = std::sqrt(-disc) / (2.0 * std::fabs(c2));
  return {cplx(re, im), cplx(re, -im)};
}

// Roots of x^3 + a x^2 + b x + c by depression and discriminant branching.
std::array<cplx, 3> cubic_roots(double a, double b, double c) {
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  if (disc > 0.0) {
    // One real root; u is taken from the larger-magnitude branch.
    const double u = std::cbrt(-half_q - std::copysign(std::sqrt(disc), half_q));
    const double v = u == 0.0 ? 0.0 : -third_p / u;
    const double re = -0.5 * (u + v) - shift;
    const double im = 0.5 * std::sqrt(3.0) * (u - v);
    return {cplx(u + v - shift), cplx(re, im), cplx(re, -im)};
  }
  if (p == 0.0) {
    return {cplx(-shift), cplx(-shift), cplx(-shift)};
  }
  // Three real roots (casus irreducibilis): trigonometric form.
  const double m = 2.0 * std::sqrt(-third_p);
  const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  constexpr double two_pi_3 = 2.0 * std::numbers::pi / 3.0;
  return {cplx(m * std::cos(theta) - shift), cplx(m * std::cos(theta - two_pi_3) - shift),
          cplx(m * std::cos(theta - 2.0 * two_pi_3) - shift)};
}

// Roots of x^4 + a x^3 + b x^2 + c x + d (Ferrari).
std::array<cplx, 4> quartic_roots(double a, double b, double c, double d) {
  const double shift = a / 4.0;
  const double a2 = a * a;
  const double p = b - 3.0 * a2 / 8.0;
  const double q = c - a * b / 2.0 + a2 * a / 8.0;
  const double r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

  std::array<cplx, 4> y;
  const double size = 1.0 + std::fabs(p) + std::sqrt(std::fabs(r));
  if (std::fabs(q) <= 1e-14 * size * size * std::sqrt(size)) {
    // Biquadratic: y^2 = s with s^2 + p s + r = 0.
    const auto s = quadratic_roots(1.0, p, r);
    y = {std::sqrt(s[0]), -std::sqrt(s[0]), std::sqrt(s[1]), -std::sqrt(s[1])};
  } else {
    // Resolvent 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0 always has a root m > 0.
    const auto res = cubic_roots(p, (2.0 * p * p - 8.0 * r) / 8.0, -q * q / 8.0);
    double m = 0.0;
    for (const auto& z : res) {
      if (std::fabs(z.imag()) <= 1e-9 * (1.0 + std::abs(z))) m = std::fmax(m, z.real());
    }
    const double s = std::sqrt(2.0 * m);
    const double t = q / (2.0 * s);
    const auto plus = quadratic_roots(1.0, -s, 0.5 * p + m + t);
    const auto minus = quadratic_roots(1.0, s, 0.5 * p + m - t);
    y = {plus[0], plus[1], minus[0], minus[1]};
  }
  for (auto& z : y) z -= shift;
  return y;
}

// Aberth-Ehrlich simultaneous iteration on a polynomial with nonzero leading
// coefficient and degree >= 1.
std::vector<cplx> aberth_roots(const RealPoly& p) {
  const int n = p.degree();
  const RealPoly dp = p.derivative();
  // Cauchy bound for the initial circle.
  double bound = 0.0;
  for (int m = 0; m < n; ++m) bound = std::fmax(bound, std::fabs(p[m] / p.leading()));
  const double radius = 0.5 * (1.0 + bound);

  std::vector<cplx> z(n);
  for (int m = 0; m < n; ++m) {
    const double angle = 2.0 * std::numbers::pi * m / n + 0.4;
    z[m] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < 500; ++iter) {
    double biggest_step = 0.0;
    for (int m = 0; m < n; ++m) {
      const cplx value = p(z[m]);
      if (value == 0.0) continue;
      const cplx ratio = value / dp(z[m]);
      cplx repulsion = 0.0;
      for (int l = 0; l < n; ++l) {
        if (l != m) repulsion += 1.0 / (z[m] - z[l]);
      }
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[m] -= step;
        biggest_step = std::fmax(biggest_step, std::abs(step) / (1.0 + std::abs(z[m])));
      }
    }
    if (biggest_step < 1e-15) break;
  }
  return z;
}

// Newton steps on p from x, kept only while |p| decreases.
double newton_polish(const RealPoly& p, const RealPoly& dp, double x, int steps = 8) {
  double best = x;
  double best_val = std::fabs(p(x));
  for (int s = 0; s < steps && best_val > 0.0; ++s) {
    const double slope = dp(best);
    if (slope == 0.0) break;
    const double next = best - p(best) / slope;
    const double val = std::fabs(p(next));
    if (!(val < best_val)) break;
    best = next;
    best_val = val;
  }
  return best;
}

} // namespace

std::vector<cplx> complex_roots(const RealPoly& p, RootMethod method) {
  if (p.is_zero()) throw ZeroPolynomialError("complex_roots of the zero polynomial");
  const int n = p.degree();
  if (n == 0) return {};
  if (method == RootMethod::Iterative || n > 4) return aberth_roots(p);

  const RealPoly m = p.monic();
  switch (n) {
    case 1:
      return {cplx(-m[0])};
    case 2: {
      const auto r = quadratic_roots(1.0, m[1], m[0]);
      return {r.begin(), r.end()};
    }
    case 3: {
      const auto r = cubic_roots(m[2], m[1], m[0]);
      return {r.begin(), r.end()};
    }
    default: {
      const auto r = quartic_roots(m[3], m[2], m[1], m[0]);
      return {r.begin(), r.end()};
    }
  }
}

std::vector<RealRoot> real_roots(const RealPoly& p, double tol, RootMethod method) {
  if (p.is_zero()) throw ZeroPolynomialError("real_roots of the zero polynomial");

  // Exact zero low-order coefficients contribute the root 0.
  int zero_mult = 0;
  while (p[zero_mult] == 0.0) ++zero_mult;
  std::vector<double> rest(p.coeffs().begin() + zero_mult, p.coeffs().end());
  const RealPoly q(std::move(rest));
  const RealPoly dq = q.derivative();

  std::vector<double> candidates(zero_mult, 0.0);
  for (const cplx& z : complex_roots(q, method)) {
    if (std::fabs(z.imag()) <= 1e-4 * (1.0 + std::abs(z))) {
      candidates.push_back(newton_polish(q, dq, z.real()));
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<RealRoot> roots;
  std::vector<int> counts;
  std::vector<double> sums;
  for (double x : candidates) {
    if (!roots.empty() && std::fabs(x - roots.back().value) <= 1e-6 * (1.0 + std::fabs(x))) {
      sums.back() += x;
      ++roots.back().multiplicity;
      roots.back().value = sums.back() / roots.back().multiplicity;
    } else {
      roots.push_back({x, 1});
      sums.push_back(x);
    }
  }

  std::vector<RealRoot> accepted;
  for (RealRoot root : roots) {
    if (root.multiplicity > 1 && root.value != 0.0) {
      // A root of multiplicity m is a simple root of the (m-1)-th derivative.
      RealPoly deriv = p;
      for (int s = 1; s < root.multiplicity; ++s) deriv = deriv.derivative();
      const double refined = newton_polish(deriv, deriv.derivative(), root.value);
      if (std::fabs(refined - root.value) <= 1e-6 * (1.0 + std::fabs(root.value)) &&
          std::fabs(p(refined)) <= tol * p.scale_at(refined)) {
        root.value = refined;
      }
    }
    if (std::fabs(p(root.value)) <= tol * p.scale_at(root.value)) accepted.push_back(root);
  }
  return accepted;
}

std::vector<double> common_real_roots(const std::vector<RealPoly>& system, double tol) {
  const RealPoly* lowest = nullptr;
  for (const auto& p : system) {
    if (!p.is_zero() && (lowest == nullptr || p.degree() < lowest->degree())) lowest = &p;
  }
  if (lowest == nullptr) throw AllZeroError("every polynomial in the system is zero");

  std::vector<double> common;
  for (const RealRoot& root : real_roots(*lowest, tol)) {
    const bool shared = std::all_of(system.begin(), system.end(), [&](const RealPoly& p) {
      return p.is_zero() || std::fabs(p(root.value)) <= tol * p.scale_at(root.value);
    });
    if (shared) common.push_back(root.value);
  }
  return common;
}

RealPoly poly_gcd(const RealPoly& p, const RealPoly& q, double tol) {
  RealPoly a = p.monic();
  RealPoly b = q.monic();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return RealPoly{1.0};
    // a mod b, b monic.
    std::vector<double> rem = a.coeffs();
    const int nb = b.degree();
    for (int top = static_cast<int>(rem.size()) - 1; top >= nb; --top) {
      const double factor = rem[top];
      for (int m = 0; m <= nb; ++m) rem[top - nb + m] -= factor * b[m];
      rem[top] = 0.0;
    }
    double scale = 0.0;
    for (double c : a.coeffs()) scale = std::fmax(scale, std::fabs(c));
    for (double& c : rem) {
      if (std::fabs(c) <= tol * scale) c = 0.0;
    }
    a = b;
    b = RealPoly(std::move(rem)).monic();
  }
  return a;
}

RealPoly common_factor(const std::vector<RealPoly>& system, double tol) {
  RealPoly acc;
  bool any = false;
  for (const auto& p : system) {
    if (p.is_zero()) continue;
    acc = any ? poly_gcd(acc, p, tol) : p.monic();
    any = true;
  }
  if (!any) throw AllZeroError("every polynomial in the system is zero");
  return acc;
}

} // namespace qroots
