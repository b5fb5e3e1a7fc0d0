#include "qroots/std_poly.hpp"

#include <algorithm>
#include <cmath>

#include "qroots/errors.hpp"

namespace qroots {

StdPoly::StdPoly(std::initializer_list<Quaternion> coeffs) : coeffs_(coeffs) { trim(); }

StdPoly::StdPoly(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

StdPoly StdPoly::linear(const Quaternion& a) { return StdPoly{-a, Quaternion{1.0}}; }

StdPoly StdPoly::monomial(const Quaternion& coeff, int power) {
  std::vector<Quaternion> c(static_cast<std::size_t>(power) + 1);
  c.back() = coeff;
  return StdPoly(std::move(c));
}

void StdPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Quaternion{}) coeffs_.pop_back();
}

Quaternion StdPoly::operator[](int m) const {
  return m >= 0 && m < static_cast<int>(coeffs_.size()) ? coeffs_[m] : Quaternion{};
}

Quaternion StdPoly::eval(const Quaternion& z0) const {
  Quaternion acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z0 + *it;
  return acc;
}

double StdPoly::scale_at(const Quaternion& z0) const {
  const double r = std::fmax(1.0, abs(z0));
  double s = 0.0;
  double power = 1.0;
  for (const auto& c : coeffs_) {
    s += abs(c) * power;
    power *= r;
  }
  return s;
}

double StdPoly::max_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::fmax(m, max_abs(c));
  return m;
}

StdPoly StdPoly::monic() const {
  if (is_zero()) return *this;
  return inverse(leading()) * *this;
}

StdPoly StdPoly::conjugated() const {
  std::vector<Quaternion> c;
  c.reserve(coeffs_.size());
  for (const auto& q : coeffs_) c.push_back(conj(q));
  return StdPoly(std::move(c));
}

StdPoly StdPoly::trimmed(double tol) const {
  const double limit = tol * max_coeff();
  std::vector<Quaternion> c = coeffs_;
  while (!c.empty() && max_abs(c.back()) <= limit) c.pop_back();
  return StdPoly(std::move(c));
}

bool StdPoly::has_real_coeffs(double tol) const {
  const double limit = tol * std::fmax(1.0, max_coeff());
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const Quaternion& c) { return abs(imag_part(c)) <= limit; });
}

StdPoly operator+(const StdPoly& f, const StdPoly& g) {
  std::vector<Quaternion> c(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t m = 0; m < c.size(); ++m) {
    c[m] = f[static_cast<int>(m)] + g[static_cast<int>(m)];
  }
  return StdPoly(std::move(c)).trimmed(kDefaultTol);
}

StdPoly operator-(const StdPoly& f, const StdPoly& g) { return f + Quaternion{-1.0} * g; }

StdPoly operator*(const StdPoly& f, const StdPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  // z is central, so (a z^s)(b z^t) = (a b) z^(s+t).
  std::vector<Quaternion> c(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t s = 0; s < f.coeffs_.size(); ++s)
    for (std::size_t t = 0; t < g.coeffs_.size(); ++t) c[s + t] += f.coeffs_[s] * g.coeffs_[t];
  return StdPoly(std::move(c)).trimmed(kDefaultTol);
}

StdPoly operator*(const Quaternion& c, const StdPoly& f) {
  std::vector<Quaternion> out;
  out.reserve(f.coeffs_.size());
  for (const auto& q : f.coeffs_) out.push_back(c * q);
  return StdPoly(std::move(out));
}

StdPoly operator*(const StdPoly& f, const Quaternion& c) {
  std::vector<Quaternion> out;
  out.reserve(f.coeffs_.size());
  for (const auto& q : f.coeffs_) out.push_back(q * c);
  return StdPoly(std::move(out));
}

bool approx_equal(const StdPoly& f, const StdPoly& g, double tol) {
  const double scale = std::fmax(1.0, std::fmax(f.max_coeff(), g.max_coeff()));
  const int n = std::max(f.degree(), g.degree());
  for (int m = 0; m <= n; ++m) {
    if (max_abs(f[m] - g[m]) > tol * scale) return false;
  }
  return true;
}

StdPoly mul(const StdPoly& f, const StdPoly& g) { return f * g; }

LinearQuotient right_div_linear(const StdPoly& f, const Quaternion& a) {
  const int n = f.degree();
  if (n < 1) return {StdPoly{}, f[0]};
  // p_{n-1} = f_n, p_{k-1} = f_k + p_k a, remainder = f_0 + p_0 a.
  std::vector<Quaternion> p(static_cast<std::size_t>(n));
  Quaternion acc = f[n];
  for (int k = n - 1; k >= 0; --k) {
    p[k] = acc;
    acc = f[k] + acc * a;
  }
  return {StdPoly(std::move(p)), acc};
}

Quaternion wedderburn_transfer(const Quaternion& a, const Quaternion& h_at_a) {
  if (norm(h_at_a) == 0.0) {
    throw ZeroDivisionError("wedderburn_transfer: a is a root of the right factor");
  }
  return h_at_a * a * inverse(h_at_a);
}

StdPoly from_linear_factors(const std::vector<Quaternion>& roots) {
  StdPoly acc{Quaternion{1.0}};
  for (const auto& r : roots) acc = acc * StdPoly::linear(r);
  return acc;
}

} // namespace qroots
