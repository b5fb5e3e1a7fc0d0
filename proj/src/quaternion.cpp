#include "qroots/quaternion.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "qroots/errors.hpp"

namespace qroots {

Quaternion inverse(const Quaternion& q) {
  const double n = norm(q);
  if (n == 0.0) {
    throw ZeroDivisionError("inverse of the zero quaternion");
  }
  return conj(q) / n;
}

ConjNormInv conj_norm_inv(const Quaternion& q) {
  return {conj(q), norm(q), inverse(q)};
}

bool is_zero(const Quaternion& q, double tol) { return max_abs(q) <= tol; }

bool is_pure_real(const Quaternion& q, double tol) {
  return abs(imag_part(q)) <= tol * std::fmax(1.0, abs(q));
}

bool is_pure_imaginary(const Quaternion& q, double tol) {
  return std::fabs(q.re) <= tol * std::fmax(1.0, abs(q));
}

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) {
  return max_abs(p - q) <= tol * (1.0 + abs(p));
}

Quaternion pow(const Quaternion& q, int exponent) {
  Quaternion result{1.0};
  Quaternion base = q;
  if (exponent < 0) {
    base = inverse(q);
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

Quaternion PolarForm::reconstruct() const {
  if (!axis) {
    return Quaternion{modulus * std::cos(angle)};
  }
  return modulus * exp_axis(angle, *axis);
}

PolarForm polar(const Quaternion& q) {
  PolarForm form;
  form.modulus = abs(q);
  const double imag_len = abs(imag_part(q));
  form.angle = std::atan2(imag_len, q.re);
  if (imag_len > 0.0) {
    form.axis = imag_part(q) / imag_len;
  }
  return form;
}

Quaternion exp_axis(double angle, const Quaternion& axis) {
  return Quaternion{std::cos(angle)} + std::sin(angle) * axis;
}

namespace {

void append_number(std::string& out, double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  out.append(buf, end);
}

} // namespace

std::string to_string(const Quaternion& q) {
  std::string out;
  append_number(out, q.re + 0.0);
  const char* units[] = {"i", "j", "k"};
  for (int idx = 1; idx < 4; ++idx) {
    const double c = q[idx] + 0.0;  // no "-0"
    if (!std::signbit(c)) out += '+';
    append_number(out, c);
    out += units[idx - 1];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << to_string(q) << ')';
}

} // namespace qroots
