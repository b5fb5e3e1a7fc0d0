#include "qroots/two_sided.hpp"

#include <algorithm>
#include <cmath>

#include "qroots/errors.hpp"
#include "qroots/gh_split.hpp"
#include "qroots/real_poly.hpp"

namespace qroots {

TwoSidedPoly TwoSidedPoly::quadratic(const Quaternion& a, const Quaternion& b,
                                     const Quaternion& c) {
  return TwoSidedPoly({{Quaternion{1.0}, 2, Quaternion{1.0}}, {a, 1, b}, {c, 0, Quaternion{1.0}}});
}

TwoSidedPoly TwoSidedPoly::from_standard(const StdPoly& f) {
  std::vector<TwoSidedTerm> terms;
  for (int m = f.degree(); m >= 0; --m) {
    if (f[m] != Quaternion{}) terms.push_back({f[m], m, Quaternion{1.0}});
  }
  return TwoSidedPoly(std::move(terms));
}

int TwoSidedPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    if (t.left != Quaternion{} && t.right != Quaternion{}) d = std::max(d, t.power);
  }
  return d;
}

Quaternion TwoSidedPoly::eval(const Quaternion& z0) const {
  Quaternion acc;
  for (const auto& t : terms_) acc += t.left * pow(z0, t.power) * t.right;
  return acc;
}

double TwoSidedPoly::scale_at(const Quaternion& z0) const {
  const double r = std::fmax(1.0, abs(z0));
  double s = 0.0;
  for (const auto& t : terms_) s += abs(t.left) * abs(t.right) * std::pow(r, t.power);
  return s;
}

Quaternion eval_two_sided(const TwoSidedPoly& f, const Quaternion& z0) { return f.eval(z0); }

std::vector<NormedRoot> pure_imaginary_roots_two_sided_quadratic(const Quaternion& a,
                                                                 const Quaternion& b,
                                                                 const Quaternion& c,
                                                                 double tol) {
  if (is_zero(a, 0.0) || is_zero(b, 0.0) || is_zero(c, 0.0)) {
    throw ZeroCoefficientError("two-sided quadratic needs nonzero a, b and c");
  }
  const Quaternion ai = inverse(a);
  const Quaternion bi = inverse(b);
  const Quaternion ab = ai * bi;          // a^-1 b^-1
  const Quaternion acb = ai * c * bi;     // a^-1 c b^-1
  const StdPoly p{acb * acb, Quaternion{1.0} - ab * acb - acb * ab, ab * ab};

  const TwoSidedPoly f = TwoSidedPoly::quadratic(a, b, c);
  std::vector<NormedRoot> out;
  const auto parts = components(p, tol);
  for (double n0 : common_real_roots({parts.begin(), parts.end()}, tol)) {
    if (n0 <= tol) continue;
    Quaternion z0 = ab * n0 - acb;
    if (std::fabs(z0.re) > 1e-6 * (1.0 + abs(z0))) continue;
    if (std::fabs(norm(z0) - n0) > 1e-6 * (1.0 + n0)) continue;
    z0.re = 0.0;
    if (abs(f.eval(z0)) > tol * f.scale_at(z0)) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const NormedRoot& r) {
      return max_abs(r.root - z0) <= 1e-6 * (1.0 + abs(z0));
    });
    if (!dup) out.push_back({z0, norm(z0)});
  }
  return out;
}

} // namespace qroots
