#include "qroots/root_set.hpp"

#include <algorithm>
#include <cmath>

namespace qroots {

Quaternion Sphere::sample(const Quaternion& direction) const {
  const Quaternion u = imag_part(direction);
  return Quaternion{real_part} + (std::sqrt(imag_norm) / abs(u)) * u;
}

bool Sphere::contains(const Quaternion& q, double tol) const {
  const double scale = 1.0 + abs(q);
  return std::fabs(q.re - real_part) <= tol * scale &&
         std::fabs(abs(imag_part(q)) - std::sqrt(imag_norm)) <= tol * scale;
}

bool RootSet::covers(const Quaternion& q, double tol) const {
  for (const auto& z : isolated) {
    if (max_abs(z - q) <= tol * (1.0 + abs(z))) return true;
  }
  return std::any_of(spheres.begin(), spheres.end(),
                     [&](const Sphere& s) { return s.contains(q, tol); });
}

bool lex_less(const Quaternion& p, const Quaternion& q) {
  return p.components() < q.components();
}

void canonicalize(RootSet& roots, double merge_tol) {
  std::vector<Sphere> spheres;
  for (const auto& s : roots.spheres) {
    const bool dup = std::any_of(spheres.begin(), spheres.end(), [&](const Sphere& t) {
      return std::fabs(s.real_part - t.real_part) <= merge_tol * (1.0 + std::fabs(t.real_part)) &&
             std::fabs(s.imag_norm - t.imag_norm) <= merge_tol * (1.0 + t.imag_norm);
    });
    if (!dup) spheres.push_back(s);
  }
  std::sort(spheres.begin(), spheres.end(), [](const Sphere& a, const Sphere& b) {
    return std::pair(a.real_part, a.imag_norm) < std::pair(b.real_part, b.imag_norm);
  });

  std::vector<Quaternion> isolated;
  for (const auto& z : roots.isolated) {
    const bool on_sphere = std::any_of(spheres.begin(), spheres.end(),
                                       [&](const Sphere& s) { return s.contains(z, merge_tol); });
    if (on_sphere) continue;
    const bool dup = std::any_of(isolated.begin(), isolated.end(), [&](const Quaternion& w) {
      return max_abs(z - w) <= merge_tol * (1.0 + abs(w));
    });
    if (!dup) isolated.push_back(z);
  }
  std::sort(isolated.begin(), isolated.end(), lex_less);

  roots.isolated = std::move(isolated);
  roots.spheres = std::move(spheres);
}

RootSet sqrt_all(const Quaternion& q, double tol) {
  RootSet roots;
  if (is_pure_real(q, tol)) {
    if (std::fabs(q.re) <= tol) {
      roots.isolated.push_back(Quaternion{0.0});
    } else if (q.re > 0.0) {
      const double s = std::sqrt(q.re);
      roots.isolated = {Quaternion{-s}, Quaternion{s}};
    } else {
      roots.spheres.push_back({0.0, -q.re});
    }
    return roots;
  }
  // +-sqrt(|q|) * exp(angle/2 * axis); the axis is Im(q) scaled to unit length.
  const PolarForm form = polar(q);
  const Quaternion w = std::sqrt(form.modulus) * exp_axis(0.5 * form.angle, *form.axis);
  roots.isolated = {w, -w};
  std::sort(roots.isolated.begin(), roots.isolated.end(), lex_less);
  return roots;
}

const std::vector<Quaternion>& sphere_probe_directions() {
  static const std::vector<Quaternion> dirs = [] {
    const double s = 1.0 / std::sqrt(3.0);
    return std::vector<Quaternion>{
        {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},    {0, s, s, s},
        {0, -s, s, -s}, {0, 0.6, -0.8, 0}, {0, 0, 0.28, -0.96}, {0, -0.48, 0.6, 0.64}};
  }();
  return dirs;
}

} // namespace qroots
