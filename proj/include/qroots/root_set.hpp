#pragma once

#include <string>
#include <vector>

#include "qroots/quaternion.hpp"

namespace qroots {

// Spherical family {real_part + x : x pure imaginary, norm(x) = imag_norm}.
struct Sphere {
  double real_part = 0.0;
  double imag_norm = 0.0;

  // real_part + sqrt(imag_norm) * direction; direction is normalized first.
  Quaternion sample(const Quaternion& direction) const;
  bool contains(const Quaternion& q, double tol) const;

  friend bool operator==(const Sphere&, const Sphere&) = default;
};

struct RootSet {
  std::vector<Quaternion> isolated;
  std::vector<Sphere> spheres;
  // Anomalies observed while solving (e.g. every candidate rejected).
  std::vector<std::string> diagnostics;

  bool empty() const { return isolated.empty() && spheres.empty(); }
  // True if q is (tol-close to) an isolated root or lies on a sphere.
  bool covers(const Quaternion& q, double tol) const;
};

// Lexicographic order on components.
bool lex_less(const Quaternion& p, const Quaternion& q);

// Sorts isolated roots lexicographically, merges isolated roots closer than
// merge_tol * (1 + |z|) in the max-component metric, drops isolated roots on
// listed spheres and merges duplicate spheres.
void canonicalize(RootSet& roots, double merge_tol = 1e-6);

// All solutions of w^2 = q. Non-real q: two isolated roots. Positive real q:
// two real roots. Negative real q: the sphere (0, -q). Zero: the root 0.
RootSet sqrt_all(const Quaternion& q, double tol = kDefaultTol);

// Eight fixed unit pure imaginary directions used to test sphere membership.
const std::vector<Quaternion>& sphere_probe_directions();

} // namespace qroots
