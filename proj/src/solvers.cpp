#include "qroots/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "detail/small_linalg.hpp"
#include "qroots/errors.hpp"
#include "qroots/gh_split.hpp"
#include "qroots/real_poly.hpp"

namespace qroots {

namespace {

// Consistency checks on reconstructed candidates (pure imaginary, stated
// norm). Acceptance itself is decided by verify_root.
constexpr double kStructureTol = 1e-6;

std::vector<double> positive_roots(const RealPoly& p, double tol) {
  std::vector<double> out;
  if (p.is_zero()) return out;
  for (const RealRoot& root : real_roots(p, tol)) {
    if (root.value > 0.0) out.push_back(root.value);
  }
  return out;
}

// Keeps candidates that verify against f (after polishing) and spheres whose
// probe points all verify.
RootSet accept(const StdPoly& f, const std::vector<Quaternion>& candidates,
               const std::vector<Sphere>& spheres, double tol) {
  RootSet roots;
  for (const Sphere& s : spheres) {
    if (s.imag_norm >= 0.0 && verify_sphere(f, s, tol)) roots.spheres.push_back(s);
  }
  for (const Quaternion& z : candidates) {
    if (!std::isfinite(norm(z))) continue;
    Quaternion best = z;
    if (verify_root(f, best) > tol) best = polish_root(f, z);
    if (verify_root(f, best) <= tol) roots.isolated.push_back(best);
  }
  canonicalize(roots);
  return roots;
}

StdPoly monic_checked(const StdPoly& f, double tol) {
  if (f.is_zero()) throw ZeroPolynomialError("zero polynomial");
  StdPoly fm = f.monic();
  if (fm.degree() >= 1 && max_abs(fm[0]) <= tol * fm.max_coeff()) {
    throw ConstantTermZeroError("constant term is zero; factor out z first");
  }
  return fm;
}

} // namespace

double verify_root(const StdPoly& f, const Quaternion& z) {
  const double scale = f.scale_at(z);
  if (scale == 0.0) return 0.0;
  return abs(f.eval(z)) / scale;
}

bool verify_sphere(const StdPoly& f, const Sphere& s, double tol) {
  return std::all_of(sphere_probe_directions().begin(), sphere_probe_directions().end(),
                     [&](const Quaternion& u) { return verify_root(f, s.sample(u)) <= tol; });
}

Quaternion polish_root(const StdPoly& f, const Quaternion& z, int steps) {
  const int n = f.degree();
  if (n < 1) return z;
  Quaternion best = z;
  double best_res = abs(f.eval(z));
  std::vector<Quaternion> powers(static_cast<std::size_t>(n));
  for (int s = 0; s < steps && best_res > 0.0; ++s) {
    powers[0] = Quaternion{1.0};
    for (int l = 1; l < n; ++l) powers[l] = powers[l - 1] * best;
    detail::Mat4 jac{};
    for (int col = 0; col < 4; ++col) {
      const Quaternion e = detail::basis(col);
      Quaternion deriv;
      for (int k = 1; k <= n; ++k) deriv += f[k] * detail::power_derivative(powers, k, e);
      for (int row = 0; row < 4; ++row) jac[row][col] = deriv[row];
    }
    const Quaternion value = f.eval(best);
    const auto step = detail::solve4(jac, {-value.re, -value.i, -value.j, -value.k});
    if (!step) break;
    const Quaternion next = best + Quaternion{(*step)[0], (*step)[1], (*step)[2], (*step)[3]};
    const double res = abs(f.eval(next));
    if (!(res < best_res)) break;
    best = next;
    best_res = res;
  }
  return best;
}

QuadraticNormalForm quadratic_normal_form(const Quaternion& a, const Quaternion& b) {
  QuadraticNormalForm nf;
  nf.shift = 0.5 * a.re;
  // (w - s)^2 + a (w - s) + b = w^2 + (a - 2s) w + (s^2 - a s + b)
  nf.a = imag_part(a);
  nf.b = b + Quaternion{nf.shift * nf.shift} - a * nf.shift;
  nf.a_sq = -norm(nf.a);
  if (norm(nf.a) == 0.0) {
    nf.m = nf.b.re;
    nf.d = imag_part(nf.b);
    nf.d_sq = -norm(nf.d);
    return nf;
  }
  // d = (b - a b a^-1) / 2 anticommutes with a; b - d commutes with a.
  nf.d = 0.5 * (nf.b - nf.a * nf.b * inverse(nf.a));
  const Quaternion rest = nf.b - nf.d;
  nf.m = rest.re;
  // Im(rest) is parallel to a.
  const Quaternion im = imag_part(rest);
  nf.n = (im.i * nf.a.i + im.j * nf.a.j + im.k * nf.a.k) / norm(nf.a);
  nf.d_sq = -norm(nf.d);
  return nf;
}

RootSet solve_quadratic(const Quaternion& a, const Quaternion& b, double tol) {
  const StdPoly f{b, a, Quaternion{1.0}};
  const QuadraticNormalForm nf = quadratic_normal_form(a, b);
  const double b_scale = 1.0 + abs(nf.b);

  // Candidates in depressed coordinates.
  std::vector<Quaternion> cands;
  std::vector<Sphere> spheres;

  if (abs(nf.a) <= tol * (1.0 + abs(a))) {
    const RootSet sq = sqrt_all(-nf.b, tol);
    cands = sq.isolated;
    spheres = sq.spheres;
  } else {
    const Quaternion& qa = nf.a;
    const double a2 = nf.a_sq;
    const double m = nf.m;
    const double n = nf.n;
    const double d2 = nf.d_sq;
    const bool d_zero = norm(nf.d) <= tol * tol * (1.0 + norm(nf.b));

    if (d_zero) {
      // Inside the commutative subfield R + R u, u = a / |a|:
      // w^2 + i|a| w + (m + i n |a|) = 0 over C.
      const double alen = abs(qa);
      const Quaternion u = qa / alen;
      const std::complex<double> alpha(0.0, alen);
      const std::complex<double> beta(m, n * alen);
      const std::complex<double> root = std::sqrt(alpha * alpha - 4.0 * beta);
      for (const auto& w : {0.5 * (-alpha + root), 0.5 * (-alpha - root)}) {
        cands.push_back(Quaternion{w.real()} + w.imag() * u);
      }
      const StdPoly depressed{nf.b, qa, Quaternion{1.0}};
      if (!is_zero(nf.b, tol * b_scale)) {
        const RootSet pim = pure_imaginary_roots(depressed, tol);
        cands.insert(cands.end(), pim.isolated.begin(), pim.isolated.end());
        spheres.insert(spheres.end(), pim.spheres.begin(), pim.spheres.end());
      } else {
        cands.push_back(Quaternion{0.0});
      }
    } else {
      if (std::fabs(n) > tol * b_scale) {
        // 16 r^6 + (-8a^2 + 16m) r^4 + (-a^2(4m - a^2) + 4a^2 n^2 + 4d^2) r^2 - a^4 n^2 = 0
        const RealPoly cubic{-a2 * a2 * n * n, -a2 * (4.0 * m - a2) + 4.0 * a2 * n * n + 4.0 * d2,
                             -8.0 * a2 + 16.0 * m, 16.0};
        for (double u : positive_roots(cubic, tol)) {
          for (double r : {std::sqrt(u), -std::sqrt(u)}) {
            const Quaternion g = Quaternion{2.0 * r} + qa;
            const Quaternion inner = (1.0 / (2.0 * r)) * qa * (r + n) * g + nf.d;
            cands.push_back(Quaternion{r} - inverse(g) * inner);
          }
        }
      }
      if (std::fabs(n) <= std::sqrt(tol) * b_scale) {
        // r = 0: N^2 + (a^2 - 2m) N + m^2 - d^2 = 0, Im z = -a^-1 (m + d - N).
        const RealPoly norm_quadratic{m * m - d2, a2 - 2.0 * m, 1.0};
        for (const RealRoot& root : real_roots(norm_quadratic, tol)) {
          if (root.value < 0.0) continue;
          cands.push_back(-inverse(qa) * (Quaternion{m - root.value} + nf.d));
        }
        // r != 0: 16 r^4 + (-8a^2 + 16m) r^2 - a^2(4m - a^2) + 4d^2 = 0.
        const RealPoly r_quadratic{-a2 * (4.0 * m - a2) + 4.0 * d2, -8.0 * a2 + 16.0 * m, 16.0};
        for (double u : positive_roots(r_quadratic, tol)) {
          for (double r : {std::sqrt(u), -std::sqrt(u)}) {
            const Quaternion g = Quaternion{2.0 * r} + qa;
            cands.push_back(Quaternion{r} - inverse(g) * (0.5 * qa * g + nf.d));
          }
        }
      }
    }
  }

  for (auto& z : cands) z -= Quaternion{nf.shift};
  for (auto& s : spheres) s.real_part -= nf.shift;
  RootSet roots = accept(f, cands, spheres, tol);
  if (roots.empty()) {
    roots.diagnostics.push_back("solve_quadratic: every candidate failed verification");
  }
  return roots;
}

RootSet companion_quadratic_roots(const Quaternion& a, const Quaternion& b, double tol) {
  return solve_quadratic(-(a + b), b * a, tol);
}

namespace {

std::vector<RealPoly> gh_component_system(const PureImagGh& gh, double tol) {
  std::vector<RealPoly> system;
  for (const auto& part : components(gh.g, tol)) system.push_back(part);
  for (const auto& part : components(gh.h, tol)) system.push_back(part);
  return system;
}

std::vector<double> sphere_norms(const PureImagGh& gh, double tol) {
  std::vector<double> out;
  for (double n0 : common_real_roots(gh_component_system(gh, tol), tol)) {
    if (n0 > tol) out.push_back(n0);
  }
  return out;
}

} // namespace

std::vector<double> spherical_pure_imaginary(const StdPoly& f, double tol) {
  const StdPoly fm = monic_checked(f, tol);
  return sphere_norms(restrict_pure_imaginary(decompose(fm)), tol);
}

RootSet pure_imaginary_roots(const StdPoly& f, double tol) {
  const StdPoly fm = monic_checked(f, tol);
  const PureImagGh gh = restrict_pure_imaginary(decompose(fm));

  std::vector<Sphere> spheres;
  for (double n0 : sphere_norms(gh, tol)) spheres.push_back({0.0, n0});

  std::vector<Quaternion> cands;
  if (!gh.g.trimmed(tol).is_zero()) {
    const NormEqResidual res = norm_equation(gh.g, gh.h, tol);
    std::vector<RealPoly> system(res.components.begin(), res.components.end());
    const RealPoly filter = re_filter(gh.g, gh.h, tol);
    if (!filter.is_zero()) system.push_back(filter);
    for (double n0 : common_real_roots(system, tol)) {
      if (n0 <= tol) continue;
      const Quaternion g0 = gh.g.eval(Quaternion{n0});
      if (norm(g0) <= tol * tol * (1.0 + norm(gh.h.eval(Quaternion{n0})))) continue;
      const Quaternion z0 = -inverse(g0) * gh.h.eval(Quaternion{n0});
      if (std::fabs(z0.re) > kStructureTol * (1.0 + abs(z0))) continue;
      if (std::fabs(norm(z0) - n0) > kStructureTol * (1.0 + n0)) continue;
      cands.push_back(imag_part(z0));
    }
  }

  RootSet roots = accept(f, cands, spheres, tol);
  // Polishing may leave the imaginary axis only by rounding.
  for (auto& z : roots.isolated) z.re = 0.0;
  return roots;
}

namespace {

bool norm_then_lex_less(const Quaternion& p, const Quaternion& q) {
  const double np = norm(p);
  const double nq = norm(q);
  if (std::fabs(np - nq) > 1e-9 * (1.0 + np)) return np < nq;
  return lex_less(p, q);
}

} // namespace

CubicSolution solve_cubic(const StdPoly& f, double tol) {
  const StdPoly fm = monic_checked(f, tol);
  if (fm.degree() != 3) throw NotSupportedError("solve_cubic expects a cubic");

  const RootSet pim = pure_imaginary_roots(fm, tol);
  if (pim.empty()) {
    throw NotSupportedError("the cubic has no pure imaginary root");
  }

  CubicSolution sol;
  if (!pim.isolated.empty()) {
    sol.pivot = *std::min_element(pim.isolated.begin(), pim.isolated.end(), norm_then_lex_less);
  } else {
    sol.pivot = pim.spheres.front().sample(Quaternion::unit_i());
  }
  const Quaternion& a = sol.pivot;

  // f = p (z - a)
  const StdPoly p = right_div_linear(fm, a).quotient;
  const RootSet p_roots = solve_quadratic(p[1], p[0], tol);

  std::vector<Quaternion> cands{a};
  cands.insert(cands.end(), pim.isolated.begin(), pim.isolated.end());
  std::vector<Sphere> spheres = pim.spheres;

  // Every root z0 != a of f solves z0^2 - (a + b) z0 + b a = 0 for a root b of p.
  for (const Quaternion& b : p_roots.isolated) {
    const RootSet comp = companion_quadratic_roots(a, b, tol);
    cands.insert(cands.end(), comp.isolated.begin(), comp.isolated.end());
    spheres.insert(spheres.end(), comp.spheres.begin(), comp.spheres.end());
  }
  // A real p is central: f(z0) = p(z0) z0 - a p(z0), so p's spheres are roots of f.
  if (p.has_real_coeffs(tol)) {
    spheres.insert(spheres.end(), p_roots.spheres.begin(), p_roots.spheres.end());
  }
  sol.roots = accept(fm, cands, spheres, tol);

  // Factor p = (z - u1)(z - u2), preferring for u2 a root of p that is not
  // the transfer (z0 - a) z0 (z0 - a)^-1 of an already known root z0 of f.
  Quaternion u2;
  if (!p_roots.isolated.empty()) {
    std::vector<Quaternion> ordered = p_roots.isolated;
    std::sort(ordered.begin(), ordered.end(), norm_then_lex_less);
    std::vector<Quaternion> transfers;
    for (const Quaternion& z0 : sol.roots.isolated) {
      if (!approx_equal(z0, a, 1e-6)) transfers.push_back(wedderburn_transfer(z0, z0 - a));
    }
    u2 = ordered.front();
    for (const Quaternion& b : ordered) {
      const bool explained = std::any_of(transfers.begin(), transfers.end(),
                                         [&](const Quaternion& t) { return approx_equal(t, b, 1e-6); });
      if (!explained) {
        u2 = b;
        break;
      }
    }
  } else if (!p_roots.spheres.empty()) {
    u2 = p_roots.spheres.front().sample(Quaternion::unit_i());
  } else {
    throw NotSupportedError("the quadratic left factor has no verified root");
  }
  const StdPoly q = right_div_linear(p, u2).quotient;
  sol.factors = {-q[0], u2, a};
  return sol;
}

RootSet solve(const StdPoly& f, double tol) {
  if (f.is_zero()) throw ZeroPolynomialError("cannot solve the zero polynomial");
  if (f.degree() == 0) return {};
  const StdPoly fm = f.monic();
  if (max_abs(fm[0]) <= tol * fm.max_coeff()) {
    // f = f1 z, and f(z0) = f1(z0) z0.
    std::vector<Quaternion> shifted(fm.coeffs().begin() + 1, fm.coeffs().end());
    RootSet roots = solve(StdPoly(std::move(shifted)), tol);
    roots.isolated.push_back(Quaternion{0.0});
    canonicalize(roots);
    return roots;
  }
  switch (fm.degree()) {
    case 1:
      return RootSet{{-fm[0]}, {}, {}};
    case 2:
      return solve_quadratic(fm[1], fm[0], tol);
    case 3:
      return solve_cubic(fm, tol).roots;
    default:
      throw NotSupportedError("degree " + std::to_string(fm.degree()) +
                              " standard polynomials are not supported");
  }
}

} // namespace qroots
