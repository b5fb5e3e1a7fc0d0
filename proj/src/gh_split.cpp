#include "qroots/gh_split.hpp"

#include <cmath>

#include "qroots/errors.hpp"

namespace qroots {

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int m = 1; m <= k; ++m) b = b * (n - k + m) / m;
  return b;
}

} // namespace

CentralBivarPoly conj(const CentralBivarPoly& p) {
  CentralBivarPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.first, e.second, conj(c));
  return out;
}

GhPair decompose(const StdPoly& f) {
  GhPair gh;
  if (f.is_zero()) return gh;
  gh.h.add_term(0, 0, f[0]);
  for (int k = 1; k <= f.degree(); ++k) {
    const Quaternion a = f[k];
    if (a == Quaternion{}) continue;
    // (r + x)^k with x^2 = -N: odd powers of x feed g, even powers feed h.
    for (int m = 0; 2 * m + 1 <= k; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      gh.g.add_term(k - 2 * m - 1, m, sign * binomial(k, 2 * m + 1) * a);
    }
    for (int m = 0; 2 * m <= k; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      gh.h.add_term(k - 2 * m, m, sign * binomial(k, 2 * m) * a);
    }
  }
  return gh;
}

PureImagGh restrict_pure_imaginary(const GhPair& gh) {
  auto at_r_zero = [](const CentralBivarPoly& p) {
    std::vector<Quaternion> c(static_cast<std::size_t>(std::max(p.degree_n() + 1, 0)));
    for (const auto& [e, coeff] : p.terms()) {
      if (e.first == 0) c[e.second] += coeff;
    }
    return StdPoly(std::move(c));
  };
  return {at_r_zero(gh.g), at_r_zero(gh.h)};
}

std::array<RealPoly, 4> components(const StdPoly& p, double tol) {
  const double limit = tol * p.max_coeff();
  std::array<std::vector<double>, 4> parts;
  for (auto& part : parts) part.resize(p.coeffs().size(), 0.0);
  for (std::size_t m = 0; m < p.coeffs().size(); ++m) {
    for (int c = 0; c < 4; ++c) {
      const double v = p.coeffs()[m][c];
      parts[c][m] = std::fabs(v) <= limit ? 0.0 : v;
    }
  }
  return {RealPoly(parts[0]), RealPoly(parts[1]), RealPoly(parts[2]), RealPoly(parts[3])};
}

NormEqResidual norm_equation(const StdPoly& gN, const StdPoly& hN, double tol) {
  if (gN.trimmed(tol).is_zero()) {
    throw DegenerateGError("g(N) is identically zero; solve h(N) = 0 directly");
  }
  const StdPoly g_bar = gN.conjugated();
  const StdPoly n_var{Quaternion{0.0}, Quaternion{1.0}};
  NormEqResidual out;
  out.residual = gN * g_bar * gN * n_var + hN * g_bar * hN;
  out.components = components(out.residual, tol);
  return out;
}

BivarNormEqResidual bivariate_norm_equation(const CentralBivarPoly& g, const CentralBivarPoly& h,
                                            double tol) {
  CentralBivarPoly n_var;
  n_var.add_term(0, 1, Quaternion{1.0});
  const CentralBivarPoly g_bar = conj(g);

  BivarNormEqResidual out;
  out.residual = g * g_bar * g * n_var + h * g_bar * h;

  double biggest = 0.0;
  for (const auto& [e, c] : out.residual.terms()) biggest = std::fmax(biggest, max_abs(c));
  for (const auto& [e, c] : out.residual.terms()) {
    for (int part = 0; part < 4; ++part) {
      if (std::fabs(c[part]) > tol * biggest) out.components[part].add_term(e.first, e.second, c[part]);
    }
  }
  return out;
}

RealPoly re_filter(const StdPoly& gN, const StdPoly& hN, double tol) {
  const StdPoly product = Quaternion{-1.0} * gN.conjugated() * hN;
  return components(product, tol)[0];
}

} // namespace qroots
