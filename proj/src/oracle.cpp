#include "qroots/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "detail/small_linalg.hpp"
#include "qroots/errors.hpp"

namespace qroots {

namespace {

constexpr double kClusterTol = 1e-5;
constexpr double kSphereTol = 1e-4;
constexpr std::size_t kSphereHits = 12;

struct Hit {
  Quaternion z;
  double residual;
};

detail::Mat4 jacobian(const TwoSidedPoly& f, const Quaternion& z) {
  int top = 0;
  for (const auto& t : f.terms()) top = std::max(top, t.power);
  std::vector<Quaternion> powers(static_cast<std::size_t>(std::max(top, 1)));
  powers[0] = Quaternion{1.0};
  for (int l = 1; l < top; ++l) powers[l] = powers[l - 1] * z;

  detail::Mat4 jac{};
  for (int col = 0; col < 4; ++col) {
    const Quaternion e = detail::basis(col);
    Quaternion deriv;
    for (const auto& t : f.terms()) {
      if (t.power > 0) deriv += t.left * detail::power_derivative(powers, t.power, e) * t.right;
    }
    for (int row = 0; row < 4; ++row) jac[row][col] = deriv[row];
  }
  return jac;
}

double relative_residual(const TwoSidedPoly& f, const Quaternion& z) {
  const double scale = f.scale_at(z);
  return scale == 0.0 ? 0.0 : abs(f.eval(z)) / scale;
}

std::optional<Hit> descend(const TwoSidedPoly& f, Quaternion z, const OracleConfig& cfg) {
  double lambda = 1e-3;
  Quaternion value = f.eval(z);
  double cost = norm(value);
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    if (relative_residual(f, z) <= 1e-3 * cfg.tol) break;
    const detail::Mat4 jac = jacobian(f, z);
    // (J^T J + lambda * max diag * I) step = -J^T F
    detail::Mat4 normal{};
    detail::Vec4 rhs{};
    double diag = 0.0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        for (int m = 0; m < 4; ++m) normal[r][c] += jac[m][r] * jac[m][c];
      }
      for (int m = 0; m < 4; ++m) rhs[r] -= jac[m][r] * value[m];
      diag = std::fmax(diag, normal[r][r]);
    }
    if (diag == 0.0) break;
    for (int r = 0; r < 4; ++r) normal[r][r] += lambda * diag;
    const auto step = detail::solve4(normal, rhs);
    if (!step) {
      lambda *= 10.0;
      continue;
    }
    const Quaternion next = z + Quaternion{(*step)[0], (*step)[1], (*step)[2], (*step)[3]};
    const Quaternion next_value = f.eval(next);
    const double next_cost = norm(next_value);
    if (next_cost < cost) {
      z = next;
      value = next_value;
      cost = next_cost;
      lambda = std::fmax(lambda / 5.0, 1e-15);
    } else {
      lambda *= 4.0;
      if (lambda > 1e12) break;
    }
    if (abs(z) > 1e3 * cfg.box) return std::nullopt;
  }
  const double res = relative_residual(f, z);
  if (res <= cfg.tol) return Hit{z, res};
  return std::nullopt;
}

} // namespace

RootSet numeric_roots(const TwoSidedPoly& f, const OracleConfig& cfg) {
  if (cfg.starts < 1 || !(cfg.box > 0.0) || !(cfg.tol > 0.0)) {
    throw std::invalid_argument("oracle config needs starts >= 1, box > 0 and tol > 0");
  }
  if (f.degree() < 1) throw std::invalid_argument("oracle needs degree >= 1");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coord(-cfg.box, cfg.box);

  std::vector<Hit> clusters;
  for (int s = 0; s < cfg.starts; ++s) {
    Quaternion start;
    start.re = coord(rng);
    start.i = coord(rng);
    start.j = coord(rng);
    start.k = coord(rng);
    const auto hit = descend(f, start, cfg);
    if (!hit) continue;
    auto same = std::find_if(clusters.begin(), clusters.end(), [&](const Hit& c) {
      return max_abs(c.z - hit->z) <= kClusterTol * (1.0 + abs(c.z));
    });
    if (same == clusters.end()) {
      clusters.push_back(*hit);
    } else if (hit->residual < same->residual) {
      *same = *hit;
    }
  }
  if (clusters.empty()) throw NoConvergenceError("no oracle start converged");

  // Group distinct hits by (real part, imaginary length).
  RootSet roots;
  std::vector<bool> used(clusters.size(), false);
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    if (used[a]) continue;
    const double re = clusters[a].z.re;
    const double len = abs(imag_part(clusters[a].z));
    std::vector<std::size_t> group;
    for (std::size_t b = a; b < clusters.size(); ++b) {
      if (used[b]) continue;
      const double scale = 1.0 + abs(clusters[b].z);
      if (std::fabs(clusters[b].z.re - re) <= kSphereTol * scale &&
          std::fabs(abs(imag_part(clusters[b].z)) - len) <= kSphereTol * scale) {
        group.push_back(b);
      }
    }
    if (group.size() >= kSphereHits) {
      double re_sum = 0.0;
      double norm_sum = 0.0;
      for (std::size_t b : group) {
        used[b] = true;
        re_sum += clusters[b].z.re;
        norm_sum += norm(imag_part(clusters[b].z));
      }
      roots.spheres.push_back({re_sum / group.size(), norm_sum / group.size()});
    }
  }
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    if (!used[a]) roots.isolated.push_back(clusters[a].z);
  }
  canonicalize(roots, kClusterTol);
  return roots;
}

RootSet numeric_roots(const StdPoly& f, const OracleConfig& cfg) {
  return numeric_roots(TwoSidedPoly::from_standard(f), cfg);
}

} // namespace qroots
