#pragma once

#include <cstdint>

#include "qroots/root_set.hpp"
#include "qroots/std_poly.hpp"
#include "qroots/two_sided.hpp"

namespace qroots {

struct OracleConfig {
  int starts = 512;
  double box = 8.0;          // start points are drawn from [-box, box]^4
  std::uint64_t seed = 0;
  double tol = 1e-8;         // accept |f(z)| <= tol * scale(f, z)
  int max_iters = 200;
};

// Brute-force root search over R^4: seeded multistart Levenberg-Marquardt on
// |f(z)|^2, clustering of converged points, and sphere recognition (at least
// 12 distinct hits sharing real part and imaginary norm to 1e-4).
// Throws NoConvergenceError if no start converges.
RootSet numeric_roots(const TwoSidedPoly& f, const OracleConfig& cfg = {});
RootSet numeric_roots(const StdPoly& f, const OracleConfig& cfg = {});

} // namespace qroots
