#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qroots/errors.hpp"
#include "qroots/solvers.hpp"
#include "qroots/two_sided.hpp"
#include "test_util.hpp"

using namespace qroots;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
const Quaternion ONE{1.0};

int distinct_norms(const std::vector<NormedRoot>& roots) {
  std::vector<double> seen;
  for (const auto& r : roots) {
    const bool dup = std::any_of(seen.begin(), seen.end(),
                                 [&](double n) { return std::fabs(n - r.norm) <= 1e-6 * (1.0 + n); });
    if (!dup) seen.push_back(r.norm);
  }
  return static_cast<int>(seen.size());
}

bool contains(const std::vector<NormedRoot>& roots, const Quaternion& q) {
  return std::any_of(roots.begin(), roots.end(),
                     [&](const NormedRoot& r) { return approx_equal(r.root, q, 1e-6); });
}

} // namespace

TEST_CASE("two-sided evaluation keeps coefficient sides") {
  const TwoSidedPoly f = TwoSidedPoly::quadratic(I, J, ONE + J);
  CHECK(f.degree() == 2);
  CHECK(f.eval(I) == Quaternion{});
  CHECK(eval_two_sided(f, I) == Quaternion{});
  CHECK(TwoSidedPoly::quadratic(I, J, Quaternion{}).eval(Quaternion{}) == Quaternion{});
  // i z j at z = k: i k j = -j j = 1, while a left-moved i j z would give k k = -1.
  const TwoSidedPoly mid({TwoSidedTerm{I, 1, J}});
  CHECK(mid.eval(K) == ONE);

  test::Rng rng(89);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = rng.quaternion(5.0);
    const Quaternion c = rng.quaternion(5.0);
    const Quaternion z0 = rng.quaternion(3.0);
    const StdPoly standard{c, a, ONE};
    CHECK(approx_equal(TwoSidedPoly::quadratic(a, ONE, c).eval(z0), standard.eval(z0), 1e-12));
    const StdPoly g = rng.monic_poly(rng.integer(0, 5), 5.0);
    CHECK(approx_equal(TwoSidedPoly::from_standard(g).eval(z0), g.eval(z0), 1e-12));
  }
}

TEST_CASE("pure imaginary roots of z^2 + a z b + c: examples") {
  const auto r = pure_imaginary_roots_two_sided_quadratic(I, J, ONE + J);
  REQUIRE_FALSE(r.empty());
  CHECK(contains(r, I));
  for (const auto& nr : r)
    if (approx_equal(nr.root, I, 1e-9)) CHECK(nr.norm == doctest::Approx(1.0));
  CHECK(contains(r, I + K));
  CHECK(distinct_norms(r) <= 2);

  CHECK(pure_imaginary_roots_two_sided_quadratic(ONE, ONE, ONE).empty());

  CHECK_THROWS_AS(pure_imaginary_roots_two_sided_quadratic(Quaternion{}, J, ONE), ZeroCoefficientError);
  CHECK_THROWS_AS(pure_imaginary_roots_two_sided_quadratic(I, Quaternion{}, ONE), ZeroCoefficientError);
  CHECK_THROWS_AS(pure_imaginary_roots_two_sided_quadratic(I, J, Quaternion{}), ZeroCoefficientError);
}

TEST_CASE("random instances: at most two norms, every root verifies") {
  test::Rng rng(97);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion a = rng.quaternion(5.0);
    const Quaternion b = rng.quaternion(5.0);
    const Quaternion c = rng.quaternion(5.0);
    const auto roots = pure_imaginary_roots_two_sided_quadratic(a, b, c);
    CHECK(distinct_norms(roots) <= 2);
    const TwoSidedPoly f = TwoSidedPoly::quadratic(a, b, c);
    for (const auto& r : roots) {
      CHECK(abs(f.eval(r.root)) <= 1e-8 * f.scale_at(r.root));
      CHECK(r.root.re == 0.0);
    }
  }
}

TEST_CASE("planted pure imaginary roots are found") {
  test::Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    const Quaternion x0 = rng.pure_imaginary(0.5, 5.0);
    const Quaternion a = rng.quaternion(3.0);
    const Quaternion b = rng.quaternion(3.0);
    const Quaternion c = -(x0 * x0 + a * x0 * b);
    if (abs(c) < 1e-3) continue;
    const auto roots = pure_imaginary_roots_two_sided_quadratic(a, b, c);
    CHECK(contains(roots, x0));
    CHECK(distinct_norms(roots) <= 2);
  }
}

TEST_CASE("b = 1 agrees with the standard pure imaginary solver") {
  test::Rng rng(103);
  for (int t = 0; t < 300; ++t) {
    const Quaternion a = rng.quaternion(3.0);
    // Half the instances get a planted pure imaginary root.
    Quaternion c = rng.quaternion(3.0);
    if (t % 2 == 0) {
      const Quaternion x0 = rng.pure_imaginary(0.5, 5.0);
      c = -(x0 * x0 + a * x0);
    }
    const auto two_sided = pure_imaginary_roots_two_sided_quadratic(a, ONE, c);
    const RootSet standard = pure_imaginary_roots(StdPoly{c, a, ONE});
    for (const auto& r : two_sided) CHECK(standard.covers(r.root, 1e-6));
    for (const auto& z : standard.isolated) CHECK(contains(two_sided, z));
  }
}
