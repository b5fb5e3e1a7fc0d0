#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qroots/errors.hpp"
#include "qroots/real_poly.hpp"
#include "test_util.hpp"

using namespace qroots;

namespace {

RealPoly from_roots(const std::vector<double>& roots) {
  RealPoly p{1.0};
  for (double r : roots) p = p * RealPoly{-r, 1.0};
  return p;
}

} // namespace

TEST_CASE("arithmetic and trimming") {
  const RealPoly p{1.0, 2.0, 0.0};
  CHECK(p.degree() == 1);
  CHECK(RealPoly{0.0, 0.0}.is_zero());
  CHECK((RealPoly{1.0, 1.0} * RealPoly{-1.0, 1.0}).coeffs() == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK((RealPoly{1.0, 1.0} - RealPoly{0.0, 1.0}).degree() == 0);
  CHECK(RealPoly{1.0, 2.0, 3.0}.derivative().coeffs() == std::vector<double>{2.0, 6.0});
  CHECK(RealPoly{1.0, 2.0, 1e-14}.trimmed(1e-12).degree() == 1);
  CHECK(RealPoly{2.0, 4.0}.monic().coeffs() == std::vector<double>{0.5, 1.0});
  CHECK(RealPoly{1.0, -3.0, 2.0}(2.0) == 3.0);
}

TEST_CASE("real roots of the norm-equation cubic: 1 double, 2 simple") {
  const auto roots = real_roots(RealPoly{-2.0, 5.0, -4.0, 1.0});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(roots[0].multiplicity == 2);
  CHECK(roots[1].value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(roots[1].multiplicity == 1);
}

TEST_CASE("real roots: no real roots, radicals, zero roots") {
  CHECK(real_roots(RealPoly{1.0, 0.0, 1.0}).empty());
  const auto r2 = real_roots(RealPoly{-2.0, 0.0, 1.0});
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].value == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2[1].value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  const auto r0 = real_roots(RealPoly{0.0, 0.0, -1.0, 1.0});
  REQUIRE(r0.size() == 2);
  CHECK(r0[0].value == 0.0);
  CHECK(r0[0].multiplicity == 2);
  CHECK(r0[1].value == doctest::Approx(1.0));
  CHECK(real_roots(RealPoly{3.0}).empty());
  CHECK_THROWS_AS(real_roots(RealPoly{}), ZeroPolynomialError);
}

TEST_CASE("quartic with a triple root and the casus irreducibilis") {
  const auto r = real_roots(from_roots({-1.5, -1.5, -1.5, 4.0}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].multiplicity == 3);
  CHECK(r[0].value == doctest::Approx(-1.5).epsilon(1e-9));
  CHECK(r[1].value == doctest::Approx(4.0).epsilon(1e-12));

  const auto three = real_roots(from_roots({-2.0, 0.5, 3.0}));
  REQUIRE(three.size() == 3);
  CHECK(three[0].value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(three[1].value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(three[2].value == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("closed forms agree with the iterative method on random real-rooted polynomials") {
  test::Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const int degree = rng.integer(1, 4);
    std::vector<double> planted;
    for (int m = 0; m < degree; ++m) planted.push_back(rng.uniform(-5.0, 5.0));
    std::sort(planted.begin(), planted.end());
    const RealPoly p = from_roots(planted);

    const auto closed = real_roots(p);
    const auto iterative = real_roots(p, kDefaultTol, RootMethod::Iterative);
    REQUIRE(closed.size() == iterative.size());
    for (std::size_t m = 0; m < closed.size(); ++m) {
      CHECK(closed[m].multiplicity == iterative[m].multiplicity);
      CHECK(std::fabs(closed[m].value - iterative[m].value) <= 1e-6 * (1.0 + std::fabs(closed[m].value)));
    }
    int total = 0;
    for (const auto& r : closed) total += r.multiplicity;
    CHECK(total == degree);
  }
}

TEST_CASE("complex roots of random quartics and sextics reproduce the polynomial") {
  test::Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const int degree = 2 + t % 5;
    std::vector<double> c;
    for (int m = 0; m <= degree; ++m) c.push_back(rng.uniform(-5.0, 5.0));
    c.back() = 1.0;
    const RealPoly p(c);
    const auto roots = complex_roots(p);
    REQUIRE(static_cast<int>(roots.size()) == degree);
    for (const auto& z : roots) {
      const double scale = p.scale_at(std::abs(z));
      CHECK(std::abs(p(z)) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("common real roots") {
  const auto c1 = common_real_roots({RealPoly{-2.0, 5.0, -4.0, 1.0}, RealPoly{}, RealPoly{}, RealPoly{}});
  REQUIRE(c1.size() == 2);
  CHECK(c1[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c1[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(common_real_roots({RealPoly{-1.0, 1.0}, RealPoly{-2.0, 1.0}}).empty());
  const auto c3 = common_real_roots({RealPoly{-1.0, 0.0, 1.0}, RealPoly{-1.0, 1.0}});
  REQUIRE(c3.size() == 1);
  CHECK(c3[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(common_real_roots({RealPoly{}, RealPoly{}}), AllZeroError);
}

TEST_CASE("gcd and common factor") {
  const RealPoly g = poly_gcd(from_roots({1.0, 1.0, 2.0, -3.0}), from_roots({1.0, 2.0, 5.0}));
  REQUIRE(g.degree() == 2);
  CHECK(g[0] == doctest::Approx(2.0));
  CHECK(g[1] == doctest::Approx(-3.0));
  CHECK(g[2] == 1.0);
  CHECK(poly_gcd(RealPoly{-1.0, 1.0}, RealPoly{-2.0, 1.0}).degree() == 0);

  const RealPoly f = common_factor({2.0 * from_roots({1.0, 2.0}), RealPoly{}, -1.0 * from_roots({2.0, 7.0})});
  REQUIRE(f.degree() == 1);
  CHECK(f[0] == doctest::Approx(-2.0));
  CHECK_THROWS_AS(common_factor({RealPoly{}}), AllZeroError);
}
