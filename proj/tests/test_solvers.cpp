#include <doctest.h>

#include <cmath>

#include "qroots/errors.hpp"
#include "qroots/oracle.hpp"
#include "qroots/solvers.hpp"
#include "test_util.hpp"

using namespace qroots;

namespace {

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
const Quaternion ONE{1.0};

const StdPoly kCubic{I - J, Quaternion{2.0} + K, Quaternion{}, ONE};

bool has_root(const RootSet& r, const Quaternion& q, double tol = 1e-9) {
  for (const auto& z : r.isolated)
    if (approx_equal(z, q, tol)) return true;
  return false;
}

bool sound(const StdPoly& f, const RootSet& r, double tol = kDefaultTol) {
  for (const auto& z : r.isolated)
    if (verify_root(f, z) > tol) return false;
  for (const auto& s : r.spheres)
    if (!verify_sphere(f, s, tol)) return false;
  return true;
}

StdPoly quadratic(const Quaternion& a, const Quaternion& b) { return StdPoly{b, a, ONE}; }

} // namespace

TEST_CASE("verify_root") {
  CHECK(verify_root(kCubic, J) <= kDefaultTol);
  const StdPoly f{ONE, {}, ONE};
  CHECK(verify_root(f, ONE) == doctest::Approx(2.0 / f.scale_at(ONE)));
  CHECK(verify_root(f, ONE) > kDefaultTol);
  test::Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    const Quaternion z0 = rng.quaternion(4.0);
    const StdPoly g = rng.monic_poly(rng.integer(1, 4), 5.0) * StdPoly::linear(z0);
    CHECK(verify_root(g, z0) <= kDefaultTol);
  }
}

TEST_CASE("quadratic normal form splits b into commuting and anticommuting parts") {
  test::Rng rng(59);
  for (int t = 0; t < 300; ++t) {
    const Quaternion a = rng.quaternion(5.0);
    const Quaternion b = rng.quaternion(5.0);
    const QuadraticNormalForm nf = quadratic_normal_form(a, b);
    CHECK(nf.shift == doctest::Approx(a.re / 2.0));
    CHECK(std::fabs(nf.a.re) <= 1e-12);
    CHECK(approx_equal(nf.b, Quaternion{nf.m} + nf.n * nf.a + nf.d, 1e-12));
    CHECK(max_abs(nf.a * nf.d + nf.d * nf.a) <= 1e-10 * (1.0 + norm(nf.a) * abs(nf.d)));
    CHECK(nf.a_sq == doctest::Approx(-norm(nf.a)));
    CHECK(nf.d_sq == doctest::Approx(-norm(nf.d)));
    // Depressed roots shifted back are roots of the original.
    for (const auto& w : solve_quadratic(nf.a, nf.b).isolated) {
      CHECK(verify_root(quadratic(a, b), w - Quaternion{nf.shift}) <= 1e-8);
    }
  }
}

TEST_CASE("quadratic examples") {
  const RootSet sphere = solve_quadratic(Quaternion{}, ONE);
  CHECK(sphere.isolated.empty());
  REQUIRE(sphere.spheres.size() == 1);
  CHECK(sphere.spheres[0].real_part == doctest::Approx(0.0));
  CHECK(sphere.spheres[0].imag_norm == doctest::Approx(1.0));

  const RootSet only_j = solve_quadratic(-(I + J), K);
  CHECK(only_j.spheres.empty());
  REQUIRE(only_j.isolated.size() == 1);
  CHECK(approx_equal(only_j.isolated[0], J, 1e-12));

  const RootSet p = solve_quadratic(J, ONE + K);
  CHECK(p.spheres.empty());
  REQUIRE(p.isolated.size() == 2);
  CHECK(has_root(p, I));
  CHECK(has_root(p, I - J));

  // Commuting coefficients: a complex quadratic inside R + R i.
  const RootSet complex = solve_quadratic(Quaternion{-2.0}, Quaternion{5.0});
  REQUIRE(complex.spheres.size() == 1);
  CHECK(complex.spheres[0].real_part == doctest::Approx(1.0));
  CHECK(complex.spheres[0].imag_norm == doctest::Approx(4.0));

  const RootSet d_zero = solve_quadratic(2.0 * I, Quaternion{1.0} + 3.0 * I);
  CHECK(sound(quadratic(2.0 * I, Quaternion{1.0} + 3.0 * I), d_zero));
  CHECK(d_zero.isolated.size() == 2);

  const RootSet real = solve_quadratic(Quaternion{-3.0}, Quaternion{2.0});
  CHECK(real.spheres.empty());
  REQUIRE(real.isolated.size() == 2);
  CHECK(has_root(real, ONE));
  CHECK(has_root(real, Quaternion{2.0}));
}

TEST_CASE("companion quadratic (z - b)(z - a)") {
  const RootSet r = companion_quadratic_roots(J, I);
  REQUIRE(r.isolated.size() == 1);
  CHECK(approx_equal(r.isolated[0], J, 1e-12));

  const RootSet dbl = companion_quadratic_roots(Quaternion{3.0}, Quaternion{3.0});
  CHECK(dbl.spheres.empty());
  REQUIRE(dbl.isolated.size() == 1);
  CHECK(approx_equal(dbl.isolated[0], Quaternion{3.0}, 1e-9));

  const RootSet t = companion_quadratic_roots(J, I - J);
  CHECK(has_root(t, J));
  CHECK(has_root(t, I + J));
}

TEST_CASE("random quadratics: every returned root verifies, oracle roots are covered") {
  test::Rng rng(61);
  for (int t = 0; t < 40; ++t) {
    const Quaternion a = rng.quaternion(5.0);
    const Quaternion b = rng.quaternion(5.0);
    const StdPoly f = quadratic(a, b);
    const RootSet r = solve_quadratic(a, b);
    CHECK(sound(f, r));
    OracleConfig cfg;
    cfg.starts = 128;
    cfg.seed = static_cast<std::uint64_t>(t);
    for (const auto& z : numeric_roots(f, cfg).isolated) CHECK(r.covers(z, 1e-6));
  }
}

TEST_CASE("quadratic with planted roots of every shape") {
  test::Rng rng(67);
  for (int t = 0; t < 300; ++t) {
    Quaternion z1 = rng.quaternion(3.0);
    Quaternion z2 = rng.quaternion(3.0);
    if (t % 4 == 1) z2 = z1;
    if (t % 4 == 2) z1 = imag_part(z1);
    if (t % 4 == 3) z2 = Quaternion{z2.re};
    const StdPoly f = from_linear_factors({z1, z2});
    const RootSet r = solve_quadratic(f[1], f[0]);
    CHECK(sound(f, r));
    CHECK(r.covers(z2, 1e-6));
  }
}

TEST_CASE("conjugation covariance of the quadratic solver") {
  test::Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = rng.quaternion(5.0);
    const Quaternion b = rng.quaternion(5.0);
    const Quaternion u = rng.unit();
    const Quaternion ui = conj(u);
    const RootSet r = solve_quadratic(a, b);
    const RootSet ru = solve_quadratic(u * a * ui, u * b * ui);
    CHECK(r.isolated.size() == ru.isolated.size());
    CHECK(r.spheres.size() == ru.spheres.size());
    for (const auto& z : r.isolated) CHECK(ru.covers(u * z * ui, 1e-6));
    for (const auto& s : r.spheres) {
      bool found = false;
      for (const auto& s2 : ru.spheres)
        found = found || (std::fabs(s.real_part - s2.real_part) <= 1e-9 &&
                          std::fabs(s.imag_norm - s2.imag_norm) <= 1e-9 * (1.0 + s.imag_norm));
      CHECK(found);
    }
  }
}

TEST_CASE("pure imaginary roots") {
  const RootSet cubic = pure_imaginary_roots(kCubic);
  CHECK(cubic.spheres.empty());
  REQUIRE(cubic.isolated.size() == 2);
  CHECK(has_root(cubic, J));
  CHECK(has_root(cubic, I + J));

  const RootSet sphere = pure_imaginary_roots(StdPoly{ONE, {}, ONE});
  CHECK(sphere.isolated.empty());
  REQUIRE(sphere.spheres.size() == 1);
  CHECK(sphere.spheres[0] == Sphere{0.0, 1.0});

  CHECK(pure_imaginary_roots(StdPoly{Quaternion{-1.0}, {}, {}, ONE}).empty());
  CHECK_THROWS_AS(pure_imaginary_roots(StdPoly{{}, ONE, ONE}), ConstantTermZeroError);

  test::Rng rng(73);
  for (int t = 0; t < 200; ++t) {
    const Quaternion x0 = rng.pure_imaginary(0.5, 5.0);
    const StdPoly f = rng.monic_poly(rng.integer(1, 4), 3.0) * StdPoly::linear(x0);
    const RootSet r = pure_imaginary_roots(f);
    CHECK(sound(f, r));
    CHECK(r.covers(x0, 1e-6));
    for (const auto& z : r.isolated) CHECK(std::fabs(z.re) == 0.0);
  }
}

TEST_CASE("spherical pure imaginary norms and the sphere dichotomy") {
  CHECK(spherical_pure_imaginary(kCubic).empty());
  const StdPoly with_sphere = StdPoly{ONE, {}, ONE} * StdPoly::linear(I);
  const auto norms = spherical_pure_imaginary(with_sphere);
  REQUIRE(norms.size() == 1);
  CHECK(norms[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(verify_root(with_sphere, J) <= 1e-12);
  CHECK(verify_root(with_sphere, K) <= 1e-12);

  const auto five = spherical_pure_imaginary(StdPoly{Quaternion{5.0}, {}, ONE});
  REQUIRE(five.size() == 1);
  CHECK(five[0] == doctest::Approx(5.0));

  test::Rng rng(79);
  for (int t = 0; t < 200; ++t) {
    StdPoly f = rng.monic_poly(rng.integer(1, 3), 3.0);
    if (t % 2 == 0) f = f * StdPoly{Quaternion{rng.uniform(0.5, 5.0)}, {}, ONE};
    else f = f * StdPoly::linear(rng.pure_imaginary(0.5, 5.0));
    const bool has_norms = !spherical_pure_imaginary(f).empty();
    const RootSet r = pure_imaginary_roots(f);
    CHECK(has_norms == !r.spheres.empty());
  }
}

TEST_CASE("cubic solver on the worked example") {
  const CubicSolution s = solve_cubic(kCubic);
  CHECK(s.roots.spheres.empty());
  REQUIRE(s.roots.isolated.size() == 2);
  CHECK(has_root(s.roots, J));
  CHECK(has_root(s.roots, I + J));
  CHECK(approx_equal(from_linear_factors({s.factors[0], s.factors[1], s.factors[2]}), kCubic, 1e-12));
  CHECK(approx_equal(s.factors[2], J, 1e-12));
  CHECK(approx_equal(s.factors[1], I, 1e-12));
  CHECK(approx_equal(s.factors[0], -I - J, 1e-12));
}

TEST_CASE("cubic solver: unsupported and spherical cases") {
  CHECK_THROWS_AS(solve_cubic(StdPoly{Quaternion{-1.0}, {}, {}, ONE}), NotSupportedError);

  const StdPoly f = StdPoly{ONE, ONE, ONE} * StdPoly::linear(I);
  const CubicSolution s = solve_cubic(f);
  REQUIRE(s.roots.isolated.size() == 1);
  CHECK(approx_equal(s.roots.isolated[0], I, 1e-12));
  REQUIRE(s.roots.spheres.size() == 1);
  CHECK(s.roots.spheres[0].real_part == doctest::Approx(-0.5));
  CHECK(s.roots.spheres[0].imag_norm == doctest::Approx(0.75));
  CHECK(verify_root(f, Quaternion{-0.5, 0.0, std::sqrt(3.0) / 2.0, 0.0}) <= 1e-12);
  CHECK(sound(f, s.roots));

  // A sphere through the pivot: the whole cubic has a central factor.
  const StdPoly g = StdPoly{ONE, {}, ONE} * StdPoly::linear(Quaternion{2.0, 1.0, 0.0, 0.0});
  const CubicSolution sg = solve_cubic(g);
  CHECK(sound(g, sg.roots));
  CHECK(sg.roots.covers(J, 1e-9));
  CHECK(sg.roots.covers(Quaternion{2.0, 1.0, 0.0, 0.0}, 1e-9));
}

TEST_CASE("planted cubics: recovery and the factor identity") {
  test::Rng rng(83);
  for (int t = 0; t < 200; ++t) {
    const Quaternion x0 = rng.pure_imaginary(0.5, 5.0);
    const StdPoly f = rng.monic_poly(2, 5.0) * StdPoly::linear(x0);
    const CubicSolution s = solve_cubic(f);
    CHECK(sound(f, s.roots));
    CHECK(s.roots.covers(x0, 1e-6));
    const StdPoly chain = from_linear_factors({s.factors[0], s.factors[1], s.factors[2]});
    CHECK(approx_equal(chain, f, 1e-9));
  }
}

TEST_CASE("dispatcher") {
  CHECK(solve(StdPoly{Quaternion{-2.0} * I, ONE}).isolated == std::vector<Quaternion>{2.0 * I});
  CHECK(solve(StdPoly{ONE, {}, ONE}).spheres.size() == 1);
  CHECK(solve(kCubic).isolated.size() == 2);
  CHECK_THROWS_AS(solve(StdPoly{Quaternion{-1.0}, {}, {}, ONE}), NotSupportedError);
  CHECK_THROWS_AS(solve(StdPoly{ONE, {}, {}, {}, ONE}), NotSupportedError);
  CHECK_THROWS_AS(solve(StdPoly{}), ZeroPolynomialError);

  // Zero constant term: 0 is a root and the rest is solved after deflation.
  const RootSet r = solve(StdPoly{{}, ONE, {}, ONE});
  CHECK(has_root(r, Quaternion{}));
  REQUIRE(r.spheres.size() == 1);
  CHECK(r.spheres[0].imag_norm == doctest::Approx(1.0));
}
