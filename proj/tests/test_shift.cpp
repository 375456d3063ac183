#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "telsum/shift.hpp"
#include "telsum/xfactor.hpp"
#include "testutil.hpp"

using namespace telsum;
using testutil::x_plus;

static XPoly X = XPoly::variable();

TEST_CASE("sigma_x examples") {
  CHECK(sigma_x(XRat(X), 1) == XRat(x_plus(1)));
  XRat r(x_plus(-1), x_plus(3));
  CHECK(sigma_x(r, 5) == XRat(x_plus(4), x_plus(8)));
  XRat c(Rational(7, 3));
  CHECK(sigma_x(c, 4) == c);
  CHECK(sigma_x(r, 0) == r);
}

TEST_CASE("sigma_x round trip and homomorphism") {
  for (int trial = 0; trial < 30; ++trial) {
    XRat r = testutil::random_xrat();
    std::uniform_int_distribution<long> kd(-10, 10);
    long k = kd(testutil::rng());
    CHECK(sigma_x(sigma_x(r, k), -k) == r);
    XRat s = testutil::random_xrat();
    CHECK(sigma_x(r * s, k) == sigma_x(r, k) * sigma_x(s, k));
    CHECK(sigma_x(r + s, k) == sigma_x(r, k) + sigma_x(s, k));
  }
}

TEST_CASE("dispersion_x examples") {
  CHECK(dispersion_x(X * x_plus(2), X) == 2);
  CHECK(dispersion_x(X, x_plus(2)) == std::nullopt);
  CHECK(dispersion_x(X, X) == 0);
}

TEST_CASE("gp_form examples") {
  GPForm g1 = gp_form(XRat(x_plus(1), X));
  CHECK(g1.z == Rational(1));
  CHECK(g1.a == X);
  CHECK(g1.b.is_one());
  CHECK(g1.c.is_one());

  GPForm g2 = gp_form(XRat(X, x_plus(2)));
  CHECK(g2.z == Rational(1));
  CHECK(g2.a.is_one());
  CHECK(g2.b == X);
  CHECK(g2.c == x_plus(2));

  GPForm g3 = gp_form(XRat(Rational(3)));
  CHECK(g3.z == Rational(3));
  CHECK(g3.a.is_one());
  CHECK(g3.b.is_one());
  CHECK(g3.c.is_one());

  CHECK_THROWS(gp_form(XRat()));
}

static void check_gp_invariants(const XRat& r) {
  GPForm g = gp_form(r);
  CHECK(g.value() == r);
  CHECK(!g.z.is_zero());
  CHECK(g.a.is_zero() == false);
  // Shift-coprimality of b and c for all h >= 0: beyond the dispersion of the
  // pair there can be no common factor, so a scan up to it suffices.
  long hmax = 0;
  if (g.b.degree() >= 1 && g.c.degree() >= 1) {
    auto d = dispersion_x(g.b, g.c);
    CHECK(d == std::nullopt);  // the defining invariant, via resultant roots
    hmax = 2 * (g.b.degree() + g.c.degree());
  }
  for (long h = 0; h <= hmax; ++h)
    CHECK(xpoly_gcd(g.b, g.c.shifted(h)).degree() <= 0);
  CHECK(xpoly_gcd(g.a.shifted(1), g.b).degree() <= 0);
  CHECK(xpoly_gcd(g.a, g.c).degree() <= 0);
}

TEST_CASE("gp_form invariants on 100 random rational functions") {
  for (int trial = 0; trial < 100; ++trial) {
    // Build inputs with planted shift structure so nontrivial a parts occur.
    XPoly num = testutil::random_xpoly(2);
    XPoly den = testutil::random_xpoly(2);
    if (trial % 3 == 0) {
      XPoly f = testutil::random_xpoly(1);
      std::uniform_int_distribution<long> hd(0, 4);
      num = num * f;
      den = den * f.shifted(-hd(testutil::rng()));
    }
    if (den.is_zero()) den = x_plus(1);
    XRat r(num, den);
    if (r.is_zero()) continue;
    check_gp_invariants(r);
  }
}

TEST_CASE("gp_form chained shifts") {
  // x / ((x-1)(x-2)): the numerator pairs with both denominator factors.
  check_gp_invariants(XRat(X, x_plus(-1) * x_plus(-2)));
  check_gp_invariants(XRat(x_plus(-1) * x_plus(-2), X));
  check_gp_invariants(XRat(X * x_plus(-1), x_plus(-3) * x_plus(-4)));
  check_gp_invariants(XRat(X * X * x_plus(-5), x_plus(-1).pow(2) * x_plus(2)));
}

TEST_CASE("solve_shift examples") {
  auto s1 = solve_shift(XRat(x_plus(-1), x_plus(3)), XRat(x_plus(4), x_plus(8)));
  CHECK(s1.kind == ShiftSolution::kUnique);
  CHECK(s1.i == 5);

  auto s2 = solve_shift(XRat(Rational(7)), XRat(Rational(7)));
  CHECK(s2.kind == ShiftSolution::kAllShifts);

  auto s3 = solve_shift(XRat(X), XRat(X * X));
  CHECK(s3.kind == ShiftSolution::kNone);
}

TEST_CASE("solve_shift recovers planted shifts") {
  for (int trial = 0; trial < 40; ++trial) {
    XRat a = testutil::random_xrat(3);
    if (a.is_constant()) continue;
    std::uniform_int_distribution<long> id(-8, 8);
    long i = id(testutil::rng());
    auto s = solve_shift(a, sigma_x(a, i));
    REQUIRE(s.kind == ShiftSolution::kUnique);
    CHECK(s.i == i);
  }
}
