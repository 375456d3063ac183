#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telsum/tpoly.hpp"
#include "testutil.hpp"

using namespace telsum;
using namespace telsum::testutil;

namespace {

TPoly T(size_t n, size_t j) { return TPoly::variable(n, j); }
TPoly C(size_t n, long c) { return TPoly::constant(n, XRat(c)); }

TPoly random_tpoly(size_t n, int max_deg, int max_terms) {
  TPoly p(n);
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::uniform_int_distribution<int> de(0, max_deg);
  int terms = nt(rng());
  for (int i = 0; i < terms; ++i) {
    Monomial m{std::vector<int>(n, 0)};
    for (size_t j = 0; j < n; ++j) m.e[j] = de(rng());
    p.add_term(m, XRat(random_rational()));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);
  TPoly p = (t0 + t1) * (t0 - t1);
  CHECK(p == t0 * t0 - t1 * t1);
  CHECK(p.t_degree() == 2);
  CHECK(p.degree_in(0) == 2);
  CHECK((p - p).is_zero());
  CHECK((t0 + t1).pow(2) == t0 * t0 + XRat(2) * t0 * t1 + t1 * t1);
  CHECK(TPoly(n).t_degree() == -1);
}

TEST_CASE("ring axioms on random triples") {
  for (int iter = 0; iter < 40; ++iter) {
    TPoly a = random_tpoly(3, 3, 4);
    TPoly b = random_tpoly(3, 3, 4);
    TPoly c = random_tpoly(3, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("leading term and normalization use lex order, t0 most significant") {
  const size_t n = 2;
  TPoly p = T(n, 0) - T(n, 1);  // t0 - t1
  CHECK(p.leading().first.e == std::vector<int>{1, 0});
  CHECK(p.normalized() == p);
  TPoly q = XRat(3) * T(n, 1) - XRat(6) * T(n, 0);
  CHECK(q.normalized() == T(n, 0) - XRat(Rational(1, 2)) * T(n, 1));
}

TEST_CASE("substitute applies images and x-shift") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);
  // sigma for the system sigma(t0)=t1, sigma(t1)=-6 t0 + 5 t1.
  std::vector<TPoly> img = {t1, XRat(-6) * t0 + XRat(5) * t1};
  TPoly p = TPoly::constant(n, XRat::variable()) * t0;  // x * t0
  TPoly s = p.substitute(img, 1);
  CHECK(s == TPoly::constant(n, XRat(XPoly::variable() + XPoly(1))) * t1);
  // homomorphism on a product
  TPoly a = random_tpoly(n, 2, 3), b = random_tpoly(n, 2, 3);
  CHECK((a * b).substitute(img, 1) == a.substitute(img, 1) * b.substitute(img, 1));
}

TEST_CASE("exact division") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);
  TPoly a = (t0 + t1) * (t0 * t0 + XRat(3) * t1);
  CHECK(tpoly_divexact(a, t0 + t1) == t0 * t0 + XRat(3) * t1);
  CHECK(tpoly_divides(t0 + t1, a));
  CHECK_FALSE(tpoly_divides(t0 - t1, a));
  CHECK_THROWS_AS(tpoly_divexact(a, t0 - t1), std::logic_error);
}

TEST_CASE("tpoly_gcd examples") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);
  CHECK(tpoly_gcd(t0 * t0 - t1 * t1, t0 - t1) == t0 - t1);
  TPoly p = (t0 + t1) * (XRat(2) * t0 * t0 - t1) * XRat(7);
  CHECK(tpoly_gcd(p, p) == p.normalized());
  CHECK(tpoly_gcd((t0 + t1) * (t0 - t1), (t0 + t1) * (XRat(2) * t0 - t1)) == t0 + t1);
}

TEST_CASE("tpoly_gcd divides both inputs (random products)") {
  for (int iter = 0; iter < 25; ++iter) {
    TPoly g = random_tpoly(2, 2, 3);
    if (g.is_zero()) continue;
    TPoly a = g * random_tpoly(2, 2, 3);
    TPoly b = g * random_tpoly(2, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    TPoly d = tpoly_gcd(a, b);
    CHECK(tpoly_divides(d, a));
    CHECK(tpoly_divides(d, b));
    CHECK(tpoly_divides(g.normalized(), d));  // common factor is captured
  }
}

TEST_CASE("gcd with x-dependent coefficients") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);
  XRat x = XRat::variable();
  TPoly g = t0 + TPoly::constant(n, x) * t1;
  TPoly a = g * (t0 - t1);
  TPoly b = g * (t0 + t1);
  TPoly d = tpoly_gcd(a, b);
  XRat u;
  CHECK(tpoly_proportional(g, d, &u));
}

TEST_CASE("tpoly_proportional") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);
  TPoly p = XRat(2) * t0 - t1;
  XRat u;
  CHECK(tpoly_proportional(p, XRat(-3) * p, &u));
  CHECK(u == XRat(-3));
  CHECK_FALSE(tpoly_proportional(p, t0 + t1, &u));
  CHECK_FALSE(tpoly_proportional(p, TPoly(n), &u));
}

TEST_CASE("squarefree_t examples") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);

  SUBCASE("simple powers") {
    TPoly p = (t0 - t1).pow(2) * (t0 + t1);
    auto sf = squarefree_t(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].first == (t0 + t1).normalized());
    CHECK(sf[0].second == 1);
    CHECK(sf[1].first == (t0 - t1).normalized());
    CHECK(sf[1].second == 2);
  }

  SUBCASE("irreducible input") {
    TPoly p = t0 * t0 + t1 * t1;
    auto sf = squarefree_t(p);
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].first == p.normalized());
    CHECK(sf[0].second == 1);
  }

  SUBCASE("example denominator") {
    TPoly p = TPoly::constant(n, XRat(2592)) * (XRat(3) * t0 - XRat(2) * t1).pow(2) *
              (t0 - t1).pow(2) * (XRat(2) * t0 - t1) * (t0 + t1);
    auto sf = squarefree_t(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].second == 1);
    CHECK(sf[0].first == ((XRat(2) * t0 - t1) * (t0 + t1)).normalized());
    CHECK(sf[1].second == 2);
    CHECK(sf[1].first == ((XRat(3) * t0 - XRat(2) * t1) * (t0 - t1)).normalized());
  }

  SUBCASE("reproduces input up to a unit") {
    for (int iter = 0; iter < 10; ++iter) {
      TPoly a = random_tpoly(2, 2, 3);
      TPoly b = random_tpoly(2, 2, 3);
      if (a.is_zero() || b.is_zero()) continue;
      TPoly p = a * a * b;
      if (p.is_constant()) continue;
      TPoly prod = TPoly::constant(2, XRat(1));
      for (const auto& [part, mult] : squarefree_t(p)) {
        prod = prod * part.pow(mult);
        // parts pairwise coprime
      }
      auto sf = squarefree_t(p);
      for (size_t i = 0; i < sf.size(); ++i)
        for (size_t j = i + 1; j < sf.size(); ++j)
          CHECK(tpoly_gcd(sf[i].first, sf[j].first).is_constant());
      XRat u;
      CHECK(tpoly_proportional(prod, p, &u));
    }
  }
}

TEST_CASE("factor_t examples") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);

  SUBCASE("difference of squares") {
    TFactorization f = factor_t(t0 * t0 - t1 * t1);
    CHECK(f.unit == XRat(1));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == t0 - t1);
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].first == t0 + t1);
    CHECK(f.factors[1].second == 1);
  }

  SUBCASE("irreducible sum of squares") {
    TFactorization f = factor_t(t0 * t0 + t1 * t1);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == t0 * t0 + t1 * t1);
    CHECK(f.factors[0].second == 1);
  }

  SUBCASE("x content pulled into unit") {
    TFactorization f = factor_t(TPoly::constant(n, XRat::variable()) * t0);
    CHECK(f.unit == XRat::variable());
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == t0);
  }

  SUBCASE("example denominator factors completely") {
    TPoly p = TPoly::constant(n, XRat(2592)) * (XRat(3) * t0 - XRat(2) * t1).pow(2) *
              (t0 - t1).pow(2) * (XRat(2) * t0 - t1) * (t0 + t1);
    TFactorization f = factor_t(p);
    REQUIRE(f.factors.size() == 4);
    TPoly prod = TPoly::constant(n, f.unit);
    for (const auto& [g, m] : f.factors) {
      CHECK(g.t_degree() == 1);
      prod = prod * g.pow(m);
    }
    CHECK(prod == p);
  }

  SUBCASE("remultiplication on random products") {
    for (int iter = 0; iter < 8; ++iter) {
      TPoly a = random_tpoly(2, 1, 2);
      TPoly b = random_tpoly(2, 1, 2);
      if (a.is_zero() || b.is_zero()) continue;
      TPoly p = a * b;
      TFactorization f = factor_t(p);
      TPoly prod = TPoly::constant(2, f.unit);
      for (const auto& [g, m] : f.factors) prod = prod * g.pow(m);
      CHECK(prod == p);
    }
  }

  SUBCASE("degree cap triggers") {
    TPoly p = (t0 + t1 + C(n, 1)).pow(3) * (t0 - t1 + C(n, 2)).pow(3);
    CHECK_THROWS_AS(factor_t(p, 4), DegreeTooLarge);
  }
}

TEST_CASE("homogeneous_components") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);

  SUBCASE("example numerator") {
    TPoly U = t0.pow(3) + XRat(4) * t0 * t0 + XRat(5) * t0 * t1 * t1 + XRat(2) * t1.pow(3);
    auto hc = homogeneous_components(U);
    REQUIRE(hc.size() == 2);
    CHECK(hc[0].first == 2);
    CHECK(hc[0].second == XRat(4) * t0 * t0);
    CHECK(hc[1].first == 3);
    CHECK(hc[1].second == t0.pow(3) + XRat(5) * t0 * t1 * t1 + XRat(2) * t1.pow(3));
  }

  SUBCASE("homogeneous input is a single component") {
    TPoly p = t0 * t1 + t1 * t1;
    auto hc = homogeneous_components(p);
    REQUIRE(hc.size() == 1);
    CHECK(hc[0] == std::pair<int, TPoly>(2, p));
  }

  SUBCASE("zero") { CHECK(homogeneous_components(TPoly(n)).empty()); }

  SUBCASE("components sum to input") {
    TPoly p = random_tpoly(3, 3, 6);
    TPoly s(3);
    for (const auto& [d, c] : homogeneous_components(p)) s += c;
    CHECK(s == p);
  }
}

TEST_CASE("TRat invariants and arithmetic") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);

  TRat f(t0 * t0 - t1 * t1, (t0 - t1) * XRat(3));
  CHECK(f.num() == XRat(Rational(1, 3)) * (t0 + t1));
  CHECK(f.den() == TPoly::constant(n, XRat(1)));

  TRat g(t0, t1 * XRat(2));
  CHECK(g.den() == t1);  // leading coefficient of den is 1
  CHECK(g.num() == XRat(Rational(1, 2)) * t0);

  TRat h = f + g;
  CHECK(tpoly_gcd(h.num(), h.den()).is_constant());
  CHECK((g - g).is_zero());
  CHECK(g * TRat(t1 * XRat(2), t0) == TRat(TPoly::constant(n, XRat(1))));
  CHECK_THROWS_AS(TRat(t0, TPoly(n)), std::domain_error);

  for (int iter = 0; iter < 15; ++iter) {
    TPoly a = random_tpoly(2, 2, 3), b = random_tpoly(2, 2, 3);
    if (b.is_zero()) continue;
    TRat r(a, b);
    CHECK(tpoly_gcd(r.num(), r.den()).is_constant());
    if (!r.den().is_zero()) CHECK(r.den().leading().second.is_one());
    // field axioms spot checks
    TRat s(b, b * b);
    CHECK(r * s == TRat(a * b, b * b * b));
  }
}

TEST_CASE("str round-trippable shapes") {
  const size_t n = 2;
  TPoly t0 = T(n, 0), t1 = T(n, 1);
  TPoly p = XRat(2) * t0 * t1 - TPoly::constant(n, XRat::variable());
  CHECK(p.str() == "2*t0*t1 + (-x)");
  CHECK(TPoly(n).str() == "0");
}
