#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telsum/specials.hpp"
#include "testutil.hpp"

using namespace telsum;
using namespace telsum::testutil;

namespace {

ShiftSystem fibonacci() { return ShiftSystem::companion({XRat(1), XRat(1)}); }
ShiftSystem benchmark_system() { return ShiftSystem::companion({XRat(-6), XRat(5)}); }
ShiftSystem strange_system() {
  return ShiftSystem::general({{XRat(2), XRat::variable()}, {XRat(0), XRat(2)}});
}

TPoly T(size_t n, size_t j) { return TPoly::variable(n, j); }

bool has_ratio(const std::vector<HypergeomCert>& cs, const XRat& r) {
  for (const auto& c : cs)
    if (c.ratio == r) return true;
  return false;
}

bool contains_form(const std::vector<std::pair<TPoly, Rational>>& v, const TPoly& f,
                   const Rational& lam) {
  for (const auto& [p, l] : v) {
    XRat u;
    if (l == lam && tpoly_proportional(p, f, &u)) return true;
  }
  return false;
}

bool contains_special(const std::vector<LinearSpecial>& v, const TPoly& f, int ell,
                      const XRat& unit) {
  for (const auto& s : v) {
    XRat u;
    if (s.ell == ell && s.unit == unit && tpoly_proportional(s.form, f, &u)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("hypergeometric solutions of constant-coefficient operators") {
  SUBCASE("S^2 - 5S + 6 has certificates 2 and 3") {
    OreOperator L{{XRat(6), XRat(-5), XRat(1)}};
    auto certs = hypergeometric_solutions(L);
    CHECK(certs.size() == 2);
    CHECK(has_ratio(certs, XRat(2)));
    CHECK(has_ratio(certs, XRat(3)));
  }
  SUBCASE("S^2 - S - 1 has no rational certificates") {
    OreOperator L{{XRat(-1), XRat(-1), XRat(1)}};
    CHECK(hypergeometric_solutions(L).empty());
  }
}

TEST_CASE("first-order operator is its own certificate") {
  XRat r(XPoly::variable() + XPoly(Rational(1)), XPoly::variable());
  OreOperator L{{-r, XRat(1)}};
  auto certs = hypergeometric_solutions(L);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].ratio == r);
}

TEST_CASE("certificates with polynomial parts") {
  // y = x! satisfies sigma(y) = (x+1) y; build its second-order relative
  // (S - (x+2)) (S - (x+1)) expanded: S^2 - 2(x+2) S + (x+1)(x+2).
  XRat x = XRat::variable();
  OreOperator L{{(x + XRat(1)) * (x + XRat(2)), -(XRat(2) * x + XRat(4)), XRat(1)}};
  auto certs = hypergeometric_solutions(L);
  CHECK(has_ratio(certs, x + XRat(1)));
  for (const auto& c : certs) {
    // every certificate annihilates L symbolically
    XRat acc(0), cum(1);
    for (size_t k = 0; k < L.c.size(); ++k) {
      acc += L.c[k] * cum;
      cum *= sigma_x(c.ratio, static_cast<long>(k));
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("hypergeometric solutions respect the step parameter") {
  // sigma^2(y) = 4 y interleaved: operator tau - 4 in the shift by 2.
  OreOperator L{{XRat(-4), XRat(1)}};
  auto certs = hypergeometric_solutions(L, 2);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].ratio == XRat(4));
}

TEST_CASE("cfinite specials of A = [[0,1],[2,1]]") {
  ShiftSystem sys = ShiftSystem::companion({XRat(2), XRat(1)});
  auto sp = cfinite_specials(sys);
  CHECK(sp.size() == 2);
  CHECK(contains_form(sp, T(2, 0) + T(2, 1), Rational(2)));
  CHECK(contains_form(sp, T(2, 1) - XRat(2) * T(2, 0), Rational(-1)));
  for (const auto& [p, lam] : sp) {
    FactorClass c = special_test(sys, p);
    CHECK(c.special);
    CHECK(c.ell == 1);
    CHECK(c.unit == XRat(lam));
  }
}

TEST_CASE("cfinite specials of the order-two benchmark system") {
  auto sp = cfinite_specials(benchmark_system());
  CHECK(sp.size() == 2);
  CHECK(contains_form(sp, T(2, 1) - XRat(2) * T(2, 0), Rational(3)));
  CHECK(contains_form(sp, T(2, 1) - XRat(3) * T(2, 0), Rational(2)));
}

TEST_CASE("cfinite specials reject irrational spectra") {
  CHECK_THROWS_AS(cfinite_specials(fibonacci()), IrrationalEigenvalues);
  try {
    cfinite_specials(fibonacci());
  } catch (const IrrationalEigenvalues& e) {
    // the message reports the characteristic polynomial x^2 - x - 1
    CHECK(std::string(e.what()).find("x^2") != std::string::npos);
  }
}

TEST_CASE("linear special discovery on the benchmark system") {
  auto sp = find_linear_specials(benchmark_system(), 1);
  CHECK(sp.size() == 2);
  CHECK(contains_special(sp, T(2, 1) - XRat(2) * T(2, 0), 1, XRat(3)));
  CHECK(contains_special(sp, T(2, 1) - XRat(3) * T(2, 0), 1, XRat(2)));
}

TEST_CASE("linear special discovery on the upper-triangular system") {
  auto sp = find_linear_specials(strange_system(), 1);
  CHECK(contains_special(sp, T(2, 1), 1, XRat(2)));
  // every discovered form is genuinely special with the reported data
  for (const auto& s : sp) {
    FactorClass c = special_test(strange_system(), s.form);
    CHECK(c.special);
    CHECK(c.ell == s.ell);
    CHECK(c.unit == s.unit);
  }
}

TEST_CASE("Fibonacci has no linear specials up to shift order two") {
  CHECK(find_linear_specials(fibonacci(), 2).empty());
}

TEST_CASE("agreement between eigen-form and hypergeometric discovery") {
  std::vector<ShiftSystem> systems = {
      benchmark_system(), ShiftSystem::companion({XRat(2), XRat(1)}),
      ShiftSystem::companion({XRat(-2), XRat(3)})};  // eigenvalues 1, 2
  for (const auto& sys : systems) {
    auto eig = cfinite_specials(sys);
    auto hyp = find_linear_specials(sys, 1);
    for (const auto& [p, lam] : eig) {
      CHECK(contains_special(hyp, p, 1, XRat(lam)));
    }
  }
}

TEST_CASE("every discovered special passes special_test") {
  std::vector<ShiftSystem> systems = {fibonacci(), benchmark_system(), strange_system(),
                                      ShiftSystem::companion({XRat(2), XRat(1)})};
  for (const auto& sys : systems) {
    for (int s = 1; s <= 2; ++s) {
      for (const auto& sp : find_linear_specials(sys, s)) {
        FactorClass c = special_test(sys, sp.form);
        CHECK(c.special);
        CHECK(c.ell == sp.ell);
        CHECK(c.unit == sp.unit);
        CHECK(sp.form.t_degree() == 1);
      }
    }
  }
}
