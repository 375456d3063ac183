#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "telsum/system.hpp"
#include "testutil.hpp"

using namespace telsum;
using namespace telsum::testutil;

namespace {

TPoly T(size_t n, size_t j) { return TPoly::variable(n, j); }

ShiftSystem fibonacci() { return ShiftSystem::companion({XRat(1), XRat(1)}); }
ShiftSystem benchmark_system() { return ShiftSystem::companion({XRat(-6), XRat(5)}); }
ShiftSystem strange_system() {
  XRat x = XRat::variable();
  return ShiftSystem::general({{XRat(2), x}, {XRat(0), XRat(2)}});
}

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

TEST_CASE("construction") {
  ShiftSystem fib = fibonacci();
  CHECK(fib.n() == 2);
  CHECK(fib.is_companion());
  CHECK(fib.matrix()[0][0] == XRat(0));
  CHECK(fib.matrix()[0][1] == XRat(1));
  CHECK(fib.matrix()[1][0] == XRat(1));
  CHECK(fib.matrix()[1][1] == XRat(1));

  CHECK_THROWS_AS(ShiftSystem::companion({XRat(0), XRat(1)}), std::domain_error);
  CHECK_THROWS_AS(
      ShiftSystem::general({{XRat(0), XRat(0)}, {XRat(0), XRat(1)}}),
      std::domain_error);

  ShiftSystem id = ShiftSystem::general(mat_identity(2));
  CHECK(id.apply_sigma(T(2, 0), 1) == T(2, 0));
  CHECK(id.apply_sigma(T(2, 1), 5) == T(2, 1));
}

TEST_CASE("apply_sigma examples") {
  ShiftSystem fib = fibonacci();
  TPoly t0 = T(2, 0), t1 = T(2, 1);
  CHECK(fib.apply_sigma(t0, 1) == t1);
  CHECK(fib.apply_sigma(t0, 2) == t0 + t1);
  CHECK(fib.apply_sigma(t0, -1) == t1 - t0);
  CHECK(fib.apply_sigma(t0, 0) == t0);

  ShiftSystem sys = benchmark_system();
  CHECK(sys.apply_sigma(t0 + t1, 1) == XRat(-6) * (t0 - t1));
}

TEST_CASE("apply_sigma respects x-dependence") {
  ShiftSystem s = strange_system();
  TPoly t0 = T(2, 0), t1 = T(2, 1);
  XPoly x = XPoly::variable();
  CHECK(s.apply_sigma(t0, 1) == XRat(2) * t0 + XRat::variable() * t1);
  // sigma(x * t1) = (x+1) * 2 t1
  TPoly p = XRat::variable() * t1;
  CHECK(s.apply_sigma(p, 1) == XRat(XPoly(2) * (x + XPoly(1))) * t1);
}

TEST_CASE("apply_sigma round trip and homomorphism") {
  std::vector<ShiftSystem> systems = {fibonacci(), benchmark_system(), strange_system()};
  for (const auto& sys : systems) {
    for (long k = -6; k <= 6; ++k) {
      TPoly v = random_tpoly(2, 2, 3);
      CHECK(sys.apply_sigma(sys.apply_sigma(v, k), -k) == v);
    }
    for (int iter = 0; iter < 5; ++iter) {
      TPoly u = random_tpoly(2, 2, 3);
      TPoly v = random_tpoly(2, 2, 3);
      long k = static_cast<long>(iter) - 2;
      CHECK(sys.apply_sigma(u * v, k) == sys.apply_sigma(u, k) * sys.apply_sigma(v, k));
      CHECK(sys.apply_sigma(u + v, k) == sys.apply_sigma(u, k) + sys.apply_sigma(v, k));
    }
  }
}

TEST_CASE("delta examples") {
  TPoly t0 = T(2, 0), t1 = T(2, 1);

  ShiftSystem s = strange_system();
  TRat f(t0, t1);
  TRat d = s.delta(f);
  CHECK(d == TRat(TPoly::constant(2, XRat(XPoly::variable(), XPoly(2)))));

  ShiftSystem fib = fibonacci();
  CHECK(fib.delta(TRat(TPoly::constant(2, XRat(7)))).is_zero());
  CHECK(fib.delta(TRat(TPoly::constant(2, XRat(1)), t0)) == TRat(t0 - t1, t0 * t1));
}

TEST_CASE("system_power") {
  ShiftSystem fib = fibonacci();
  CHECK(fib.power(1) == fib.matrix());
  Matrix f2 = fib.power(2);
  CHECK(f2[0][0] == XRat(1));
  CHECK(f2[0][1] == XRat(1));
  CHECK(f2[1][0] == XRat(1));
  CHECK(f2[1][1] == XRat(2));

  ShiftSystem s = strange_system();
  Matrix s2 = s.power(2);
  XPoly x = XPoly::variable();
  CHECK(s2[0][0] == XRat(4));
  CHECK(s2[0][1] == XRat(XPoly(2) * (XPoly(2) * x + XPoly(1))));
  CHECK(s2[1][0] == XRat(0));
  CHECK(s2[1][1] == XRat(4));

  // A_(s+1) = sigma^s(A) * A_(s)
  for (const auto& sys : {fibonacci(), benchmark_system(), strange_system()}) {
    for (long k = 1; k <= 4; ++k)
      CHECK(sys.power(k + 1) == mat_mul(mat_sigma(sys.matrix(), k), sys.power(k)));
  }
}

TEST_CASE("power matches iterated apply_sigma") {
  for (const auto& sys : {benchmark_system(), strange_system()}) {
    for (long s = 1; s <= 3; ++s) {
      Matrix m = sys.power(s);
      for (size_t j = 0; j < sys.n(); ++j) {
        TPoly expect(sys.n());
        for (size_t k = 0; k < sys.n(); ++k) expect += m[j][k] * T(sys.n(), k);
        CHECK(sys.apply_sigma(T(sys.n(), j), s) == expect);
      }
    }
  }
}

TEST_CASE("is_constant") {
  ShiftSystem fib = fibonacci();
  TPoly t0 = T(2, 0), t1 = T(2, 1);
  TPoly p = (t1 * t1 - t0 * t0 - t0 * t1).pow(2);
  CHECK(fib.is_constant(TRat(p)));
  CHECK_FALSE(fib.is_constant(TRat(t0)));
  CHECK(fib.is_constant(TRat(TPoly::constant(2, XRat(5)))));
  CHECK(strange_system().is_constant(TRat(TPoly::constant(2, XRat(5)))));
}
