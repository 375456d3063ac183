#ifndef TELSUM_TESTUTIL_HPP
#define TELSUM_TESTUTIL_HPP

#include <random>

#include "telsum/xpoly.hpp"
#include "telsum/xrat.hpp"

namespace telsum::testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240917u);
  return gen;
}

inline Rational random_rational(long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 5);
  return Rational(num(rng()), den(rng()));
}

inline XPoly random_xpoly(int max_deg, bool nonzero = true) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  int d = dd(rng());
  std::vector<Rational> c(static_cast<size_t>(d) + 1);
  std::uniform_int_distribution<long> ci(-9, 9);
  for (auto& x : c) x = Rational(ci(rng()));
  XPoly p{std::move(c)};
  if (nonzero && p.is_zero()) return XPoly(Rational(1)) + XPoly::variable();
  return p;
}

inline XRat random_xrat(int max_deg = 3) {
  XPoly num = random_xpoly(max_deg);
  XPoly den = random_xpoly(max_deg);
  if (den.is_zero()) den = XPoly(Rational(1));
  return XRat(num, den);
}

inline XPoly x_plus(long k) { return XPoly::variable() + XPoly(Rational(k)); }

}  // namespace telsum::testutil

#endif
