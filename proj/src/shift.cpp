#include "telsum/shift.hpp"

#include <algorithm>
#include <stdexcept>

#include "telsum/xfactor.hpp"

namespace telsum {

XRat GPForm::value() const {
  return XRat(XPoly(z)) * XRat(a.shifted(1), a) * XRat(b, c);
}

std::optional<long> dispersion_x(const XPoly& p, const XPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("dispersion of zero polynomial");
  if (p.degree() < 1 || q.degree() < 1) return std::nullopt;
  std::optional<long> best;
  for (long h : integer_roots(shift_resultant(p, q))) {
    if (h >= 0 && (!best || h > *best)) best = h;
  }
  return best;
}

GPForm gp_form(const XRat& r) {
  if (r.is_zero()) throw std::domain_error("GP form undefined for zero");
  GPForm g;
  g.z = r.num().leading();  // den is monic
  g.a = XPoly(Rational(1));
  g.b = r.num().monic();
  g.c = r.den();

  if (g.b.degree() >= 1 && g.c.degree() >= 1) {
    std::vector<long> shifts;
    for (long h : integer_roots(shift_resultant(g.b, g.c)))
      if (h >= 0) shifts.push_back(h);
    std::sort(shifts.begin(), shifts.end());
    for (long h : shifts) {
      XPoly s = xpoly_gcd(g.b, g.c.shifted(h));
      if (s.degree() < 1) continue;
      g.b = xpoly_divexact(g.b, s);
      g.c = xpoly_divexact(g.c, s.shifted(-h));
      for (long i = 1; i <= h; ++i) g.a = g.a * s.shifted(-i);
    }
  }
  return g;
}

ShiftSolution solve_shift(const XRat& a, const XRat& b) {
  if (a.is_constant()) {
    if (a == b) return ShiftSolution::all();
    return ShiftSolution::none();
  }
  if (b.is_constant()) return ShiftSolution::none();
  if (a.num().degree() != b.num().degree() || a.den().degree() != b.den().degree())
    return ShiftSolution::none();

  // For monic P of degree d >= 1, the x^(d-1) coefficient of sigma^i(P)
  // is c_{d-1} + d*i, so i is read off linearly.
  const bool use_num = a.num().degree() >= 1;
  XPoly p = use_num ? a.num().monic() : a.den();
  XPoly q = use_num ? b.num().monic() : b.den();
  int d = p.degree();
  Rational diff = q.coeff(d - 1) - p.coeff(d - 1);
  Rational i_rat = diff / Rational(d);
  if (!i_rat.is_integer()) return ShiftSolution::none();
  if (!mpz_fits_slong_p(i_rat.num().get_mpz_t())) return ShiftSolution::none();
  long i = i_rat.num().get_si();
  if (sigma_x(a, i) == b) return ShiftSolution::unique(i);
  return ShiftSolution::none();
}

}  // namespace telsum
