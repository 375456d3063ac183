#ifndef TELSUM_SHIFT_HPP
#define TELSUM_SHIFT_HPP

#include <optional>

#include "telsum/xrat.hpp"

namespace telsum {

/// Gosper-Petkovsek form of a rational function in x:
///   value = z * (a(x+1)/a(x)) * (b/c)
/// with a, b, c monic, gcd(b(x), c(x+h)) = 1 for all h >= 0,
/// gcd(a(x+1), b(x)) = 1 and gcd(a(x), c(x)) = 1.
struct GPForm {
  Rational z;
  XPoly a, b, c;

  XRat value() const;
};

/// Largest h >= 0 with deg gcd(p(x), q(x+h)) >= 1; nullopt if none.
std::optional<long> dispersion_x(const XPoly& p, const XPoly& q);

/// GP form of a nonzero rational function; shift candidates are processed in
/// increasing order so the invariants above hold for inputs whose numerator
/// factors pair with several denominator shifts.
GPForm gp_form(const XRat& r);

/// Outcome of solving sigma^i(a) = b for an integer i.
struct ShiftSolution {
  enum Kind { kUnique, kAllShifts, kNone } kind;
  long i = 0;

  static ShiftSolution unique(long i) { return {kUnique, i}; }
  static ShiftSolution all() { return {kAllShifts, 0}; }
  static ShiftSolution none() { return {kNone, 0}; }
};

/// Unique(i) iff a is nonconstant and sigma^i(a) = b (at most one such i);
/// AllShifts iff a = b is constant; None otherwise.
ShiftSolution solve_shift(const XRat& a, const XRat& b);

}  // namespace telsum

#endif
