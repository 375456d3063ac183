#ifndef TELSUM_XPOLY_HPP
#define TELSUM_XPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "telsum/rational.hpp"

namespace telsum {

/// Univariate polynomial over Q, dense coefficient vector indexed by degree.
/// The zero polynomial has an empty coefficient vector; degree() reports
/// kNegInfDegree for it.
class XPoly {
 public:
  static constexpr int kNegInfDegree = -1;

  XPoly() = default;
  XPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
  XPoly(long c) : XPoly(Rational(c)) {}
  explicit XPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static XPoly variable() { return monomial(1, Rational(1)); }
  static XPoly monomial(int e, const Rational& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  /// Coefficient of x^i; zero outside the stored range.
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const Rational& trailing() const { return coeff(0); }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly& operator*=(const XPoly& o) { return *this = *this * o; }
  friend XPoly operator*(const XPoly& a, const Rational& s);
  friend XPoly operator*(const Rational& s, const XPoly& a) { return a * s; }

  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

  XPoly pow(int e) const;
  XPoly monic() const;
  XPoly derivative() const;
  Rational eval(const Rational& at) const;

  /// p(x + k) for integer k.
  XPoly shifted(long k) const;
  /// p(x^m); m >= 1.
  XPoly inflate(int m) const;

  /// Rational content (gcd of numerators over lcm of denominators, signed by
  /// the leading coefficient); the second member is the integer primitive
  /// part, so content * primitive == *this.
  std::pair<Rational, std::vector<mpz_class>> integer_primitive() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of field division; q.den != 0 required.
std::pair<XPoly, XPoly> xpoly_divrem(const XPoly& a, const XPoly& b);
/// Exact division; throws if the remainder is nonzero.
XPoly xpoly_divexact(const XPoly& a, const XPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
XPoly xpoly_gcd(const XPoly& p, const XPoly& q);

/// Res_x(p, q) by the subresultant PRS over Z.
Rational xpoly_resultant(const XPoly& p, const XPoly& q);

/// Res_x(q(x), s(x + j)) as a polynomial in the fresh variable j, computed
/// by evaluation at integer j and interpolation.
XPoly shift_resultant(const XPoly& q, const XPoly& s);

}  // namespace telsum

#endif
