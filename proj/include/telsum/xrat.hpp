#ifndef TELSUM_XRAT_HPP
#define TELSUM_XRAT_HPP

#include <string>

#include "telsum/xpoly.hpp"

namespace telsum {

/// Reduced rational function in x over Q: gcd(num, den) = 1, den monic.
class XRat {
 public:
  XRat() : num_(), den_(Rational(1)) {}
  XRat(const Rational& c) : num_(c), den_(Rational(1)) {}
  XRat(long c) : num_(Rational(c)), den_(Rational(1)) {}
  XRat(const XPoly& p) : num_(p), den_(Rational(1)) {}
  XRat(const XPoly& num, const XPoly& den);

  static XRat variable() { return XRat(XPoly::variable()); }

  const XPoly& num() const { return num_; }
  const XPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Constant value; requires is_constant().
  Rational constant_value() const;

  XRat operator-() const;
  friend XRat operator+(const XRat& a, const XRat& b);
  friend XRat operator-(const XRat& a, const XRat& b);
  friend XRat operator*(const XRat& a, const XRat& b);
  friend XRat operator/(const XRat& a, const XRat& b);
  XRat& operator+=(const XRat& o) { return *this = *this + o; }
  XRat& operator-=(const XRat& o) { return *this = *this - o; }
  XRat& operator*=(const XRat& o) { return *this = *this * o; }
  XRat& operator/=(const XRat& o) { return *this = *this / o; }

  friend bool operator==(const XRat& a, const XRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const XRat& a, const XRat& b) { return !(a == b); }

  XRat inverse() const;
  XRat pow(int e) const;

  /// Substitute x -> x + k.
  XRat shifted(long k) const { return XRat(num_.shifted(k), den_.shifted(k)); }

  std::string str(const std::string& var = "x") const;

 private:
  XPoly num_, den_;
};

/// sigma^k on C(x): substitutes x -> x + k.
inline XRat sigma_x(const XRat& r, long k) { return r.shifted(k); }
inline XPoly sigma_x(const XPoly& p, long k) { return p.shifted(k); }

}  // namespace telsum

#endif
