#include "telsum/xrat.hpp"

#include <sstream>
#include <stdexcept>

namespace telsum {

XRat::XRat(const XPoly& num, const XPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = XPoly(Rational(1));
    return;
  }
  XPoly g = xpoly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = xpoly_divexact(num_, g);
    den_ = xpoly_divexact(den_, g);
  }
  Rational lc = den_.leading();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational XRat::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant");
  return num_.coeff(0);
}

XRat XRat::operator-() const {
  XRat r(*this);
  r.num_ = -r.num_;
  return r;
}

XRat operator+(const XRat& a, const XRat& b) {
  return XRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

XRat operator-(const XRat& a, const XRat& b) {
  return XRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

XRat operator*(const XRat& a, const XRat& b) {
  return XRat(a.num_ * b.num_, a.den_ * b.den_);
}

XRat operator/(const XRat& a, const XRat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return XRat(a.num_ * b.den_, a.den_ * b.num_);
}

XRat XRat::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  return XRat(den_, num_);
}

XRat XRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  XRat r(Rational(1));
  XRat base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string XRat::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  std::ostringstream os;
  bool wrap_num = num_.degree() > 0;
  if (wrap_num) os << "(" << num_.str(var) << ")";
  else os << num_.str(var);
  os << "/(" << den_.str(var) << ")";
  return os.str();
}

}  // namespace telsum
