#include "telsum/xpoly.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace telsum {

namespace {
const Rational kZero(0);
}

XPoly XPoly::monomial(int e, const Rational& coeff) {
  XPoly p;
  if (coeff.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(e) + 1, Rational(0));
  p.c_[static_cast<size_t>(e)] = coeff;
  return p;
}

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& XPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rational& XPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

XPoly XPoly::operator-() const {
  XPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return XPoly();
  XPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

XPoly operator*(const XPoly& a, const Rational& s) {
  if (s.is_zero()) return XPoly();
  XPoly r(a);
  for (auto& c : r.c_) c *= s;
  return r;
}

XPoly XPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative polynomial power");
  XPoly r(Rational(1));
  XPoly base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

XPoly XPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

XPoly XPoly::derivative() const {
  XPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
  r.trim();
  return r;
}

Rational XPoly::eval(const Rational& at) const {
  Rational r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
  return r;
}

XPoly XPoly::shifted(long k) const {
  if (k == 0 || is_zero()) return *this;
  // Horner with x replaced by (x + k).
  XPoly xk;
  xk.c_ = {Rational(k), Rational(1)};
  XPoly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * xk + XPoly(c_[i]);
  return r;
}

XPoly XPoly::inflate(int m) const {
  if (m < 1) throw std::domain_error("inflate requires m >= 1");
  if (m == 1 || is_zero()) return *this;
  XPoly r;
  r.c_.assign((c_.size() - 1) * static_cast<size_t>(m) + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(m)] = c_[i];
  r.trim();
  return r;
}

std::pair<Rational, std::vector<mpz_class>> XPoly::integer_primitive() const {
  if (is_zero()) return {Rational(0), {}};
  mpz_class den_lcm(1);
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ints(c_.size());
  mpz_class g(0);
  for (size_t i = 0; i < c_.size(); ++i) {
    ints[i] = c_[i].num() * (den_lcm / c_[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (sgn(ints.back()) < 0) g = -g;
  for (auto& z : ints) z /= g;
  return {Rational(g, den_lcm), ints};
}

std::string XPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<XPoly, XPoly> xpoly_divrem(const XPoly& a, const XPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  XPoly q;
  XPoly r(a);
  const Rational lc_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int e = r.degree() - b.degree();
    Rational c = r.leading() * lc_inv;
    XPoly term = XPoly::monomial(e, c);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

XPoly xpoly_divexact(const XPoly& a, const XPoly& b) {
  auto [q, r] = xpoly_divrem(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

namespace {

using ZPoly = std::vector<mpz_class>;

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zpow(const mpz_class& b, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b over Z.
ZPoly zprem(ZPoly r, const ZPoly& b) {
  const mpz_class& lcb = b.back();
  int db = zdeg(b);
  int e = zdeg(r) - db + 1;
  while (!r.empty() && zdeg(r) >= db) {
    mpz_class lcr = r.back();
    int shift = zdeg(r) - db;
    for (auto& z : r) z *= lcb;
    for (size_t i = 0; i < b.size(); ++i)
      r[i + static_cast<size_t>(shift)] -= lcr * b[i];
    ztrim(r);
    --e;
  }
  if (e > 0) {
    mpz_class m = zpow(lcb, e);
    for (auto& z : r) z *= m;
  }
  return r;
}

// Resultant of integer polynomials of degree >= 1 by the subresultant PRS.
mpz_class int_resultant(ZPoly a, ZPoly b) {
  ztrim(a);
  ztrim(b);
  mpz_class s(1);
  if (zdeg(a) < zdeg(b)) {
    if ((zdeg(a) & 1) && (zdeg(b) & 1)) s = -s;
    std::swap(a, b);
  }
  mpz_class g(1), h(1);
  while (true) {
    int da = zdeg(a), db = zdeg(b);
    int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    ZPoly r = zprem(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    mpz_class divisor = g * zpow(h, delta);
    for (auto& z : r) z /= divisor;
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = zpow(g, delta) / zpow(h, delta - 1);
    if (zdeg(b) == 0) {
      int da2 = zdeg(a);
      return s * zpow(b[0], da2) / zpow(h, da2 - 1);
    }
  }
}

// ---------- modular gcd over Z ----------

uint64_t mulmod_u(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod_u(r, b, m);
    b = mulmod_u(b, b, m);
    e >>= 1;
  }
  return r;
}

// Dense coefficients mod p, no trailing zeros.
using UP = std::vector<uint64_t>;

void utrim(UP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Monic gcd mod p by the Euclidean algorithm in machine words.
UP ugcd(UP a, UP b, uint64_t p) {
  utrim(a);
  utrim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    uint64_t inv = powmod_u(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      uint64_t c = mulmod_u(a.back(), inv, p);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t s = mulmod_u(c, b[i], p);
        uint64_t& t = a[i + shift];
        t = (t >= s) ? t - s : t + p - s;
      }
      utrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  uint64_t inv = powmod_u(a.back(), p - 2, p);
  for (auto& c : a) c = mulmod_u(c, inv, p);
  return a;
}

UP ureduce(const ZPoly& f, uint64_t p) {
  UP r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    uint64_t v = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    r[i] = v;
  }
  utrim(r);
  return r;
}

void make_z_primitive(ZPoly& f) {
  mpz_class g(0);
  for (const auto& z : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (sgn(f.back()) < 0) g = -g;
  for (auto& z : f) z /= g;
}

bool zpoly_divides(const ZPoly& d, const XPoly& f) {
  std::vector<Rational> rc(d.size());
  for (size_t i = 0; i < d.size(); ++i) rc[i] = Rational(d[i]);
  return xpoly_divrem(f, XPoly{std::move(rc)}).second.is_zero();
}

// Gcd of primitive integer polynomials by gcds modulo machine-word primes
// with CRT lifting; the result is verified by exact trial division, so
// unlucky primes only cost extra iterations.
ZPoly zgcd_modular(const ZPoly& a, const ZPoly& b, const XPoly& pq_a, const XPoly& pq_b) {
  mpz_class lc;
  mpz_gcd(lc.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
  mpz_class prime = mpz_class(1) << 62;
  ZPoly cand;
  mpz_class modulus(0);
  size_t best = SIZE_MAX;
  while (true) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    uint64_t p = static_cast<uint64_t>(prime.get_ui());
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0)
      continue;
    UP g = ugcd(ureduce(a, p), ureduce(b, p), p);
    if (g.size() == 1) return {mpz_class(1)};
    // The image degree can only overshoot the true gcd's degree, so keep the
    // smallest degree seen and discard larger (unlucky) images.
    if (g.size() > best) continue;
    // Fix the leading coefficient to gcd(lc(a), lc(b)), which the true gcd's
    // leading coefficient divides.
    uint64_t scale = mpz_fdiv_ui(lc.get_mpz_t(), p);
    for (auto& c : g) c = mulmod_u(c, scale, p);
    bool changed = false;
    if (g.size() < best) {
      best = g.size();
      modulus = prime;
      cand.assign(g.size(), mpz_class(0));
      for (size_t i = 0; i < g.size(); ++i) {
        cand[i] = g[i];
        if (cand[i] * 2 > prime) cand[i] -= prime;
      }
      changed = true;
    } else {
      mpz_class minv;
      mpz_class pz(prime);
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      mpz_class next_mod = modulus * pz;
      for (size_t i = 0; i < g.size(); ++i) {
        mpz_class r = mpz_class(g[i]) - cand[i];
        mpz_class t = (r * minv) % pz;
        if (t < 0) t += pz;
        if (t * 2 > pz) t -= pz;
        if (t != 0) {
          cand[i] += modulus * t;
          changed = true;
        }
      }
      modulus = next_mod;
    }
    if (changed) continue;
    ZPoly prim = cand;
    make_z_primitive(prim);
    if (zpoly_divides(prim, pq_a) && zpoly_divides(prim, pq_b)) return prim;
  }
}

}  // namespace

XPoly xpoly_gcd(const XPoly& p, const XPoly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.degree() == 0 || q.degree() == 0) return XPoly(Rational(1));
  auto [cp, a] = p.integer_primitive();
  auto [cq, b] = q.integer_primitive();
  ZPoly g = zgcd_modular(a, b, p, q);
  std::vector<Rational> rc(g.size());
  for (size_t i = 0; i < g.size(); ++i) rc[i] = Rational(g[i]);
  return XPoly{std::move(rc)}.monic();
}

Rational xpoly_resultant(const XPoly& p, const XPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    if (p.degree() == 0 || q.degree() == 0) return Rational(0);
    return Rational(0);
  }
  if (p.degree() == 0) return p.leading().pow(q.degree());
  if (q.degree() == 0) return q.leading().pow(p.degree());
  auto [cp, ip] = p.integer_primitive();
  auto [cq, iq] = q.integer_primitive();
  mpz_class r = int_resultant(ip, iq);
  // Res(cp*P, cq*Q) = cp^deg(Q) * cq^deg(P) * Res(P, Q).
  Rational scale = cp.pow(q.degree()) * cq.pow(p.degree());
  return scale * Rational(r);
}

XPoly shift_resultant(const XPoly& q, const XPoly& s) {
  if (q.is_zero() || s.is_zero())
    throw std::domain_error("zero polynomial has no resultant");
  int d = q.degree() * s.degree();
  if (d == 0) {
    // Constant resultant.
    return XPoly(xpoly_resultant(q, s));
  }
  // Degree in j of Res_x(q(x), s(x+j)) is at most deg(q)*deg(s).
  std::vector<Rational> xs, ys;
  xs.reserve(static_cast<size_t>(d) + 1);
  ys.reserve(static_cast<size_t>(d) + 1);
  for (long j = 0; j <= d; ++j) {
    xs.push_back(Rational(j));
    ys.push_back(xpoly_resultant(q, s.shifted(j)));
  }
  // Newton interpolation.
  std::vector<Rational> dd(ys);
  for (int level = 1; level <= d; ++level) {
    for (int i = d; i >= level; --i) {
      dd[static_cast<size_t>(i)] =
          (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) /
          (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(i - level)]);
    }
  }
  XPoly result;
  for (int i = d; i >= 0; --i) {
    XPoly lin;
    lin = XPoly::variable() - XPoly(xs[static_cast<size_t>(i)]);
    result = result * lin + XPoly(dd[static_cast<size_t>(i)]);
  }
  return result;
}

}  // namespace telsum
