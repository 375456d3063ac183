#include "telsum/tpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace telsum {

namespace {
const XRat kZeroRat;
}

TPoly TPoly::constant(size_t n, const XRat& c) {
  TPoly p(n);
  if (!c.is_zero()) p.terms_.emplace(Monomial{std::vector<int>(n, 0)}, c);
  return p;
}

TPoly TPoly::variable(size_t n, size_t j) {
  if (j >= n) throw std::out_of_range("variable index");
  TPoly p(n);
  Monomial m{std::vector<int>(n, 0)};
  m.e[j] = 1;
  p.terms_.emplace(m, XRat(1));
  return p;
}

bool TPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

int TPoly::t_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

int TPoly::degree_in(size_t j) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e[j]);
  return d;
}

const XRat& TPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? kZeroRat : it->second;
}

const std::pair<const Monomial, XRat>& TPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

void TPoly::add_term(const Monomial& m, const XRat& c) {
  if (m.e.size() != n_) throw std::logic_error("monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TPoly TPoly::operator-() const {
  TPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  if (a.n_ != b.n_) throw std::logic_error("arity mismatch");
  TPoly r(a);
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) {
  if (a.n_ != b.n_) throw std::logic_error("arity mismatch");
  TPoly r(a);
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.n_ != b.n_) throw std::logic_error("arity mismatch");
  TPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

TPoly operator*(const TPoly& a, const XRat& s) {
  if (s.is_zero()) return TPoly(a.n_);
  TPoly r(a);
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

TPoly TPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative polynomial power");
  TPoly r = constant(n_, XRat(1));
  TPoly base(*this);
  while (e > 0) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

TPoly TPoly::normalized() const {
  if (is_zero()) return *this;
  return *this * leading().second.inverse();
}

TPoly TPoly::substitute(const std::vector<TPoly>& images, long xshift) const {
  if (images.size() != n_) throw std::logic_error("substitution arity mismatch");
  size_t out_n = images.empty() ? n_ : images[0].nvars();
  TPoly r(out_n);
  for (const auto& [m, c] : terms_) {
    TPoly term = TPoly::constant(out_n, sigma_x(c, xshift));
    for (size_t j = 0; j < n_; ++j)
      if (m.e[j] > 0) term = term * images[j].pow(m.e[j]);
    r += term;
  }
  return r;
}

TPoly TPoly::derivative(size_t j) const {
  TPoly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m.e[j] == 0) continue;
    Monomial d = m;
    d.e[j] -= 1;
    r.add_term(d, c * XRat(Rational(m.e[j])));
  }
  return r;
}

std::string TPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    if (!first) os << " + ";
    first = false;
    bool has_mono = m.total() > 0;
    bool needs_paren = cs.find_first_of("+-/") != std::string::npos;
    if (!has_mono) {
      os << (needs_paren ? "(" + cs + ")" : cs);
      continue;
    }
    if (c.is_one()) {
      // coefficient suppressed
    } else {
      os << (needs_paren ? "(" + cs + ")" : cs) << "*";
    }
    bool first_var = true;
    for (size_t j = 0; j < m.e.size(); ++j) {
      if (m.e[j] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "t" << j;
      if (m.e[j] > 1) os << "^" << m.e[j];
    }
  }
  return os.str();
}

// ---------- division and gcd ----------

bool tpoly_divides(const TPoly& b, const TPoly& a, TPoly* q) {
  if (b.is_zero()) return a.is_zero();
  TPoly r(a);
  TPoly quot(a.nvars());
  const auto& ltb = b.leading();
  while (!r.is_zero()) {
    const auto& ltr = r.leading();
    if (!ltb.first.divides(ltr.first)) return false;
    Monomial m = ltr.first;
    for (size_t i = 0; i < m.e.size(); ++i) m.e[i] -= ltb.first.e[i];
    XRat c = ltr.second / ltb.second;
    TPoly term(a.nvars());
    term.add_term(m, c);
    quot += term;
    r -= term * b;
  }
  if (q) *q = quot;
  return true;
}

TPoly tpoly_divexact(const TPoly& a, const TPoly& b) {
  TPoly q(a.nvars());
  if (!tpoly_divides(b, a, &q)) throw std::logic_error("inexact multivariate division");
  return q;
}

namespace {

int highest_var(const TPoly& p) {
  int best = -1;
  for (const auto& [m, c] : p.terms()) {
    for (size_t j = m.e.size(); j-- > 0;) {
      if (m.e[j] > 0) {
        best = std::max(best, static_cast<int>(j));
        break;
      }
    }
  }
  return best;
}

// Dense coefficient list of p viewed as a polynomial in t_j.
std::vector<TPoly> coeffs_in(const TPoly& p, size_t j) {
  std::vector<TPoly> out(static_cast<size_t>(p.degree_in(j)) + 1, TPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial base = m;
    int e = base.e[j];
    base.e[j] = 0;
    out[static_cast<size_t>(e)].add_term(base, c);
  }
  return out;
}

TPoly assemble(const std::vector<TPoly>& cs, size_t n, size_t j) {
  TPoly r(n);
  for (size_t e = 0; e < cs.size(); ++e) {
    for (const auto& [m, c] : cs[e].terms()) {
      Monomial mm = m;
      mm.e[j] += static_cast<int>(e);
      r.add_term(mm, c);
    }
  }
  return r;
}

TPoly content_in(const TPoly& p, size_t j) {
  TPoly g(p.nvars());
  for (const auto& c : coeffs_in(p, j)) g = tpoly_gcd(g, c);
  return g;
}

// Pseudo-remainder of a by b viewed in t_j.
TPoly prem_in(const TPoly& a, const TPoly& b, size_t j) {
  std::vector<TPoly> ra = coeffs_in(a, j);
  std::vector<TPoly> rb = coeffs_in(b, j);
  const TPoly& lcb = rb.back();
  size_t db = rb.size() - 1;
  int e = static_cast<int>(ra.size() - 1) - static_cast<int>(db) + 1;
  while (ra.size() > db && !ra.empty()) {
    TPoly lcr = ra.back();
    size_t shift = ra.size() - 1 - db;
    for (auto& c : ra) c = c * lcb;
    for (size_t i = 0; i < rb.size(); ++i) ra[i + shift] -= lcr * rb[i];
    while (!ra.empty() && ra.back().is_zero()) ra.pop_back();
    --e;
    if (ra.size() <= db) break;
  }
  TPoly r = assemble(ra, a.nvars(), j);
  for (int i = 0; i < e; ++i) r = r * assemble({lcb}, a.nvars(), j);
  return r;
}

}  // namespace

TPoly tpoly_gcd(const TPoly& p, const TPoly& q) {
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  int jp = highest_var(p), jq = highest_var(q);
  int j = std::max(jp, jq);
  if (j < 0) return TPoly::constant(p.nvars(), XRat(1));
  size_t sj = static_cast<size_t>(j);
  if (p.degree_in(sj) == 0) return tpoly_gcd(p, content_in(q, sj));
  if (q.degree_in(sj) == 0) return tpoly_gcd(content_in(p, sj), q);

  TPoly cont_p = content_in(p, sj);
  TPoly cont_q = content_in(q, sj);
  TPoly a = tpoly_divexact(p, cont_p);
  TPoly b = tpoly_divexact(q, cont_q);
  TPoly cont_g = tpoly_gcd(cont_p, cont_q);

  if (a.degree_in(sj) < b.degree_in(sj)) std::swap(a, b);
  while (true) {
    if (b.degree_in(sj) == 0) {
      // Primitive parts are coprime in t_j.
      return cont_g.normalized();
    }
    TPoly r = prem_in(a, b, sj);
    if (r.is_zero()) break;
    r = tpoly_divexact(r, content_in(r, sj));
    a = std::move(b);
    b = std::move(r);
  }
  TPoly pp = tpoly_divexact(b, content_in(b, sj));
  return (cont_g * pp).normalized();
}

bool tpoly_proportional(const TPoly& p, const TPoly& q, XRat* unit) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.term_count() != q.term_count()) return false;
  XRat u;
  bool have_u = false;
  auto ip = p.terms().begin();
  auto iq = q.terms().begin();
  for (; ip != p.terms().end(); ++ip, ++iq) {
    if (!(ip->first == iq->first)) return false;
    XRat ratio = iq->second / ip->second;
    if (!have_u) {
      u = ratio;
      have_u = true;
    } else if (ratio != u) {
      return false;
    }
  }
  if (unit) *unit = u;
  return true;
}

std::vector<std::pair<int, TPoly>> homogeneous_components(const TPoly& p) {
  std::map<int, TPoly> comp;
  for (const auto& [m, c] : p.terms()) {
    auto [it, fresh] = comp.try_emplace(m.total(), TPoly(p.nvars()));
    it->second.add_term(m, c);
  }
  std::vector<std::pair<int, TPoly>> out;
  for (auto& [d, q] : comp) out.emplace_back(d, std::move(q));
  return out;
}

// ---------- TRat ----------

TRat::TRat(const TPoly& num, const TPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = TPoly::constant(num_.nvars(), XRat(1));
    return;
  }
  TPoly g = tpoly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = tpoly_divexact(num_, g);
    den_ = tpoly_divexact(den_, g);
  }
  XRat lc = den_.leading().second;
  if (!lc.is_one()) {
    XRat inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

TRat TRat::operator-() const {
  TRat r(*this);
  r.num_ = -r.num_;
  return r;
}

TRat operator+(const TRat& a, const TRat& b) {
  return TRat(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

TRat operator-(const TRat& a, const TRat& b) {
  return TRat(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

TRat operator*(const TRat& a, const TRat& b) {
  return TRat(a.num() * b.num(), a.den() * b.den());
}

TRat operator/(const TRat& a, const TRat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return TRat(a.num() * b.den(), a.den() * b.num());
}

std::string TRat::str() const {
  if (den_.is_constant()) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  std::string out;
  if (num_.term_count() > 1) out = "(" + n + ")";
  else out = n;
  out += "/";
  if (den_.term_count() > 1 || den_.leading().first.total() > 0) out += "(" + d + ")";
  else out += d;
  return out;
}

}  // namespace telsum
