#include "telsum/xfactor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace telsum {
namespace {

// ---------- arithmetic in (Z/p)[x], p an odd prime ----------

using ZP = std::vector<mpz_class>;  // coefficients in [0, p)

struct Mod {
  mpz_class p;

  mpz_class reduce(const mpz_class& a) const {
    mpz_class r = a % p;
    if (sgn(r) < 0) r += p;
    return r;
  }

  mpz_class inv(const mpz_class& a) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::logic_error("not invertible mod p");
    return r;
  }

  void trim(ZP& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  ZP from_int(const std::vector<mpz_class>& f) const {
    ZP r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = reduce(f[i]);
    trim(r);
    return r;
  }

  ZP mul(const ZP& a, const ZP& b) const {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c = reduce(c);
    trim(r);
    return r;
  }

  ZP sub(ZP a, const ZP& b) const {
    if (b.size() > a.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] = reduce(a[i] - b[i]);
    trim(a);
    return a;
  }

  ZP scale(ZP a, const mpz_class& s) const {
    for (auto& c : a) c = reduce(c * s);
    trim(a);
    return a;
  }

  ZP monic(const ZP& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }

  // Remainder of a by monic-ish b.
  ZP rem(ZP a, const ZP& b) const {
    mpz_class lci = inv(b.back());
    while (a.size() >= b.size()) {
      mpz_class q = reduce(a.back() * lci);
      size_t shift = a.size() - b.size();
      if (q != 0)
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] = reduce(a[i + shift] - q * b[i]);
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    return a;
  }

  ZP quot(ZP a, const ZP& b) const {
    mpz_class lci = inv(b.back());
    ZP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (a.size() >= b.size()) {
      mpz_class c = reduce(a.back() * lci);
      size_t shift = a.size() - b.size();
      q[shift] = c;
      if (c != 0)
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] = reduce(a[i + shift] - c * b[i]);
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    trim(q);
    return q;
  }

  ZP gcd(ZP a, ZP b) const {
    while (!b.empty()) {
      ZP r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  ZP mulmod(const ZP& a, const ZP& b, const ZP& m) const { return rem(mul(a, b), m); }

  ZP powmod(ZP base, mpz_class e, const ZP& m) const {
    ZP r{mpz_class(1)};
    base = rem(std::move(base), m);
    while (sgn(e) > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }

  ZP derivative(const ZP& a) const {
    if (a.size() <= 1) return {};
    ZP r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = reduce(a[i] * mpz_class(static_cast<long>(i)));
    trim(r);
    return r;
  }
};

struct Rng {
  gmp_randstate_t st;
  Rng() {
    gmp_randinit_default(st);
    gmp_randseed_ui(st, 0x5eed1234u);
  }
  ~Rng() { gmp_randclear(st); }
  mpz_class below(const mpz_class& p) {
    mpz_class r;
    mpz_urandomm(r.get_mpz_t(), st, p.get_mpz_t());
    return r;
  }
};

// Equal-degree splitting: f monic squarefree mod p, product of irreducibles
// of degree d. Appends them to out.
void equal_degree(const Mod& m, Rng& rng, const ZP& f, int d, std::vector<ZP>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  mpz_class pd;
  mpz_pow_ui(pd.get_mpz_t(), m.p.get_mpz_t(), static_cast<unsigned long>(d));
  mpz_class e = (pd - 1) / 2;
  while (true) {
    ZP a(static_cast<size_t>(n), mpz_class(0));
    for (auto& c : a) c = rng.below(m.p);
    m.trim(a);
    if (a.size() <= 1) continue;
    ZP b = m.powmod(a, e, f);
    if (b.empty()) continue;
    b[0] = m.reduce(b[0] - 1);
    m.trim(b);
    ZP g = m.gcd(b, f);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(m, rng, g, d, out);
      equal_degree(m, rng, m.monic(m.quot(f, g)), d, out);
      return;
    }
  }
}

// Full factorization of a monic squarefree f mod p.
std::vector<ZP> cz_factor(const Mod& m, const ZP& f0) {
  Rng rng;
  std::vector<ZP> out;
  ZP f = f0;
  ZP h{mpz_class(0), mpz_class(1)};  // x
  int d = 0;
  while (static_cast<int>(f.size()) - 1 > 0) {
    ++d;
    if (2 * d > static_cast<int>(f.size()) - 1) {
      out.push_back(f);
      break;
    }
    h = m.powmod(h, m.p, f);
    ZP hx = h;
    // h - x
    if (hx.size() < 2) hx.resize(2, mpz_class(0));
    hx[1] = m.reduce(hx[1] - 1);
    m.trim(hx);
    ZP g = hx.empty() ? f : m.gcd(hx, f);
    if (g.size() > 1) {
      equal_degree(m, rng, g, d, out);
      f = m.monic(m.quot(f, g));
      h = m.rem(h, f);
    }
  }
  return out;
}

mpz_class coeff_bound(const std::vector<mpz_class>& f) {
  // 2^(d+1) * ||f||_1 * |lc| covers any integer factor's coefficients.
  mpz_class norm(0);
  for (const auto& c : f) norm += abs(c);
  mpz_class b = norm * abs(f.back());
  b <<= f.size();
  return b;
}

mpz_class good_prime(const std::vector<mpz_class>& f, const mpz_class& lower) {
  Mod m;
  mpz_class p = lower;
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (f.back() % p == 0) continue;
    m.p = p;
    ZP fp = m.from_int(f);
    if (fp.size() != f.size()) continue;
    ZP d = m.derivative(fp);
    if (d.empty()) continue;
    if (m.gcd(fp, d).size() == 1) return p;
  }
}

// Symmetric representative in (-p/2, p/2].
mpz_class symlift(const mpz_class& a, const mpz_class& p) {
  if (a * 2 > p) return a - p;
  return a;
}

XPoly from_ints(const std::vector<mpz_class>& f) {
  std::vector<Rational> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Rational(f[i]);
  return XPoly(std::move(c));
}

// Trial division of integer polynomials; returns quotient if exact.
bool zdivide(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
             std::vector<mpz_class>& q) {
  std::vector<mpz_class> r = a;
  auto trim = [](std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(r);
  if (b.empty()) return false;
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpz_class(0));
  while (r.size() >= b.size()) {
    mpz_class c = r.back() / b.back();
    if (c * b.back() != r.back()) return false;
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
    if (r.empty()) break;
    if (r.size() > shift + b.size() - 1) return false;  // top did not cancel
  }
  return r.empty();
}

std::vector<mpz_class> zprimitive(std::vector<mpz_class> f) {
  mpz_class g(0);
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return f;
  if (sgn(f.back()) < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

// Advance idx to the next k-combination out of {0,...,n-1}; false when done.
bool next_comb(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// ---------- fast arithmetic in (Z/p)[x] for word-sized primes ----------

using SP = std::vector<uint64_t>;

struct SMod {
  uint64_t p;

  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t powi(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return powi(a, p - 2); }

  static void trim(SP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  SP mulp(const SP& a, const SP& b) const {
    if (a.empty() || b.empty()) return {};
    SP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  SP subp(SP a, const SP& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  SP monic(SP a) const {
    if (a.empty()) return a;
    uint64_t s = inv(a.back());
    for (auto& c : a) c = mul(c, s);
    return a;
  }
  SP rem(SP a, const SP& b) const {
    uint64_t lci = inv(b.back());
    while (a.size() >= b.size()) {
      uint64_t q = mul(a.back(), lci);
      size_t shift = a.size() - b.size();
      if (q)
        for (size_t i = 0; i + 1 < b.size(); ++i)
          a[i + shift] = sub(a[i + shift], mul(q, b[i]));
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    return a;
  }
  SP quot(SP a, const SP& b) const {
    uint64_t lci = inv(b.back());
    SP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
      uint64_t c = mul(a.back(), lci);
      size_t shift = a.size() - b.size();
      q[shift] = c;
      if (c)
        for (size_t i = 0; i + 1 < b.size(); ++i)
          a[i + shift] = sub(a[i + shift], mul(c, b[i]));
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    trim(q);
    return q;
  }
  SP gcdp(SP a, SP b) const {
    while (!b.empty()) {
      SP r = rem(std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }
  SP mulmod(const SP& a, const SP& b, const SP& m) const { return rem(mulp(a, b), m); }
  // base^e mod m where e is given in base-p digits of a multiprecision
  // exponent; here e fits the pattern e = (p^d - 1) / 2 or e = p, so we
  // provide both a word version and a p-power version.
  SP powmod(SP base, uint64_t e, const SP& m) const {
    SP r{1};
    base = rem(std::move(base), m);
    while (e) {
      if (e & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }
  SP powmod_big(SP base, mpz_class e, const SP& m) const {
    SP r{1};
    base = rem(std::move(base), m);
    while (sgn(e) > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }
  SP derivative(const SP& a) const {
    if (a.size() <= 1) return {};
    SP r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }
};

void equal_degree_small(const SMod& m, std::mt19937_64& rng, const SP& f, int d,
                        std::vector<SP>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  mpz_class pd;
  mpz_class pz(static_cast<unsigned long>(m.p));
  mpz_pow_ui(pd.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
  mpz_class e = (pd - 1) / 2;
  while (true) {
    SP a(static_cast<size_t>(n), 0);
    for (auto& c : a) c = rng() % m.p;
    SMod::trim(a);
    if (a.size() <= 1) continue;
    SP b = m.powmod_big(a, e, f);
    if (b.empty()) continue;
    b[0] = m.sub(b[0], 1);
    SMod::trim(b);
    SP g = m.gcdp(b, f);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree_small(m, rng, g, d, out);
      equal_degree_small(m, rng, m.monic(m.quot(f, g)), d, out);
      return;
    }
  }
}

// Full factorization of a monic squarefree f mod a word-sized prime.
std::vector<SP> cz_factor_small(const SMod& m, const SP& f0) {
  std::mt19937_64 rng(0x5eedcafe1234ull);
  std::vector<SP> out;
  SP f = f0;
  SP h{0, 1};  // x
  int d = 0;
  while (static_cast<int>(f.size()) - 1 > 0) {
    ++d;
    if (2 * d > static_cast<int>(f.size()) - 1) {
      out.push_back(f);
      break;
    }
    h = m.powmod(h, m.p, f);
    SP hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = m.sub(hx[1], 1);
    SMod::trim(hx);
    SP g = hx.empty() ? f : m.gcdp(hx, f);
    if (g.size() > 1) {
      equal_degree_small(m, rng, g, d, out);
      f = m.monic(m.quot(f, g));
      h = m.rem(h, f);
    }
  }
  return out;
}

// Extended Euclid mod a prime: s*g + t*h = 1 for coprime monic g, h.
void eea_mod(const Mod& m, const ZP& g, const ZP& h, ZP& s, ZP& t) {
  ZP r0 = g, r1 = h;
  ZP s0{mpz_class(1)}, s1{};
  ZP t0{}, t1{mpz_class(1)};
  while (!r1.empty()) {
    ZP q = m.quot(r0, r1);
    ZP r2 = m.sub(r0, m.mul(q, r1));
    ZP s2 = m.sub(s0, m.mul(q, s1));
    ZP t2 = m.sub(t0, m.mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("factors not coprime mod p");
  mpz_class inv = m.inv(r0[0]);
  s = m.scale(std::move(s0), inv);
  t = m.scale(std::move(t0), inv);
}

// Quadratic Hensel step (Zassenhaus): from f = g*h and s*g + t*h = 1 valid
// at the previous precision, produce g, h, s, t with the same relations
// valid mod the modulus carried by `mod`. f, g, h monic; deg s < deg h,
// deg t < deg g are maintained.
void hensel_step(const Mod& mod, const ZP& f, ZP& g, ZP& h, ZP& s, ZP& t) {
  auto add = [&mod](const ZP& a, const ZP& b) { return mod.sub(a, mod.sub(ZP{}, b)); };
  ZP e = mod.sub(f, mod.mul(g, h));
  ZP se = mod.mul(s, e);
  ZP q = mod.quot(se, h);
  ZP r = mod.sub(se, mod.mul(q, h));
  ZP g1 = add(g, add(mod.mul(t, e), mod.mul(q, g)));
  ZP h1 = add(h, r);
  ZP b = mod.sub(add(mod.mul(s, g1), mod.mul(t, h1)), ZP{mpz_class(1)});
  ZP sb = mod.mul(s, b);
  ZP c = mod.quot(sb, h1);
  ZP d = mod.sub(sb, mod.mul(c, h1));
  s = mod.sub(s, d);
  t = mod.sub(mod.sub(t, mod.mul(t, b)), mod.mul(c, g1));
  g = std::move(g1);
  h = std::move(h1);
}

// Lift the factorization f = prod(fs) (monic, mod p) to monic factors mod M,
// where M is a power of p and f is monic mod M.
std::vector<ZP> hensel_lift_list(const mpz_class& p, const mpz_class& M, const ZP& f,
                                 const std::vector<ZP>& fs) {
  if (fs.size() == 1) return {f};
  size_t half = fs.size() / 2;
  Mod mp{p};
  ZP g0{mpz_class(1)}, h0{mpz_class(1)};
  for (size_t i = 0; i < half; ++i) g0 = mp.mul(g0, fs[i]);
  for (size_t i = half; i < fs.size(); ++i) h0 = mp.mul(h0, fs[i]);
  ZP s, t;
  eea_mod(mp, g0, h0, s, t);
  ZP g = g0, h = h0;
  mpz_class m = p;
  while (m < M) {
    m = m * m;
    if (m > M) m = M;  // M is a power of p >= any intermediate square
    Mod mm{m};
    hensel_step(mm, mm.from_int(f), g, h, s, t);
  }
  std::vector<ZP> left(fs.begin(), fs.begin() + static_cast<long>(half));
  std::vector<ZP> right(fs.begin() + static_cast<long>(half), fs.end());
  std::vector<ZP> out = hensel_lift_list(p, M, g, left);
  std::vector<ZP> rest = hensel_lift_list(p, M, h, right);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// Factor a primitive squarefree integer polynomial (degree >= 1) into monic
// irreducible factors over Q: small-prime Cantor-Zassenhaus followed by
// quadratic Hensel lifting past the factor coefficient bound, then subset
// recombination.
std::vector<XPoly> factor_squarefree_z(std::vector<mpz_class> f) {
  std::vector<XPoly> result;
  if (f.size() == 2) {
    result.push_back(from_ints(f).monic());
    return result;
  }
  mpz_class p = good_prime(f, mpz_class(4000));
  SMod sm{p.get_ui()};
  SP fp(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    fp[i] = mpz_fdiv_ui(f[i].get_mpz_t(), sm.p);
  SMod::trim(fp);
  std::vector<ZP> modular_p;
  for (const SP& g : cz_factor_small(sm, sm.monic(fp))) {
    ZP z(g.size());
    for (size_t i = 0; i < g.size(); ++i) z[i] = mpz_class(static_cast<unsigned long>(g[i]));
    modular_p.push_back(std::move(z));
  }

  // Lift to M = p^(2^k) beyond twice the coefficient bound, so a symmetric
  // lift of any true factor is exact.
  mpz_class target = 2 * coeff_bound(f) + 1;
  mpz_class M = p;
  while (M < target) M = M * M;
  Mod m{M};
  std::vector<ZP> modular =
      modular_p.size() == 1
          ? std::vector<ZP>{m.monic(m.from_int(f))}
          : hensel_lift_list(p, M, m.monic(m.from_int(f)), modular_p);

  while (f.size() > 1 && modular.size() > 1) {
    bool found = false;
    for (size_t card = 1; !found && 2 * card <= modular.size(); ++card) {
      std::vector<size_t> idx(card);
      for (size_t i = 0; i < card; ++i) idx[i] = i;
      do {
        ZP cand{m.reduce(f.back())};
        for (size_t i : idx) cand = m.mul(cand, modular[i]);
        std::vector<mpz_class> zc(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) zc[i] = symlift(cand[i], m.p);
        zc = zprimitive(std::move(zc));
        std::vector<mpz_class> q;
        if (zdivide(f, zc, q)) {
          result.push_back(from_ints(zc).monic());
          for (size_t i = idx.size(); i-- > 0;)
            modular.erase(modular.begin() + static_cast<long>(idx[i]));
          f = zprimitive(std::move(q));
          found = true;
          break;
        }
      } while (next_comb(idx, modular.size()));
    }
    if (!found) break;
  }
  if (f.size() > 1) result.push_back(from_ints(f).monic());
  return result;
}

}  // namespace

std::vector<Rational> rational_roots(const XPoly& p) {
  if (p.is_zero()) throw std::domain_error("root extraction of zero polynomial");
  std::vector<Rational> roots;
  XPoly q = p;
  // Strip x^k.
  int low = 0;
  while (q.coeff(low).is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    std::vector<Rational> c;
    for (int i = low; i <= q.degree(); ++i) c.push_back(q.coeff(i));
    q = XPoly(std::move(c));
  }
  if (q.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Squarefree part.
  XPoly sf = xpoly_divexact(q, xpoly_gcd(q, q.derivative()));
  auto [cont, f] = sf.integer_primitive();
  (void)cont;
  if (f.size() == 2) {
    roots.push_back(Rational(-f[0], f[1]));
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Roots mod a prime exceeding twice the Cauchy-style bound
  // |root| <= (|a0| + ... + |a_{d-1}|) / |lc| + 1, so a symmetric lift is the
  // unique integer candidate; rational roots r = n/d have |n| <= |a0|-bound,
  // |d| <= |lc|, handled by searching roots of the reversed/levelled poly.
  // We find rational roots as x = n/den where den | lc: substitute x = y/lc
  // and clear: integer roots y of lc^(d-1) * f(y/lc).
  const mpz_class& lc = f.back();
  int d = static_cast<int>(f.size()) - 1;
  std::vector<mpz_class> g(f.size());
  // g(y) = lc^(d-1) f(y/lc): coefficient of y^i is f_i * lc^(d-1-i).
  for (int i = 0; i <= d; ++i) {
    mpz_class s;
    mpz_pow_ui(s.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(d - 1 >= i ? d - 1 - i : 0));
    g[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] * s;
  }
  if (d >= 1) g[static_cast<size_t>(d)] = 1 * f.back() / lc;  // = 1 when i = d
  g = zprimitive(std::move(g));
  mpz_class bound(1);
  {
    mpz_class s(0);
    for (size_t i = 0; i + 1 < g.size(); ++i) s += abs(g[i]);
    mpz_class q2;
    mpz_cdiv_q(q2.get_mpz_t(), s.get_mpz_t(), g.back().get_mpz_t());
    bound += abs(q2);
  }
  Mod m;
  mpz_class p2 = 2 * bound + 3;
  while (true) {
    mpz_nextprime(p2.get_mpz_t(), p2.get_mpz_t());
    if (g.back() % p2 != 0) break;
  }
  m.p = p2;
  ZP gp = m.monic(m.from_int(g));
  // gcd(x^p - x, g) collects the distinct roots mod p.
  ZP xp = m.powmod(ZP{mpz_class(0), mpz_class(1)}, m.p, gp);
  if (xp.size() < 2) xp.resize(2, mpz_class(0));
  xp[1] = m.reduce(xp[1] - 1);
  m.trim(xp);
  ZP lin = xp.empty() ? gp : m.gcd(xp, gp);
  std::vector<ZP> linear;
  if (lin.size() == 2) {
    linear.push_back(lin);
  } else if (lin.size() > 2) {
    Rng rng;
    equal_degree(m, rng, lin, 1, linear);
  }
  XPoly gq = from_ints(g);
  for (const auto& l : linear) {
    // root = -l[0] mod p
    mpz_class r = symlift(m.reduce(-l[0]), m.p);
    if (gq.eval(Rational(r)).is_zero()) {
      Rational root = Rational(r) / Rational(lc);
      if (p.eval(root).is_zero()) roots.push_back(root);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<long> integer_roots(const XPoly& p) {
  std::vector<long> out;
  for (const auto& r : rational_roots(p)) {
    if (!r.is_integer()) continue;
    if (!mpz_fits_slong_p(r.num().get_mpz_t()))
      throw std::overflow_error("integer root does not fit in long");
    out.push_back(r.num().get_si());
  }
  return out;
}

XFactorization factor_x(const XPoly& p) {
  if (p.is_zero()) throw std::domain_error("factorization of zero polynomial");
  XFactorization out;
  out.content = p.leading();
  if (p.is_constant()) return out;
  XPoly q = p.monic();

  // Yun's squarefree decomposition.
  std::map<int, XPoly> squarefree;  // multiplicity -> product of its factors
  {
    XPoly d = q.derivative();
    XPoly a = xpoly_gcd(q, d);
    XPoly b = xpoly_divexact(q, a);
    XPoly c = xpoly_divexact(d, a);
    int i = 1;
    while (b.degree() > 0) {
      XPoly w = c - b.derivative();
      XPoly g = xpoly_gcd(b, w);
      if (g.degree() > 0) squarefree[i] = g;
      b = xpoly_divexact(b, g);
      c = xpoly_divexact(w, g);
      ++i;
    }
  }

  for (const auto& [mult, part] : squarefree) {
    auto [cont, ints] = part.integer_primitive();
    (void)cont;
    for (auto& irr : factor_squarefree_z(ints)) out.factors.emplace_back(irr, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
              for (int i = a.first.degree(); i >= 0; --i) {
                if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
              }
              return false;
            });
  return out;
}

}  // namespace telsum
