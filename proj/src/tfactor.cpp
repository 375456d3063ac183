#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "telsum/tpoly.hpp"
#include "telsum/xfactor.hpp"

namespace telsum {

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

TPoly content_in(const TPoly& p, size_t j) {
  std::vector<TPoly> by_deg(static_cast<size_t>(p.degree_in(j)) + 1, TPoly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial base = m;
    int e = base.e[j];
    base.e[j] = 0;
    by_deg[static_cast<size_t>(e)].add_term(base, c);
  }
  TPoly g(p.nvars());
  for (const auto& c : by_deg) g = tpoly_gcd(g, c);
  return g;
}

void merge_part(std::map<int, TPoly>& out, const TPoly& part, int mult) {
  if (part.is_constant()) return;
  auto [it, fresh] = out.try_emplace(mult, part.normalized());
  if (!fresh) it->second = (it->second * part).normalized();
}

void squarefree_rec(const TPoly& p, std::map<int, TPoly>& out) {
  if (p.is_constant()) return;
  size_t j = static_cast<size_t>(highest_var(p));
  TPoly cont = content_in(p, j);
  TPoly f = tpoly_divexact(p, cont).normalized();
  squarefree_rec(cont, out);

  // Yun's algorithm in t_j on the primitive part.
  TPoly fp = f.derivative(j);
  TPoly g = tpoly_gcd(f, fp);
  TPoly w = tpoly_divexact(f, g);
  TPoly z = tpoly_divexact(fp, g) - w.derivative(j);
  int i = 1;
  while (!w.is_constant()) {
    TPoly a = tpoly_gcd(w, z);
    merge_part(out, a, i);
    w = tpoly_divexact(w, a);
    z = tpoly_divexact(z, a) - w.derivative(j);
    ++i;
  }
}

}  // namespace

std::vector<std::pair<TPoly, int>> squarefree_t(const TPoly& p) {
  std::vector<std::pair<TPoly, int>> out;
  if (p.is_zero() || p.is_constant()) return out;
  std::map<int, TPoly> parts;
  squarefree_rec(p, parts);
  for (auto& [mult, part] : parts) out.emplace_back(std::move(part), mult);
  return out;
}

namespace {

// ---- Kronecker substitution machinery ----

struct KroneckerMap {
  std::vector<size_t> vars;    // t-variable indices in substitution order
  std::vector<long> radix;     // per-slot radix: x first, then vars
  std::vector<long> weight;    // y-exponent weight per slot
};

// p must have XPoly coefficients (den == 1). Builds the mixed-radix map and
// the univariate image; throws DegreeTooLarge past the cap.
XPoly kronecker_image(const TPoly& p, KroneckerMap& km, int degree_cap) {
  long dx = 0;
  for (const auto& [m, c] : p.terms()) dx = std::max<long>(dx, c.num().degree());
  km.vars.clear();
  km.radix.clear();
  km.weight.clear();
  km.radix.push_back(dx + 1);
  for (size_t j = 0; j < p.nvars(); ++j) {
    int d = p.degree_in(j);
    if (d > 0) {
      km.vars.push_back(j);
      km.radix.push_back(d + 1);
    }
  }
  long w = 1;
  for (long r : km.radix) {
    km.weight.push_back(w);
    if (w > degree_cap + 1) throw DegreeTooLarge("factorization degree cap exceeded");
    w *= r;
  }
  if (w - 1 > degree_cap) throw DegreeTooLarge("factorization degree cap exceeded");

  std::vector<Rational> img(static_cast<size_t>(w), Rational(0));
  for (const auto& [m, c] : p.terms()) {
    long base = 0;
    for (size_t s = 0; s < km.vars.size(); ++s) base += m.e[km.vars[s]] * km.weight[s + 1];
    const XPoly& cx = c.num();
    for (int i = 0; i <= cx.degree(); ++i)
      img[static_cast<size_t>(base + i)] += cx.coeff(i);
  }
  return XPoly(std::move(img));
}

TPoly inverse_kronecker(const XPoly& u, size_t n, const KroneckerMap& km) {
  TPoly out(n);
  for (int e = 0; e <= u.degree(); ++e) {
    if (u.coeff(e).is_zero()) continue;
    long rem = e;
    long ex = rem % km.radix[0];
    rem /= km.radix[0];
    Monomial m{std::vector<int>(n, 0)};
    for (size_t s = 0; s < km.vars.size(); ++s) {
      m.e[km.vars[s]] = static_cast<int>(rem % km.radix[s + 1]);
      rem /= km.radix[s + 1];
    }
    out.add_term(m, XRat(XPoly::monomial(static_cast<int>(ex), u.coeff(e))));
  }
  return out;
}

// Clears x-denominators and pulls out the x-content, so every coefficient of
// the result is an XPoly and their gcd is 1. The removed factor goes to unit.
TPoly x_primitive(const TPoly& p, XRat& unit) {
  XPoly den_lcm(Rational(1));
  for (const auto& [m, c] : p.terms()) {
    XPoly g = xpoly_gcd(den_lcm, c.den());
    den_lcm = xpoly_divexact(den_lcm * c.den(), g);
  }
  TPoly scaled = p * XRat(den_lcm);
  XPoly cont;
  for (const auto& [m, c] : scaled.terms()) cont = xpoly_gcd(cont, c.num());
  TPoly out = scaled * XRat(cont).inverse();
  unit *= XRat(cont, den_lcm);
  return out;
}

// Evaluates every variable except t_{keep} at a fixed rational point,
// mapping p to a univariate polynomial in t_{keep}. Returns nullopt when an
// x-denominator vanishes at the point.
std::optional<std::vector<Rational>> eval_except(const TPoly& p, size_t keep,
                                                 const Rational& x0,
                                                 const std::vector<Rational>& tau) {
  std::vector<Rational> out;
  for (const auto& [m, c] : p.terms()) {
    Rational dv = c.den().eval(x0);
    if (dv.is_zero()) return std::nullopt;
    Rational v = c.num().eval(x0) / dv;
    for (size_t j = 0; j < m.e.size(); ++j)
      if (j != keep && m.e[j] > 0) v = v * tau[j].pow(m.e[j]);
    size_t d = static_cast<size_t>(m.e[keep]);
    if (out.size() <= d) out.resize(d + 1, Rational(0));
    out[d] += v;
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// Same evaluation applied directly to a univariate Kronecker image, avoiding
// construction of the multivariate candidate.
std::vector<Rational> eval_image(const XPoly& u, const KroneckerMap& km, size_t keep,
                                 const Rational& x0, const std::vector<Rational>& tau) {
  std::vector<Rational> xp(static_cast<size_t>(km.radix[0]), Rational(1));
  for (size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * x0;
  std::vector<std::vector<Rational>> tp(km.vars.size());
  for (size_t s = 0; s < km.vars.size(); ++s) {
    tp[s].assign(static_cast<size_t>(km.radix[s + 1]), Rational(1));
    for (size_t i = 1; i < tp[s].size(); ++i) tp[s][i] = tp[s][i - 1] * tau[km.vars[s]];
  }
  std::vector<Rational> out;
  for (int e = 0; e <= u.degree(); ++e) {
    if (u.coeff(e).is_zero()) continue;
    long rem = e;
    long ex = rem % km.radix[0];
    rem /= km.radix[0];
    Rational v = u.coeff(e) * xp[static_cast<size_t>(ex)];
    size_t dkeep = 0;
    for (size_t s = 0; s < km.vars.size(); ++s) {
      long digit = rem % km.radix[s + 1];
      rem /= km.radix[s + 1];
      if (km.vars[s] == keep)
        dkeep = static_cast<size_t>(digit);
      else if (digit > 0)
        v = v * tp[s][static_cast<size_t>(digit)];
    }
    if (out.size() <= dkeep) out.resize(dkeep + 1, Rational(0));
    out[dkeep] += v;
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// Does b divide a exactly in Q[t]?
bool uni_divides(std::vector<Rational> a, const std::vector<Rational>& b) {
  if (a.size() < b.size()) return false;
  Rational lead = b.back().inverse();
  while (a.size() >= b.size()) {
    Rational q = a.back() * lead;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    if (a.empty()) return true;
  }
  return a.empty();
}

// Factors a squarefree, x-primitive polynomial with positive t-degree into
// irreducibles over C(x) via Kronecker substitution.
std::vector<TPoly> factor_squarefree(const TPoly& p, int degree_cap, XRat& unit) {
  KroneckerMap km;
  XPoly img = kronecker_image(p, km, degree_cap);
  XFactorization uf = factor_x(img);

  // Distinct image factors with remaining multiplicities; candidates are
  // multisets drawn from these, so repeated factors are not re-tried.
  std::vector<std::pair<XPoly, int>> pool(uf.factors.begin(), uf.factors.end());

  // Cheap pre-filter for candidate divisors: evaluate everything except the
  // heaviest t-variable at a fixed point and test divisibility in Q[t]. A
  // true divisor always passes (the evaluation is a ring homomorphism and
  // x-content evaluates to a scalar), so rejecting here is safe.
  size_t jstar = 0;
  for (size_t j = 0; j < p.nvars(); ++j)
    if (p.degree_in(j) > p.degree_in(jstar)) jstar = j;
  const Rational x0(2);
  const long small_points[] = {3, 5, 7, 11, 13, 17, 19, 23};
  std::vector<Rational> tau;
  for (size_t j = 0; j < p.nvars(); ++j) tau.emplace_back(small_points[j % 8] + 24 * static_cast<long>(j / 8));

  std::vector<TPoly> found;
  TPoly rem = p;
  std::optional<std::vector<Rational>> rem_eval = eval_except(rem, jstar, x0, tau);

  // Tries one multiset of pool factors (exponent vector e); on success the
  // pool, remainder, and evaluation cache are updated.
  auto try_candidate = [&](const std::vector<int>& e) -> bool {
    XPoly prod(Rational(1));
    for (size_t i = 0; i < e.size(); ++i)
      for (int v = 0; v < e[i]; ++v) prod *= pool[i].first;
    if (rem_eval) {
      auto ce = eval_image(prod, km, jstar, x0, tau);
      if (ce.size() > 1 && !uni_divides(*rem_eval, ce)) return false;
    }
    TPoly cand = inverse_kronecker(prod, p.nvars(), km);
    if (cand.t_degree() <= 0) return false;
    XRat u(1);
    cand = x_primitive(cand, u);
    TPoly q(p.nvars());
    if (!tpoly_divides(cand, rem, &q)) return false;
    found.push_back(cand.normalized());
    rem = q;
    rem_eval = eval_except(rem, jstar, x0, tau);
    for (size_t i = e.size(); i-- > 0;) {
      pool[i].second -= e[i];
      if (pool[i].second == 0) pool.erase(pool.begin() + static_cast<long>(i));
    }
    return true;
  };

  auto total_count = [&] {
    size_t n = 0;
    for (const auto& [f, c] : pool) n += static_cast<size_t>(c);
    return n;
  };

  size_t k = 1;
  while (!pool.empty() && rem.t_degree() > 0 && k <= total_count()) {
    std::vector<int> e(pool.size(), 0);
    std::function<bool(size_t, int)> go = [&](size_t i, int need) -> bool {
      if (i == pool.size()) return need == 0 && try_candidate(e);
      int hi = std::min(pool[i].second, need);
      for (int v = hi; v >= 0; --v) {
        e[i] = v;
        if (go(i + 1, need - v)) return true;
      }
      e[i] = 0;
      return false;
    };
    if (!go(0, static_cast<int>(k))) ++k;
  }
  if (rem.t_degree() > 0) {
    // No proper divisor recombines: the remainder is irreducible.
    found.push_back(rem.normalized());
    rem = TPoly::constant(p.nvars(), rem.leading().second);
  }
  if (!rem.is_constant() || !rem.leading().second.is_one()) {
    // Residual unit from normalization.
    TPoly check = TPoly::constant(p.nvars(), XRat(1));
    for (const auto& f : found) check = check * f;
    XRat u;
    if (!tpoly_proportional(check, p, &u)) throw std::logic_error("factor recombination failed");
    unit *= u;
  }
  return found;
}

bool factor_less(const std::pair<TPoly, int>& a, const std::pair<TPoly, int>& b) {
  if (a.first.t_degree() != b.first.t_degree()) return a.first.t_degree() < b.first.t_degree();
  MonomialLess ml;
  auto ia = a.first.terms().rbegin(), ib = b.first.terms().rbegin();
  for (; ia != a.first.terms().rend() && ib != b.first.terms().rend(); ++ia, ++ib) {
    if (ml(ia->first, ib->first)) return true;
    if (ml(ib->first, ia->first)) return false;
  }
  if (a.first.term_count() != b.first.term_count()) return a.first.term_count() < b.first.term_count();
  return a.first.str() < b.first.str();
}

}  // namespace

TFactorization factor_t(const TPoly& p, int degree_cap) {
  TFactorization out;
  out.unit = XRat(0);
  if (p.is_zero()) return out;
  out.unit = XRat(1);

  TPoly rem = p;
  // Monomial content: minimal exponent of each variable.
  std::vector<int> mins(p.nvars(), std::numeric_limits<int>::max());
  for (const auto& [m, c] : rem.terms())
    for (size_t j = 0; j < mins.size(); ++j) mins[j] = std::min(mins[j], m.e[j]);
  for (size_t j = 0; j < mins.size(); ++j) {
    if (mins[j] > 0) {
      out.factors.emplace_back(TPoly::variable(p.nvars(), j), mins[j]);
      rem = tpoly_divexact(rem, TPoly::variable(p.nvars(), j).pow(mins[j]));
    }
  }

  if (rem.is_constant()) {
    out.unit = rem.leading().second;
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
  }
  out.unit = rem.leading().second;
  rem = rem.normalized();

  for (const auto& [part, mult] : squarefree_t(rem)) {
    XRat u(1);
    TPoly prim = x_primitive(part, u);
    out.unit *= u.pow(mult);
    for (const auto& f : factor_squarefree(prim, degree_cap, out.unit)) {
      // Report the factor with leading coefficient 1; fold the x-content
      // adjustment into the unit.
      XRat lc = f.leading().second;
      out.unit *= lc.pow(mult);
      out.factors.emplace_back(f.normalized(), mult);
    }
  }
  // squarefree_t normalizes parts, so rebuild the exact unit by comparison.
  TPoly check = TPoly::constant(p.nvars(), XRat(1));
  for (const auto& [f, m] : out.factors) check = check * f.pow(m);
  XRat u;
  if (!tpoly_proportional(check, p, &u)) throw std::logic_error("factorization check failed");
  out.unit = u;

  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

}  // namespace telsum
