#include "telsum/specials.hpp"

#include <algorithm>
#include <random>

#include "telsum/xfactor.hpp"

namespace telsum {

namespace {

// ---- small exact linear algebra helpers ----

// Particular solution of M y = rhs over K, free variables set to zero;
// nullopt if inconsistent.
std::optional<std::vector<XRat>> solve_xrat(std::vector<std::vector<XRat>> m,
                                            std::vector<XRat> rhs) {
  size_t nr = m.size(), nc = nr ? m[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t col = 0; col < nc && r < nr; ++col) {
    size_t piv = r;
    while (piv < nr && m[piv][col].is_zero()) ++piv;
    if (piv == nr) continue;
    std::swap(m[piv], m[r]);
    std::swap(rhs[piv], rhs[r]);
    XRat inv = m[r][col].inverse();
    for (size_t j = col; j < nc; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      XRat f = m[i][col];
      for (size_t j = col; j < nc; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (size_t i = r; i < nr; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<XRat> sol(nc, XRat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = rhs[i];
  return sol;
}

// Kernel basis of the rational matrix m (rows x cols).
std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> m,
                                                   size_t nc) {
  size_t nr = m.size();
  std::vector<long> pivot_of_col(nc, -1);
  size_t r = 0;
  for (size_t col = 0; col < nc && r < nr; ++col) {
    size_t piv = r;
    while (piv < nr && m[piv][col].is_zero()) ++piv;
    if (piv == nr) continue;
    std::swap(m[piv], m[r]);
    Rational inv = m[r][col].inverse();
    for (size_t j = col; j < nc; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < nc; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_of_col[col] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (size_t col = 0; col < nc; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Rational> v(nc, Rational(0));
    v[col] = Rational(1);
    for (size_t c2 = 0; c2 < nc; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = -m[static_cast<size_t>(pivot_of_col[c2])][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Monic divisors of p, enumerated from its irreducible factorization.
std::vector<XPoly> monic_divisors(const XPoly& p) {
  std::vector<XPoly> out = {XPoly(Rational(1))};
  if (p.is_zero()) return out;
  XFactorization f = factor_x(p);
  for (const auto& [g, mult] : f.factors) {
    std::vector<XPoly> next;
    XPoly power(Rational(1));
    for (int e = 0; e <= mult; ++e) {
      for (const auto& d : out) next.push_back(d * power);
      if (e < mult) power *= g;
    }
    out = std::move(next);
  }
  return out;
}

bool verify_certificate(const OreOperator& L, long step, const XRat& r) {
  XRat acc(0), cum(1);
  for (size_t k = 0; k < L.c.size(); ++k) {
    acc += L.c[k] * cum;
    cum *= sigma_x(r, step * static_cast<long>(k));
  }
  return acc.is_zero();
}

}  // namespace

std::vector<HypergeomCert> hypergeometric_solutions(const OreOperator& L, long step) {
  std::vector<HypergeomCert> out;
  size_t s = L.order();
  if (s == 0) return out;

  // Clear denominators: P_k in Q[x].
  XPoly den(Rational(1));
  for (const auto& ck : L.c) {
    XPoly g = xpoly_gcd(den, ck.den());
    den = xpoly_divexact(den * ck.den(), g);
  }
  std::vector<XPoly> P(s + 1);
  for (size_t k = 0; k <= s; ++k) P[k] = L.c[k].num() * xpoly_divexact(den, L.c[k].den());

  auto push_unique = [&out](const XRat& r, bool simple) {
    for (const auto& c : out)
      if (c.ratio == r) return;
    out.push_back({r, simple});
  };

  std::vector<XPoly> bs = monic_divisors(P[0]);
  std::vector<XPoly> cs = monic_divisors(P[s].shifted(-step * static_cast<long>(s - 1)));

  for (const XPoly& b : bs) {
    for (const XPoly& c : cs) {
      // Q_k = P_k * prod_{j<k} b(x+step j) * prod_{k<=j<s} c(x+step j)
      std::vector<XPoly> Q(s + 1);
      for (size_t k = 0; k <= s; ++k) {
        XPoly q = P[k];
        for (size_t j = 0; j < k; ++j) q *= b.shifted(step * static_cast<long>(j));
        for (size_t j = k; j < s; ++j) q *= c.shifted(step * static_cast<long>(j));
        Q[k] = q;
      }
      int d = 0;
      for (const auto& q : Q) d = std::max(d, q.degree());

      // z from the top-degree compatibility polynomial.
      std::vector<Rational> zc;
      for (size_t k = 0; k <= s; ++k) zc.push_back(Q[k].coeff(d));
      for (const Rational& z : rational_roots(XPoly(zc))) {
        // Candidate degree of a from the next-to-leading coefficient.
        Rational a1(0), a0(0);
        for (size_t k = 0; k <= s; ++k) {
          Rational zk = z.pow(static_cast<long>(k));
          a1 = a1 + Rational(static_cast<long>(k)) * zk * Q[k].coeff(d);
          a0 = a0 + zk * Q[k].coeff(d - 1);
        }
        std::vector<int> degs;
        if (!a1.is_zero()) {
          Rational delta = -a0 / (Rational(step) * a1);
          if (delta.is_integer() && delta.sign() >= 0)
            degs.push_back(static_cast<int>(delta.to_double()));
        } else {
          for (int delta = 0; delta <= 12; ++delta) degs.push_back(delta);
        }

        for (int delta : degs) {
          // Solve sum_k z^k Q_k(x) a(x + step k) = 0 for a of degree <= delta.
          std::vector<XPoly> E(static_cast<size_t>(delta) + 1);
          for (int mdeg = 0; mdeg <= delta; ++mdeg) {
            XPoly e;
            for (size_t k = 0; k <= s; ++k) {
              XPoly shift_pow =
                  (XPoly::variable() + XPoly(Rational(step * static_cast<long>(k))))
                      .pow(mdeg);
              e += Q[k] * shift_pow * z.pow(static_cast<long>(k));
            }
            E[static_cast<size_t>(mdeg)] = e;
          }
          int maxdeg = 0;
          for (const auto& e : E) maxdeg = std::max(maxdeg, e.degree());
          std::vector<std::vector<Rational>> m(static_cast<size_t>(maxdeg) + 1,
                                               std::vector<Rational>(E.size(), Rational(0)));
          for (size_t col = 0; col < E.size(); ++col)
            for (int row = 0; row <= E[col].degree(); ++row)
              m[static_cast<size_t>(row)][col] = E[col].coeff(row);
          auto kernel = rational_kernel(std::move(m), E.size());
          for (const auto& vec : kernel) {
            XPoly a{std::vector<Rational>(vec)};
            if (a.is_zero()) continue;
            XRat r = XRat(z) * XRat(a.shifted(step), a) * XRat(b, c);
            if (verify_certificate(L, step, r)) push_unique(r, kernel.size() == 1);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const HypergeomCert& a, const HypergeomCert& b) { return a.ratio.str() < b.ratio.str(); });
  return out;
}

namespace {

// Characteristic polynomial of a rational matrix (Faddeev-LeVerrier),
// coefficients ascending.
XPoly char_poly(const std::vector<std::vector<Rational>>& A) {
  size_t n = A.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) M[i][i] = Rational(1);
  for (size_t k = 1; k <= n; ++k) {
    // M = A * M
    std::vector<std::vector<Rational>> AM(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l) AM[i][j] = AM[i][j] + A[i][l] * M[l][j];
    M = std::move(AM);
    Rational tr(0);
    for (size_t i = 0; i < n; ++i) tr = tr + M[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
    for (size_t i = 0; i < n; ++i) M[i][i] = M[i][i] + c[n - k];
  }
  return XPoly(std::move(c));
}

TPoly form_from(const std::vector<Rational>& w, size_t n) {
  TPoly p(n);
  for (size_t j = 0; j < n; ++j)
    if (!w[j].is_zero()) p += XRat(w[j]) * TPoly::variable(n, j);
  return p.is_zero() ? p : p.normalized();
}

TPoly form_from(const std::vector<XRat>& w, size_t n) {
  TPoly p(n);
  for (size_t j = 0; j < n; ++j)
    if (!w[j].is_zero()) p += w[j] * TPoly::variable(n, j);
  return p.is_zero() ? p : p.normalized();
}

}  // namespace

std::vector<std::pair<TPoly, Rational>> cfinite_specials(const ShiftSystem& sys) {
  size_t n = sys.n();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const XRat& e = sys.matrix()[i][j];
      if (!e.is_constant()) throw std::domain_error("system matrix is not constant");
      A[i][j] = e.constant_value();
    }
  }
  XPoly cp = char_poly(A);
  XFactorization f = factor_x(cp);
  std::vector<Rational> eigen;
  for (const auto& [g, mult] : f.factors) {
    if (g.degree() > 1)
      throw IrrationalEigenvalues("irrational eigenvalues; characteristic polynomial " +
                                  cp.str());
    eigen.push_back(-g.coeff(0));
  }
  std::sort(eigen.begin(), eigen.end(), [](const Rational& a, const Rational& b) {
    return (a - b).sign() < 0;
  });

  std::vector<std::pair<TPoly, Rational>> out;
  for (const Rational& lam : eigen) {
    // Left eigenvectors of A: kernel of A^T - lam I.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = A[j][i] - (i == j ? lam : Rational(0));
    for (const auto& w : rational_kernel(std::move(m), n)) {
      TPoly p = form_from(w, n);
      if (!p.is_zero()) out.emplace_back(p, lam);
    }
  }
  return out;
}

std::vector<LinearSpecial> find_linear_specials(const ShiftSystem& sys, int max_s) {
  size_t n = sys.n();
  // Forms with the same (ell, unit) span a vector space over the constants;
  // collect candidates per group and emit an echelon basis at the end.
  std::vector<std::pair<std::pair<int, XRat>, std::vector<TPoly>>> groups;
  auto push_candidate = [&groups](const TPoly& form, const FactorClass& cls) {
    for (auto& g : groups) {
      if (g.first.first == cls.ell && g.first.second == cls.unit) {
        g.second.push_back(form);
        return;
      }
    }
    groups.push_back({{cls.ell, cls.unit}, {form}});
  };

  std::mt19937 gen(0x7e15u);
  std::uniform_int_distribution<long> small(-4, 4);

  bool reduction_without_reconstruction = false;
  for (int s = 1; s <= max_s; ++s) {
    Matrix B = mat_inverse(sys.power(s));
    // transpose: sigma^s(V) = u * (A_(s)^{-1})^T V for the coefficient vector
    // V of a special linear form.
    Matrix Bt(n, std::vector<XRat>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) Bt[i][j] = B[j][i];

    std::vector<std::vector<XRat>> candidates;
    for (size_t j = 0; j < n; ++j) {
      std::vector<XRat> e(n, XRat(0));
      e[j] = XRat(1);
      candidates.push_back(std::move(e));
    }
    for (int extra = 0; extra < 3; ++extra) {
      std::vector<XRat> v(n);
      for (size_t j = 0; j < n; ++j) v[j] = XRat(small(gen));
      candidates.push_back(std::move(v));
    }

    for (const auto& c0 : candidates) {
      bool zero = true;
      for (const auto& e : c0) zero = zero && e.is_zero();
      if (zero) continue;

      // Cyclic-vector reduction: rows c_k with c_{k+1} = sigma^s(c_k) * Bt,
      // so c_k . V = tau^k(c_0 . V) for every V with tau(V) = Bt V.
      std::vector<std::vector<XRat>> rows = {c0};
      OreOperator L;
      while (true) {
        const auto& last = rows.back();
        std::vector<XRat> next(n, XRat(0));
        for (size_t j = 0; j < n; ++j)
          for (size_t l = 0; l < n; ++l)
            next[j] += sigma_x(last[l], s) * Bt[l][j];
        // dependency test: sum_k alpha_k rows[k] = next
        std::vector<std::vector<XRat>> m(n, std::vector<XRat>(rows.size()));
        std::vector<XRat> rhs(n);
        for (size_t j = 0; j < n; ++j) {
          for (size_t k = 0; k < rows.size(); ++k) m[j][k] = rows[k][j];
          rhs[j] = next[j];
        }
        auto alpha = solve_xrat(m, rhs);
        if (alpha) {
          L.c.clear();
          for (const auto& ak : *alpha) L.c.push_back(-ak);
          L.c.push_back(XRat(1));
          break;
        }
        rows.push_back(std::move(next));
      }

      for (const HypergeomCert& cert : hypergeometric_solutions(L, s)) {
        // Reconstruct V from c_k . V = prod_{j<k} tau^j(r).
        std::vector<std::vector<XRat>> m(rows.size(), std::vector<XRat>(n));
        std::vector<XRat> rhs(rows.size());
        XRat cum(1);
        for (size_t k = 0; k < rows.size(); ++k) {
          m[k] = rows[k];
          rhs[k] = cum;
          cum *= sigma_x(cert.ratio, s * static_cast<long>(k));
        }
        auto V = solve_xrat(m, rhs);
        if (!V) {
          reduction_without_reconstruction = true;
          continue;
        }
        TPoly form = form_from(*V, n);
        if (form.is_zero()) continue;
        FactorClass cls = special_test(sys, form);
        if (cls.special && cls.ell <= s) push_candidate(form, cls);
      }
    }
  }
  std::vector<LinearSpecial> out;
  for (const auto& [key, forms] : groups) {
    // Flatten each form into a Q-vector of x-coefficients over a common
    // denominator, echelon-reduce, and map the basis rows back to forms.
    auto tmono = [n](size_t j) {
      Monomial m;
      m.e.assign(n, 0);
      m.e[j] = 1;
      return m;
    };
    XPoly den(Rational(1));
    for (const TPoly& f : forms) {
      for (size_t j = 0; j < n; ++j) {
        const XPoly& d = f.coeff(tmono(j)).den();
        XPoly g = xpoly_gcd(den, d);
        den = xpoly_divexact(den * d, g);
      }
    }
    std::vector<std::vector<XPoly>> cleared;
    int maxdeg = 0;
    for (const TPoly& f : forms) {
      std::vector<XPoly> row(n);
      for (size_t j = 0; j < n; ++j) {
        XRat cj = f.coeff(tmono(j));
        row[j] = cj.num() * xpoly_divexact(den, cj.den());
        maxdeg = std::max(maxdeg, row[j].degree());
      }
      cleared.push_back(std::move(row));
    }
    size_t w = n * (static_cast<size_t>(maxdeg) + 1);
    std::vector<std::vector<Rational>> m;
    for (const auto& row : cleared) {
      std::vector<Rational> v(w, Rational(0));
      for (size_t j = 0; j < n; ++j)
        for (int k = 0; k <= row[j].degree(); ++k)
          v[j * (static_cast<size_t>(maxdeg) + 1) + static_cast<size_t>(k)] =
              row[j].coeff(k);
      m.push_back(std::move(v));
    }
    // row echelon over Q
    size_t r = 0;
    for (size_t col = 0; col < w && r < m.size(); ++col) {
      size_t piv = r;
      while (piv < m.size() && m[piv][col].is_zero()) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[r]);
      Rational inv = m[r][col].inverse();
      for (size_t j = col; j < w; ++j) m[r][j] = m[r][j] * inv;
      for (size_t i = 0; i < m.size(); ++i) {
        if (i == r || m[i][col].is_zero()) continue;
        Rational f = m[i][col];
        for (size_t j = col; j < w; ++j) m[i][j] = m[i][j] - f * m[r][j];
      }
      ++r;
    }
    for (size_t i = 0; i < r; ++i) {
      std::vector<XRat> V(n);
      for (size_t j = 0; j < n; ++j) {
        std::vector<Rational> c(static_cast<size_t>(maxdeg) + 1);
        for (int k = 0; k <= maxdeg; ++k)
          c[static_cast<size_t>(k)] =
              m[i][j * (static_cast<size_t>(maxdeg) + 1) + static_cast<size_t>(k)];
        V[j] = XRat(XPoly{std::move(c)}, den);
      }
      TPoly form = form_from(V, n);
      if (form.is_zero()) continue;
      FactorClass cls = special_test(sys, form);
      if (cls.special && cls.ell == key.first && cls.unit == key.second)
        out.push_back({form, cls.ell, cls.unit});
    }
  }
  if (out.empty() && reduction_without_reconstruction)
    throw CyclicVectorFailure("no cyclic vector yielded a reconstructible solution");
  std::sort(out.begin(), out.end(), [](const LinearSpecial& a, const LinearSpecial& b) {
    if (a.ell != b.ell) return a.ell < b.ell;
    return a.form.str() < b.form.str();
  });
  return out;
}

}  // namespace telsum
