#ifndef TELSUM_TPOLY_HPP
#define TELSUM_TPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "telsum/xrat.hpp"

namespace telsum {

/// Exponent vector for t_0, ..., t_{n-1}.
struct Monomial {
  std::vector<int> e;

  int total() const {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }
  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Lexicographic order with t_0 most significant. The greatest monomial
/// under this order is the leading one.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

/// Element of R = C(x)[t_0, ..., t_{n-1}]: sparse terms with XRat
/// coefficients; no stored coefficient is zero.
class TPoly {
 public:
  using TermMap = std::map<Monomial, XRat, MonomialLess>;

  explicit TPoly(size_t n = 0) : n_(n) {}
  static TPoly constant(size_t n, const XRat& c);
  static TPoly variable(size_t n, size_t j);

  size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree in the t-variables; -1 for the zero polynomial.
  int t_degree() const;
  int degree_in(size_t j) const;
  size_t term_count() const { return terms_.size(); }

  const TermMap& terms() const { return terms_; }
  const XRat& coeff(const Monomial& m) const;
  /// Leading term under the lexicographic order; requires nonzero.
  const std::pair<const Monomial, XRat>& leading() const;

  void add_term(const Monomial& m, const XRat& c);

  TPoly operator-() const;
  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const XRat& s);
  friend TPoly operator*(const XRat& s, const TPoly& a) { return a * s; }
  TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
  TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  TPoly pow(int e) const;

  /// Scaled so the coefficient of the leading monomial is 1.
  TPoly normalized() const;

  /// Substitute each t_j by images[j] (all with the same ambient n of the
  /// result) and apply x -> x + xshift to the coefficients.
  TPoly substitute(const std::vector<TPoly>& images, long xshift) const;

  /// Derivative with respect to t_j.
  TPoly derivative(size_t j) const;

  std::string str() const;

 private:
  size_t n_;
  TermMap terms_;
};

/// Exact division; throws std::logic_error if not exact.
TPoly tpoly_divexact(const TPoly& a, const TPoly& b);
/// True iff b divides a exactly (quotient stored in q if non-null).
bool tpoly_divides(const TPoly& b, const TPoly& a, TPoly* q = nullptr);

/// Gcd, normalized so its leading coefficient is 1; gcd(0, 0) = 0.
TPoly tpoly_gcd(const TPoly& p, const TPoly& q);

/// If q = u * p for some u in C(x), returns u.
bool tpoly_proportional(const TPoly& p, const TPoly& q, XRat* unit = nullptr);

/// Square-free decomposition: pairwise coprime parts, product with
/// multiplicities reproduces the input up to an XRat unit.
std::vector<std::pair<TPoly, int>> squarefree_t(const TPoly& p);

/// Components of the t-grading, ascending by degree; P equals their sum.
std::vector<std::pair<int, TPoly>> homogeneous_components(const TPoly& p);

struct TFactorization {
  XRat unit;
  std::vector<std::pair<TPoly, int>> factors;  // irreducible, multiplicity
};

/// Thrown when the Kronecker image exceeds the univariate degree cap;
/// supply factored input instead.
struct DegreeTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Complete irreducible factorization over C(x); factors normalized and
/// sorted by (t-degree, leading monomial order).
TFactorization factor_t(const TPoly& p, int degree_cap = 512);

/// Reduced fraction in F = C(x)(t_0, ..., t_{n-1}): gcd(num, den) = 1 and
/// den has leading coefficient 1.
class TRat {
 public:
  explicit TRat(size_t n = 0) : num_(n), den_(TPoly::constant(n, XRat(1))) {}
  TRat(const TPoly& num, const TPoly& den);
  explicit TRat(const TPoly& num) : TRat(num, TPoly::constant(num.nvars(), XRat(1))) {}

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  size_t nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  TRat operator-() const;
  friend TRat operator+(const TRat& a, const TRat& b);
  friend TRat operator-(const TRat& a, const TRat& b);
  friend TRat operator*(const TRat& a, const TRat& b);
  friend TRat operator/(const TRat& a, const TRat& b);

  friend bool operator==(const TRat& a, const TRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const TRat& a, const TRat& b) { return !(a == b); }

  std::string str() const;

 private:
  TPoly num_, den_;
};

}  // namespace telsum

#endif
