#ifndef TELSUM_CLASSIFY_HPP
#define TELSUM_CLASSIFY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "telsum/system.hpp"

namespace telsum {

/// Classification of an irreducible polynomial: special means
/// sigma^ell(p) = unit * p with minimal ell >= 1; otherwise normal.
struct FactorClass {
  bool special = false;
  int ell = 0;
  XRat unit;

  static FactorClass make_normal() { return {}; }
  static FactorClass make_special(int ell, XRat unit) { return {true, ell, std::move(unit)}; }
};

/// Monic operator c_0 + c_1 S + ... + c_s S^s (c_s = 1) in the shift S,
/// acting by sum_k c_k sigma^k.
struct OreOperator {
  std::vector<XRat> c;

  size_t order() const { return c.size() - 1; }
  bool constant_coefficients() const;
  /// Number of nonzero coefficients.
  size_t term_count() const;
};

/// Result of the sigma-equivalence decision: sigma^i(p) = u * q.
struct EquivalenceResult {
  bool equivalent = false;
  long i = 0;
  XRat u;

  static EquivalenceResult not_equivalent() { return {}; }
  static EquivalenceResult found(long i, XRat u) { return {true, i, std::move(u)}; }
};

/// Raised when deciding equivalence would need eigenvalues outside Q; the
/// caller may fall back to a bounded shift scan.
struct UnsupportedEigenvalues : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SplitFactorization {
  struct Entry {
    TPoly factor;  // irreducible, normalized
    int mult = 1;
    FactorClass cls;
  };
  XRat unit;
  std::vector<Entry> factors;

  /// Product of the special factors with multiplicities (without the unit).
  TPoly special_part(size_t n) const;
  /// Product of the normal factors with multiplicities.
  TPoly normal_part(size_t n) const;
};

struct OrbitTable {
  struct Member {
    size_t index;  // position in the input factor list
    long offset;   // sigma^offset(representative) = unit * factor
    XRat unit;
  };
  /// Each orbit's first member is its representative (offset 0, unit 1).
  std::vector<std::vector<Member>> orbits;
};

/// Minimal i in 1..n with sigma^i(p) = u * p, if any.
FactorClass special_test(const ShiftSystem& sys, const TPoly& p);

/// Monic minimal-order operator annihilating p, found by incremental linear
/// dependence of p, sigma(p), sigma^2(p), ... over K.
OreOperator min_annihilator(const ShiftSystem& sys, const TPoly& p);

/// Decides whether sigma^i(p) = u * q has a solution, for irreducible p, q.
/// When the exact decision would need non-rational eigenvalue arithmetic the
/// result is determined by a brute-force scan over |i| <= scan_bound; with
/// scan_bound < 0 that case raises UnsupportedEigenvalues instead.
EquivalenceResult sigma_equivalent(const ShiftSystem& sys, const TPoly& p, const TPoly& q,
                                   long scan_bound = 25);

/// Factors P with factor_t and classifies every irreducible factor.
SplitFactorization split_factorization(const ShiftSystem& sys, const TPoly& P);
/// Classification of pre-factored input: P = unit * prod factors^mult.
SplitFactorization split_factorization(const ShiftSystem& sys, const XRat& unit,
                                       const std::vector<std::pair<TPoly, int>>& factors);

/// Partitions pairwise non-associate normal irreducibles into sigma-orbits.
OrbitTable orbit_decomposition(const ShiftSystem& sys, const std::vector<TPoly>& factors,
                               long scan_bound = 25);

/// Global dispersion of Q (nullopt encodes -infinity: no normal factor).
std::optional<long> dispersion(const ShiftSystem& sys, const TPoly& Q, long scan_bound = 25);
std::optional<long> dispersion(const ShiftSystem& sys, const SplitFactorization& sf,
                               long scan_bound = 25);
/// Local dispersion at the normal irreducible p: max |i - j| over shifts
/// sigma^i(p), sigma^j(p) dividing Q; nullopt if no shift of p divides Q.
std::optional<long> local_dispersion(const ShiftSystem& sys, const TPoly& Q, const TPoly& p,
                                     long scan_bound = 25);

}  // namespace telsum

#endif
