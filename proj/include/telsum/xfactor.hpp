#ifndef TELSUM_XFACTOR_HPP
#define TELSUM_XFACTOR_HPP

#include <utility>
#include <vector>

#include "telsum/xpoly.hpp"

namespace telsum {

/// All integer roots of p (nonzero), each listed once, ascending.
std::vector<long> integer_roots(const XPoly& p);

/// All rational roots of p (nonzero), each listed once, ascending.
std::vector<Rational> rational_roots(const XPoly& p);

struct XFactorization {
  Rational content;
  std::vector<std::pair<XPoly, int>> factors;  // monic irreducible, multiplicity
};

/// Complete factorization over Q: content * prod factors^mult == p.
/// Factors are monic, irreducible, pairwise distinct, sorted by (degree,
/// coefficient sequence).
XFactorization factor_x(const XPoly& p);

}  // namespace telsum

#endif
