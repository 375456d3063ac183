#ifndef TELSUM_TELESCOPE_HPP
#define TELSUM_TELESCOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "telsum/classify.hpp"
#include "telsum/system.hpp"

namespace telsum {

struct TelescopeConfig {
  int max_t_degree = 8;    // cap on the t-degree of the numerator ansatz
  int max_x_degree = 12;   // cap on the x-degree of the ansatz coefficients
  int special_slack = 2;   // extra multiplicity per special denominator factor
  long max_shift_scan = 25;
  bool discover_specials = true;
  /// Extra x-denominator multiplied into the ansatz denominator for callers
  /// who know the solution needs one; coefficients default to polynomials.
  XPoly x_denominator = XPoly(Rational(1));
};

struct TelescopeResult {
  enum class Status { Found, NotSummable, Inconclusive };

  Status status = Status::Inconclusive;
  TRat g;              // valid when status == Found; delta(g) = f verified
  std::string detail;  // certificate / exhausted-bound description

  static TelescopeResult found(TRat g);
  static TelescopeResult not_summable(std::string detail);
  static TelescopeResult inconclusive(std::string detail);
};

/// Divisor bound for the normal part of the denominator of any solution g:
/// gcd(prod_{i=0}^{d} sigma^i(v_n), prod_{i=0}^{d} sigma^{-i-1}(v_n)),
/// normalized. v_n is the normal part of f's denominator and d = disp(f) - 1;
/// d < 0 yields 1.
TPoly normal_denominator_bound(const ShiftSystem& sys, const TPoly& v_n, long d);

/// Heuristic special part of the candidate denominator: each special factor
/// of f's denominator raised to its multiplicity plus special_slack, times
/// each discovered linear special (not proportional to one of the former)
/// raised to special_slack.
TPoly special_denominator_guess(const ShiftSystem& sys,
                                const std::vector<std::pair<TPoly, int>>& f_special_factors,
                                const std::vector<TPoly>& discovered_specials,
                                const TelescopeConfig& config);

/// The cleared and reduced form of delta(U / D) = f:
/// a1 * sigma(U) - a2 * U = b, with gcd(a1, a2, b) = 1.
struct NumeratorEquation {
  TPoly a1, a2, b;
};

NumeratorEquation reduce_to_numerator_equation(const ShiftSystem& sys, const TRat& f,
                                               const TPoly& D);

/// Searches for a polynomial solution U of a1 * sigma(U) - a2 * U = b by
/// iterative deepening of the ansatz degrees (t-degree, then x-degree of the
/// coefficients) up to the config caps; exact linear algebra over Q. Returns
/// the first solution found; nullopt means the bounds were exhausted, not
/// that no solution exists.
std::optional<TPoly> solve_numerator(const ShiftSystem& sys, const NumeratorEquation& eq,
                                     const TelescopeConfig& config);

/// True iff delta(g) - f = 0 identically.
bool verify(const ShiftSystem& sys, const TRat& g, const TRat& f);

/// Full pipeline: split the denominator, certify non-summability when the
/// dispersion is 0, otherwise assemble the denominator candidate, reduce,
/// solve, and verify. Found results always satisfy verify(g, f).
TelescopeResult parallel_sum(const ShiftSystem& sys, const TRat& f,
                             const TelescopeConfig& config = {});
/// Same, with a pre-factored denominator (avoids factor_t on large inputs).
TelescopeResult parallel_sum(const ShiftSystem& sys, const TRat& f,
                             const SplitFactorization& den_factors,
                             const TelescopeConfig& config = {});

}  // namespace telsum

#endif
