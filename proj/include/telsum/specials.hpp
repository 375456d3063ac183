#ifndef TELSUM_SPECIALS_HPP
#define TELSUM_SPECIALS_HPP

#include <stdexcept>
#include <vector>

#include "telsum/classify.hpp"
#include "telsum/system.hpp"

namespace telsum {

/// Certificate of a hypergeometric solution: sigma_step(y) = ratio * y.
struct HypergeomCert {
  XRat ratio;
  /// True when the certificate's solution space is one-dimensional.
  bool simple = true;
};

/// All rational certificates r with sum_k c_k * prod_{j<k} r(x + j*step) = 0,
/// i.e. hypergeometric solutions of the operator L in the shift by `step`.
/// Classical Petkovsek enumeration; every certificate is verified
/// symbolically before being returned. Sorted and duplicate-free.
std::vector<HypergeomCert> hypergeometric_solutions(const OreOperator& L, long step = 1);

/// Raised by cfinite_specials when the spectrum is not rational; the message
/// carries the characteristic polynomial.
struct IrrationalEigenvalues : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when no usable cyclic vector is found for the dual-system
/// reduction.
struct CyclicVectorFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// For a constant system, one normalized linear form per left eigenvector of
/// A with rational eigenvalue lambda: sigma(w.T) = lambda * (w.T).
std::vector<std::pair<TPoly, Rational>> cfinite_specials(const ShiftSystem& sys);

struct LinearSpecial {
  TPoly form;  // linear, normalized
  int ell;     // minimal shift with sigma^ell(form) = unit * form
  XRat unit;
};

/// Discovers linear special polynomials with sigma^s(w.T) = u * (w.T) for
/// s = 1..max_s, by reducing the dual system sigma^s(V) = (A_(s)^{-1})^T V
/// to a scalar operator via a cyclic vector and collecting its hypergeometric
/// solutions. Every returned form passes special_test; results duplicate-free
/// and deterministically ordered.
std::vector<LinearSpecial> find_linear_specials(const ShiftSystem& sys, int max_s);

}  // namespace telsum

#endif
