#ifndef TELSUM_SYSTEM_HPP
#define TELSUM_SYSTEM_HPP

#include <vector>

#include "telsum/tpoly.hpp"

namespace telsum {

using Matrix = std::vector<std::vector<XRat>>;

Matrix mat_identity(size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Entrywise x -> x + k.
Matrix mat_sigma(const Matrix& a, long k);
/// Inverse by Gauss-Jordan; throws std::domain_error if singular.
Matrix mat_inverse(const Matrix& a);

/// The difference field F = C(x)(t_0, ..., t_{n-1}) with the automorphism
/// sigma(x) = x + 1 and sigma(t_j) = sum_k A[j][k] * t_k (row j of A is the
/// image of t_j). Immutable after construction.
class ShiftSystem {
 public:
  /// Companion system of the recurrence sigma(t_{n-1}) = a_0 t_0 + ... +
  /// a_{n-1} t_{n-1}, with sigma(t_j) = t_{j+1} for j < n-1. Requires
  /// a_0 != 0.
  static ShiftSystem companion(const std::vector<XRat>& a);
  /// General invertible linear system sigma(T) = A T.
  static ShiftSystem general(const Matrix& A);

  size_t n() const { return n_; }
  bool is_companion() const { return companion_; }
  const Matrix& matrix() const { return A_; }
  /// B with sigma^{-1}(T) = B T, i.e. (sigma^{-1} A)^{-1}.
  const Matrix& inverse_matrix() const { return B_; }

  /// sigma^k, any integer k.
  TPoly apply_sigma(const TPoly& v, long k = 1) const;
  TRat apply_sigma(const TRat& f, long k = 1) const;

  /// Delta(f) = sigma(f) - f.
  TRat delta(const TRat& f) const;

  /// Matrix of sigma^s on the t-variables: A_(s) = sigma^{s-1}(A)...sigma(A)A.
  Matrix power(long s) const;

  bool is_constant(const TRat& f) const;

 private:
  ShiftSystem(Matrix A, bool companion);

  size_t n_;
  Matrix A_;
  Matrix B_;
  bool companion_;
  std::vector<TPoly> fwd_images_;
  std::vector<TPoly> bwd_images_;
};

}  // namespace telsum

#endif
