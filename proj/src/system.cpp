#include "telsum/system.hpp"

#include <stdexcept>

namespace telsum {

Matrix mat_identity(size_t n) {
  Matrix m(n, std::vector<XRat>(n, XRat(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = XRat(1);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Matrix r(n, std::vector<XRat>(p, XRat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < p; ++j)
      for (size_t l = 0; l < k; ++l) r[i][j] += a[i][l] * b[l][j];
  return r;
}

Matrix mat_sigma(const Matrix& a, long k) {
  Matrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = sigma_x(e, k);
  return r;
}

Matrix mat_inverse(const Matrix& a) {
  size_t n = a.size();
  Matrix m = a;
  Matrix inv = mat_identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("system not invertible");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    XRat d = m[col][col].inverse();
    for (size_t j = 0; j < n; ++j) {
      m[col][j] *= d;
      inv[col][j] *= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      XRat f = m[i][col];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

std::vector<TPoly> row_images(const Matrix& m) {
  size_t n = m.size();
  std::vector<TPoly> img(n, TPoly(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      img[j] += m[j][k] * TPoly::variable(n, k);
  return img;
}

}  // namespace

ShiftSystem::ShiftSystem(Matrix A, bool companion)
    : n_(A.size()), A_(std::move(A)), companion_(companion) {
  B_ = mat_inverse(mat_sigma(A_, -1));
  fwd_images_ = row_images(A_);
  bwd_images_ = row_images(B_);
}

ShiftSystem ShiftSystem::companion(const std::vector<XRat>& a) {
  size_t n = a.size();
  if (n == 0 || a[0].is_zero()) throw std::domain_error("system not invertible");
  Matrix A(n, std::vector<XRat>(n, XRat(0)));
  for (size_t j = 0; j + 1 < n; ++j) A[j][j + 1] = XRat(1);
  for (size_t k = 0; k < n; ++k) A[n - 1][k] = a[k];
  return ShiftSystem(std::move(A), true);
}

ShiftSystem ShiftSystem::general(const Matrix& A) {
  for (const auto& row : A)
    if (row.size() != A.size()) throw std::domain_error("matrix not square");
  return ShiftSystem(A, false);
}

TPoly ShiftSystem::apply_sigma(const TPoly& v, long k) const {
  TPoly r = v;
  for (long i = 0; i < k; ++i) r = r.substitute(fwd_images_, 1);
  for (long i = 0; i > k; --i) r = r.substitute(bwd_images_, -1);
  return r;
}

TRat ShiftSystem::apply_sigma(const TRat& f, long k) const {
  return TRat(apply_sigma(f.num(), k), apply_sigma(f.den(), k));
}

TRat ShiftSystem::delta(const TRat& f) const { return apply_sigma(f, 1) - f; }

Matrix ShiftSystem::power(long s) const {
  if (s < 1) throw std::domain_error("system power requires s >= 1");
  Matrix m = A_;
  for (long i = 1; i < s; ++i) m = mat_mul(mat_sigma(A_, i), m);
  return m;
}

bool ShiftSystem::is_constant(const TRat& f) const { return apply_sigma(f, 1) == f; }

}  // namespace telsum
