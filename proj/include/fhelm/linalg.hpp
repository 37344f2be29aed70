#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "fhelm/errors.hpp"

namespace fhelm {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;
using RVec = std::vector<double>;

/// Symmetric tridiagonal matrix stored as main diagonal and the single
/// off-diagonal (sub == super by symmetry).
template <typename Scalar>
struct SymTriDiag {
  std::vector<Scalar> diag; // length n
  std::vector<Scalar> off;  // length n-1

  std::size_t size() const { return diag.size(); }
};

using TriDiag = SymTriDiag<double>;
using TriDiagC = SymTriDiag<Complex>;

namespace detail {

inline void check_dim(std::size_t got, std::size_t want, const char* where) {
  if (got != want)
    throw DimensionError(std::string(where) + ": vector length " + std::to_string(got) +
                         ", expected " + std::to_string(want));
}

} // namespace detail

/// y += scale * (T x), interior rows only (rows 0 and n-1 untouched) and with
/// the boundary entries of x treated as zero.  This is the masked product used
/// everywhere Dirichlet rows are replaced by identity rows.
template <typename Scalar>
inline void add_tridiag_interior(const SymTriDiag<Scalar>& t, Complex scale, const CVec& x,
                                 CVec& y) {
  const std::size_t n = t.size();
  if (n < 3) return;
  // row 1 and row n-2 drop their boundary-column couplings
  y[1] += scale * (t.diag[1] * x[1] + t.off[1] * x[2]);
  for (std::size_t i = 2; i + 2 < n; ++i)
    y[i] += scale * (t.off[i - 1] * x[i - 1] + t.diag[i] * x[i] + t.off[i] * x[i + 1]);
  if (n > 3) y[n - 2] += scale * (t.off[n - 3] * x[n - 3] + t.diag[n - 2] * x[n - 2]);
}

/// Full (unmasked) product y = T x.
template <typename Scalar>
inline void tridiag_apply(const SymTriDiag<Scalar>& t, const CVec& x, CVec& y) {
  const std::size_t n = t.size();
  detail::check_dim(x.size(), n, "tridiag_apply");
  y.assign(n, Complex(0));
  y[0] = t.diag[0] * x[0] + t.off[0] * x[1];
  for (std::size_t i = 1; i + 1 < n; ++i)
    y[i] = t.off[i - 1] * x[i - 1] + t.diag[i] * x[i] + t.off[i] * x[i + 1];
  y[n - 1] = t.off[n - 2] * x[n - 2] + t.diag[n - 1] * x[n - 1];
}

/// Solve T x = b for a general (non-symmetric storage not needed here)
/// complex tridiagonal system by the Thomas algorithm.  No pivoting; the
/// Helmholtz systems assembled in this library are safely factorable.
inline CVec tridiag_solve(const TriDiagC& t, const CVec& b) {
  const std::size_t n = t.size();
  detail::check_dim(b.size(), n, "tridiag_solve");
  CVec cprime(n - 1), dprime(n), x(n);
  Complex denom = t.diag[0];
  cprime[0] = t.off[0] / denom;
  dprime[0] = b[0] / denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = t.diag[i] - t.off[i - 1] * cprime[i - 1];
    if (i + 1 < n) cprime[i] = t.off[i] / denom;
    dprime[i] = (b[i] - t.off[i - 1] * dprime[i - 1]) / denom;
  }
  x[n - 1] = dprime[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    x[i] = dprime[i] - cprime[i] * x[i + 1];
  return x;
}

inline Complex dot(const CVec& a, const CVec& b) {
  Complex acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline double norm2(const CVec& a) {
  double acc = 0;
  for (const Complex& v : a) acc += std::norm(v);
  return std::sqrt(acc);
}

inline void axpy(Complex alpha, const CVec& x, CVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline double rel_l2_error(const CVec& got, const CVec& want) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    num += std::norm(got[i] - want[i]);
    den += std::norm(want[i]);
  }
  if (den == 0) return std::sqrt(num);
  return std::sqrt(num / den);
}

inline double rms(const CVec& err) {
  double acc = 0;
  for (const Complex& v : err) acc += std::norm(v);
  return std::sqrt(acc / static_cast<double>(err.size()));
}

} // namespace fhelm
