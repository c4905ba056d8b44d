#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidcong/bigint.hpp"
#include "braidcong/errors.hpp"
#include "braidcong/laurent.hpp"

namespace braidcong {

/// Square matrix over a commutative ring, row-major. Matrices act on column
/// vectors from the left.
template <class Ring>
class Matrix {
 public:
  Matrix() = default;

  explicit Matrix(std::size_t n) : n_(n), a_(n * n, Ring(0)) {}

  Matrix(std::size_t n, std::vector<Ring> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw std::invalid_argument("matrix entry count does not match dimension");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring(1);
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<Ring>> rows) {
    const std::size_t n = rows.size();
    Matrix m(n);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n) throw std::invalid_argument("matrix rows must be square");
      std::size_t j = 0;
      for (const auto& x : row) m(i, j++) = x;
      ++i;
    }
    return m;
  }

  std::size_t dim() const { return n_; }

  Ring& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Ring& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  const std::vector<Ring>& entries() const { return a_; }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_identity() const { return *this == identity(n_); }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = x.n_;
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Ring& xik = x(i, k);
        if (xik == Ring(0)) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
      }
    }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }

  friend Matrix operator*(const Ring& s, const Matrix& x) {
    Matrix r = x;
    for (auto& e : r.a_) e = s * e;
    return r;
  }

  /// Direct sum with an identity block of size k (lower-right).
  Matrix direct_sum_identity(std::size_t k) const {
    Matrix r = identity(n_ + k);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(i, j) = (*this)(i, j);
    return r;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Ring> a_;
};

using MatZ = Matrix<BigInt>;
using MatL = Matrix<LaurentPoly>;
using VecZ = std::vector<BigInt>;

inline MatZ mat_mul(const MatZ& a, const MatZ& b) { return a * b; }
inline MatL mat_mul(const MatL& a, const MatL& b) { return a * b; }

inline VecZ apply(const MatZ& a, std::span<const BigInt> v) {
  if (v.size() != a.dim()) throw std::invalid_argument("matrix-vector dimension mismatch");
  VecZ r(a.dim(), BigInt(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(const MatZ& a) {
  const std::size_t n = a.dim();
  if (n == 0) return 1;
  MatZ m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Exact inverse of a unimodular integer matrix via fraction-free Gauss-Jordan
/// elimination on [A | I]. Throws PreconditionError("not unimodular") otherwise.
inline MatZ inverse(const MatZ& a) {
  const std::size_t n = a.dim();
  const std::size_t w = 2 * n;
  std::vector<BigInt> m(n * w, BigInt(0));
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * w + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = a(i, j);
    at(i, n + i) = 1;
  }
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k) == 0) ++p;
    if (p == n) throw PreconditionError("not unimodular: matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < w; ++j) std::swap(at(p, j), at(k, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt lead = at(i, k);
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        at(i, j) = (at(k, k) * at(i, j) - lead * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  MatZ inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& d = at(i, i);
    if (d != 1 && d != -1) throw PreconditionError("not unimodular: determinant is " + abs(d).str() + " up to sign");
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = at(i, n + j) * d;
  }
  return inv;
}

inline MatZ mat_inverse_z(const MatZ& a) { return inverse(a); }

/// a^e for any integer e (negative powers need a unimodular a).
inline MatZ mat_pow(const MatZ& a, BigInt e) {
  MatZ base = e < 0 ? inverse(a) : a;
  if (e < 0) e = -e;
  MatZ result = MatZ::identity(a.dim());
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

inline MatZ eval_at_minus_one(const MatL& a) {
  MatZ r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j).eval_at_minus_one();
  return r;
}

/// Writes "n 0" followed by n rows; 0 marks integer entries.
inline std::string format_matrix(const MatZ& a) {
  std::ostringstream out;
  out << a.dim() << " 0\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
  return out.str();
}

inline std::string format_matrix(const MatL& a) {
  std::ostringstream out;
  out << a.dim() << " t\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace braidcong
