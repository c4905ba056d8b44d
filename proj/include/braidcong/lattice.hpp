#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcong/bigint.hpp"
#include "braidcong/matrix.hpp"

namespace braidcong {

/// Element of Z^n written in the standard basis e_1..e_n.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : x_(n, BigInt(0)) {}
  explicit LatticeVector(VecZ coords) : x_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords) {
    for (long long c : coords) x_.emplace_back(c);
  }

  /// e_i, 1-based.
  static LatticeVector e(std::size_t n, std::size_t i) {
    check_index(n, i, n);
    LatticeVector v(n);
    v.x_[i - 1] = 1;
    return v;
  }

  /// c_i = e_i - e_{i+1}, 1 <= i < n.
  static LatticeVector c(std::size_t n, std::size_t i) {
    check_index(n, i, n - 1);
    LatticeVector v(n);
    v.x_[i - 1] = 1;
    v.x_[i] = -1;
    return v;
  }

  /// lambda_1 c_1 + ... + lambda_{n-1} c_{n-1}.
  static LatticeVector from_c_coords(const VecZ& lambda) {
    const std::size_t n = lambda.size() + 1;
    LatticeVector v(n);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      v.x_[i] += lambda[i];
      v.x_[i + 1] -= lambda[i];
    }
    return v;
  }

  std::size_t dim() const { return x_.size(); }
  const VecZ& coords() const { return x_; }
  const BigInt& operator[](std::size_t i) const { return x_[i]; }
  BigInt& operator[](std::size_t i) { return x_[i]; }

  BigInt coordinate_sum() const {
    BigInt s = 0;
    for (const auto& a : x_) s += a;
    return s;
  }

  bool is_zero() const {
    for (const auto& a : x_)
      if (a != 0) return false;
    return true;
  }

  /// c-basis coordinates lambda_i = x_1 + ... + x_i; requires coordinate sum 0.
  VecZ c_coords() const {
    if (coordinate_sum() != 0) throw std::invalid_argument("vector is not in the zero-sum lattice");
    VecZ lambda;
    BigInt s = 0;
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
      s += x_[i];
      lambda.push_back(s);
    }
    return lambda;
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.x_.size(); ++i) a.x_[i] += b.x_[i];
    return a;
  }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.x_.size(); ++i) a.x_[i] -= b.x_[i];
    return a;
  }
  friend LatticeVector operator*(const BigInt& k, LatticeVector a) {
    for (auto& v : a.x_) v *= k;
    return a;
  }
  LatticeVector operator-() const { return BigInt(-1) * *this; }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.x_ == b.x_; }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }

  std::string to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < x_.size(); ++i) out << (i ? ", " : "") << x_[i];
    out << ')';
    return out.str();
  }

 private:
  static void check_index(std::size_t n, std::size_t i, std::size_t hi) {
    if (i < 1 || i > hi) throw std::invalid_argument("basis index out of range for dimension " + std::to_string(n));
  }
  static void check_same(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("lattice vector dimension mismatch");
  }

  VecZ x_;
};

inline LatticeVector operator*(const MatZ& a, const LatticeVector& v) { return LatticeVector(braidcong::apply(a, v.coords())); }

/// Gcd of the coordinates (0 for the zero vector).
inline BigInt content(const LatticeVector& v) {
  BigInt g = 0;
  for (const auto& a : v.coords()) g = gcd(g, a);
  return g;
}

}  // namespace braidcong
