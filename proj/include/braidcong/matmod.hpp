#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braidcong/bigint.hpp"
#include "braidcong/matrix.hpp"

namespace braidcong {

/// Square matrix over Z/lZ (l >= 2) with entries kept reduced in [0, l).
/// The modulus travels with the value and every binary operation checks it.
class MatMod {
 public:
  MatMod() = default;

  MatMod(std::size_t n, std::uint32_t modulus) : n_(n), mod_(modulus), a_(n * n, 0) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  MatMod(std::size_t n, std::uint32_t modulus, const std::vector<std::int64_t>& entries) : MatMod(n, modulus) {
    if (entries.size() != n * n) throw std::invalid_argument("matrix entry count does not match dimension");
    for (std::size_t k = 0; k < entries.size(); ++k) a_[k] = reduce(entries[k]);
  }

  static MatMod identity(std::size_t n, std::uint32_t modulus) {
    MatMod m(n, modulus);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
  }

  std::size_t dim() const { return n_; }
  std::uint32_t modulus() const { return mod_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t value) { a_[i * n_ + j] = reduce(value); }
  const std::vector<std::uint32_t>& entries() const { return a_; }

  friend bool operator==(const MatMod& x, const MatMod& y) {
    return x.n_ == y.n_ && x.mod_ == y.mod_ && x.a_ == y.a_;
  }
  friend bool operator!=(const MatMod& x, const MatMod& y) { return !(x == y); }

  bool is_identity() const { return *this == identity(n_, mod_); }

  friend MatMod operator*(const MatMod& x, const MatMod& y) {
    x.check_compatible(y);
    const std::size_t n = x.n_;
    MatMod r(n, x.mod_);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += static_cast<std::uint64_t>(x.a_[i * n + k]) * y.a_[k * n + j];
        r.a_[i * n + j] = static_cast<std::uint32_t>(s % x.mod_);
      }
    }
    return r;
  }

  /// Image under Z/lZ -> Z/mZ; requires m | l.
  MatMod reduce_to(std::uint32_t m) const {
    if (m < 2 || mod_ % m != 0) throw std::invalid_argument("target modulus must divide the source modulus");
    MatMod r(n_, m);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] % m;
    return r;
  }

  /// True iff the matrix is the identity modulo m (m | l; m = 1 always true).
  bool is_identity_mod(std::uint32_t m) const {
    if (m == 0 || mod_ % m != 0) throw std::invalid_argument("level must divide the modulus");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (a_[i * n_ + j] % m != (i == j ? 1u % m : 0u)) return false;
    return true;
  }

  /// Bytes per entry in the canonical encoding.
  static std::size_t entry_width(std::uint32_t modulus) { return modulus <= 256 ? 1 : (modulus <= 65536 ? 2 : 4); }

  /// Canonical little-endian encoding, injective for fixed (n, l).
  std::string encode() const {
    const std::size_t width = entry_width(mod_);
    std::string out(a_.size() * width, '\0');
    for (std::size_t k = 0; k < a_.size(); ++k)
      for (std::size_t b = 0; b < width; ++b) out[k * width + b] = static_cast<char>((a_[k] >> (8 * b)) & 0xffu);
    return out;
  }

  static MatMod decode(std::size_t n, std::uint32_t modulus, std::string_view bytes) {
    const std::size_t width = entry_width(modulus);
    if (bytes.size() != n * n * width) throw std::invalid_argument("encoded matrix has wrong length");
    MatMod m(n, modulus);
    for (std::size_t k = 0; k < n * n; ++k) {
      std::uint32_t v = 0;
      for (std::size_t b = 0; b < width; ++b)
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[k * width + b])) << (8 * b);
      if (v >= modulus) throw std::invalid_argument("encoded entry out of range");
      m.a_[k] = v;
    }
    return m;
  }

  /// Inverse over Z/lZ, via the integer adjugate of the canonical lift.
  MatMod inverse() const;

  MatZ lift() const {
    MatZ z(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) z(i, j) = a_[i * n_ + j];
    return z;
  }

 private:
  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(mod_);
    if (r < 0) r += mod_;
    return static_cast<std::uint32_t>(r);
  }

  void check_compatible(const MatMod& y) const {
    if (n_ != y.n_) throw std::invalid_argument("matrix dimension mismatch");
    if (mod_ != y.mod_) throw std::invalid_argument("modulus mismatch");
  }

  std::size_t n_ = 0;
  std::uint32_t mod_ = 0;
  std::vector<std::uint32_t> a_;
};

inline MatMod reduce_mod(const MatZ& a, std::uint32_t modulus) {
  MatMod r(a.dim(), modulus);
  const BigInt l = modulus;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.set(i, j, static_cast<std::int64_t>(mod_floor(a(i, j), l)));
  return r;
}

/// Adjugate of an integer matrix by cofactor expansion (Laplace). Intended for
/// small dimensions.
inline MatZ adjugate(const MatZ& a) {
  const std::size_t n = a.dim();
  MatZ adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MatZ minor(n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      BigInt cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

inline MatMod MatMod::inverse() const {
  const MatZ z = lift();
  const BigInt det = mod_floor(determinant(z), BigInt(mod_));
  auto [g, s, t] = ext_gcd(det, BigInt(mod_));
  if (g != 1) throw std::invalid_argument("matrix is not invertible modulo " + std::to_string(mod_));
  const MatZ adj = adjugate(z);
  MatMod r(n_, mod_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      r.set(i, j, static_cast<std::int64_t>(mod_floor(adj(i, j) * s, BigInt(mod_))));
  return r;
}

/// A matrix read from the text format: "n l" header (l = 0 means over Z),
/// then n rows of n integers.
using ParsedMatrix = std::variant<MatZ, MatMod>;

inline ParsedMatrix parse_matrix(std::istream& in) {
  std::size_t n = 0;
  std::int64_t l = -1;
  if (!(in >> n >> l) || n == 0 || l < 0 || l == 1 || l > 0xffffffffLL)
    throw std::invalid_argument("malformed matrix header: expected 'n l' with n >= 1 and l = 0 or l >= 2");
  MatZ z(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("matrix text ended early");
      z(i, j) = parse_bigint(tok);
    }
  }
  if (l == 0) return z;
  return reduce_mod(z, static_cast<std::uint32_t>(l));
}

inline ParsedMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline std::string format_matrix(const MatMod& a) {
  std::ostringstream out;
  out << a.dim() << ' ' << a.modulus() << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace braidcong
