#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcong/bigint.hpp"
#include "braidcong/errors.hpp"
#include "braidcong/form.hpp"
#include "braidcong/lattice.hpp"
#include "braidcong/matmod.hpp"
#include "braidcong/matrix.hpp"

namespace braidcong {

/// True iff a == I modulo m (m >= 1).
inline bool congruent_to_identity(const MatZ& a, const BigInt& m) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (mod_floor(a(i, j) - (i == j ? 1 : 0), m) != 0) return false;
  return true;
}

/// A symplectic lattice with a primitive vector w, a partner v with
/// <v, w> = 1 and a level m.
class StabilizerContext {
 public:
  /// Picks v deterministically: extended Euclid over the pairings <e_j, w>.
  StabilizerContext(AlternatingForm form, LatticeVector w, BigInt level)
      : form_(std::move(form)), w_(std::move(w)), m_(std::move(level)) {
    if (m_ < 1) throw std::invalid_argument("level must be at least 1");
    if (w_.dim() != form_.dim()) throw std::invalid_argument("w has the wrong dimension");
    if (content(w_) != 1) throw PreconditionError("w is not primitive");
    const std::size_t d = form_.dim();
    BigInt g = 0;
    VecZ coeff(d, BigInt(0));
    for (std::size_t j = 0; j < d; ++j) {
      const BigInt p = form_(LatticeVector::e(d, j + 1), w_);
      if (p == 0) continue;
      auto [ng, s, t] = ext_gcd(g, p);
      for (std::size_t k = 0; k < j; ++k) coeff[k] *= s;
      coeff[j] = t;
      g = ng;
    }
    if (g != 1) throw PreconditionError("no v with <v, w> = 1 exists");
    v_ = LatticeVector(coeff);
    if (form_(v_, w_) != 1) throw std::logic_error("failed to solve <v, w> = 1");
  }

  /// Standard Z^{2g} with w = a_1.
  static StabilizerContext standard(std::size_t genus, const BigInt& level) {
    return StabilizerContext(AlternatingForm::standard(genus), LatticeVector::e(2 * genus, 1), level);
  }

  const AlternatingForm& form() const { return form_; }
  const LatticeVector& w() const { return w_; }
  const LatticeVector& v() const { return v_; }
  const BigInt& level() const { return m_; }
  std::size_t dim() const { return form_.dim(); }

  /// Vectors spanning w^perp: e_j - <e_j, w> v.
  std::vector<LatticeVector> wperp_spanning_set() const {
    std::vector<LatticeVector> out;
    for (std::size_t j = 1; j <= dim(); ++j) {
      const LatticeVector e = LatticeVector::e(dim(), j);
      out.push_back(e - form_(e, w_) * v_);
    }
    return out;
  }

  /// True iff d is an integer multiple of w.
  bool is_multiple_of_w(const LatticeVector& d) const {
    std::size_t pivot = 0;
    while (w_[pivot] == 0) ++pivot;
    if (d[pivot] % w_[pivot] != 0) return false;
    return d == (d[pivot] / w_[pivot]) * w_;
  }

 private:
  AlternatingForm form_;
  LatticeVector w_;
  LatticeVector v_;
  BigInt m_;
};

/// S_x: v -> v + m x and u -> u + <u, x> m w on w^perp. Requires <x, w> = 0.
inline MatZ build_S_x(const StabilizerContext& ctx, const LatticeVector& x) {
  if (x.dim() != ctx.dim()) throw std::invalid_argument("x has the wrong dimension");
  if (ctx.form()(x, ctx.w()) != 0) throw PreconditionError("x is not orthogonal to w");
  const std::size_t d = ctx.dim();
  const BigInt& m = ctx.level();
  MatZ s(d);
  for (std::size_t j = 1; j <= d; ++j) {
    const LatticeVector z = LatticeVector::e(d, j);
    const BigInt zw = ctx.form()(z, ctx.w());
    const LatticeVector u = z - zw * ctx.v();
    const LatticeVector image = z + (m * zw) * x + (m * ctx.form()(u, x)) * ctx.w();
    for (std::size_t i = 0; i < d; ++i) s(i, j - 1) = image[i];
  }
  return s;
}

struct TransvectionPower {
  LatticeVector vector;
  BigInt exponent;
};

/// T = product of T_u^e in list order.
struct KernelCertificate {
  std::vector<TransvectionPower> factors;
  LatticeVector x;  // w^perp part of the scaled displacement, normalized to <v, x> = 0
  BigInt k;         // T = T_x^m T_{x+w}^{-m} T_w^{-k m}, or T_w^{-k m} alone when x = 0

  MatZ product(const AlternatingForm& form) const {
    MatZ p = MatZ::identity(form.dim());
    for (const auto& f : factors) p = p * mat_pow(form.transvection(f.vector), f.exponent);
    return p;
  }

  /// "EXPONENT : u1 u2 ..." per factor.
  std::string to_text(std::size_t genus, const BigInt& m) const {
    std::ostringstream out;
    out << genus << ' ' << m << '\n';
    for (const auto& f : factors) {
      out << f.exponent << " :";
      for (const auto& c : f.vector.coords()) out << ' ' << c;
      out << '\n';
    }
    return out.str();
  }
};

/// Checks T is in K = ker(Sp[m]_w -> Sp(w^perp / w)); returns the reason if not.
inline std::string kernel_membership_error(const StabilizerContext& ctx, const MatZ& t) {
  if (t.dim() != ctx.dim()) return "matrix has the wrong dimension";
  if (!ctx.form().preserved_by(t)) return "matrix is not symplectic";
  if (t * ctx.w() != ctx.w()) return "matrix does not fix w";
  if (!congruent_to_identity(t, ctx.level())) return "matrix is not the identity mod m";
  for (const auto& u : ctx.wperp_spanning_set())
    if (!ctx.is_multiple_of_w(t * u - u)) return "matrix acts nontrivially on w^perp / w";
  return {};
}

/// Writes an element of K as T_x^m T_{x+w}^{-m} T_w^{-km}, re-verified exactly.
inline KernelCertificate kernel_factorize(const StabilizerContext& ctx, const MatZ& t) {
  if (auto err = kernel_membership_error(ctx, t); !err.empty()) throw PreconditionError("kernel_factorize: " + err);
  const BigInt& m = ctx.level();
  const LatticeVector disp = t * ctx.v() - ctx.v();
  LatticeVector scaled(ctx.dim());
  for (std::size_t i = 0; i < ctx.dim(); ++i) {
    if (disp[i] % m != 0) throw PreconditionError("kernel_factorize: displacement not divisible by m");
    scaled[i] = disp[i] / m;
  }
  const BigInt c = ctx.form()(ctx.v(), scaled);
  KernelCertificate cert;
  cert.x = scaled - c * ctx.w();
  cert.k = c - 1;
  if (cert.x.is_zero()) {
    cert.k = c;
    if (c != 0) cert.factors.push_back({ctx.w(), -c * m});
  } else {
    cert.factors.push_back({cert.x, m});
    cert.factors.push_back({cert.x + ctx.w(), -m});
    if (cert.k != 0) cert.factors.push_back({ctx.w(), -cert.k * m});
  }
  if (cert.product(ctx.form()) != t) throw std::logic_error("kernel_factorize: certificate does not reproduce T");
  return cert;
}

/// B mod m for A = I + l B in Sp_{2g}(Z)[l]; J B is symmetric mod m.
class SpLieMatMod {
 public:
  explicit SpLieMatMod(MatMod b) : b_(std::move(b)) {
    if (!in_lie_algebra(b_)) throw PreconditionError("matrix is not in sp_{2g}(Z/mZ)");
  }

  static bool in_lie_algebra(const MatMod& b) {
    if (b.dim() % 2 != 0) return false;
    const MatMod j = reduce_mod(AlternatingForm::standard(b.dim() / 2).gram(), b.modulus());
    const MatMod jb = j * b;
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c)
        if (jb(r, c) != jb(c, r)) return false;
    return true;
  }

  const MatMod& matrix() const { return b_; }
  bool is_zero() const {
    for (auto e : b_.entries())
      if (e != 0) return false;
    return true;
  }

  friend SpLieMatMod operator+(const SpLieMatMod& x, const SpLieMatMod& y) {
    if (x.b_.dim() != y.b_.dim() || x.b_.modulus() != y.b_.modulus()) throw std::invalid_argument("shape mismatch");
    MatMod r(x.b_.dim(), x.b_.modulus());
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j) r.set(i, j, static_cast<std::int64_t>(x.b_(i, j)) + y.b_(i, j));
    return SpLieMatMod(r);
  }

  friend bool operator==(const SpLieMatMod& x, const SpLieMatMod& y) { return x.b_ == y.b_; }

 private:
  MatMod b_;
};

/// The Newman-Smart map Sp_{2g}(Z)[l] -> sp_{2g}(Z/mZ), A = I + l B -> B mod m.
inline SpLieMatMod newman_smart_log(const MatZ& a, const BigInt& level_l, std::uint32_t m) {
  if (a.dim() % 2 != 0) throw std::invalid_argument("newman_smart_log needs an even dimension");
  if (m < 2 || level_l < 2 || level_l % m != 0) throw std::invalid_argument("newman_smart_log needs m, l >= 2 with m | l");
  if (!AlternatingForm::standard(a.dim() / 2).preserved_by(a)) throw PreconditionError("matrix is not symplectic");
  MatMod b(a.dim(), m);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const BigInt d = a(i, j) - (i == j ? 1 : 0);
      if (d % level_l != 0) throw PreconditionError("A - I is not divisible by l");
      b.set(i, j, static_cast<std::int64_t>(mod_floor(d / level_l, BigInt(m))));
    }
  }
  return SpLieMatMod(b);
}

}  // namespace braidcong
