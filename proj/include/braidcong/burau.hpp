#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braidcong/braid.hpp"
#include "braidcong/errors.hpp"
#include "braidcong/form.hpp"
#include "braidcong/lattice.hpp"
#include "braidcong/matrix.hpp"
#include "braidcong/mutation.hpp"

namespace braidcong {

/// The 2x2 block (1-t, 1; t, 0) that sigma_i contributes at rows/columns i, i+1.
inline MatL burau_block() {
  const LaurentPoly t = LaurentPoly::t();
  if constexpr (active_mutation == Mutation::burau_block) {
    return MatL::from_rows({{LaurentPoly(1) - t, t}, {LaurentPoly(1), LaurentPoly(0)}});
  }
  return MatL::from_rows({{LaurentPoly(1) - t, LaurentPoly(1)}, {t, LaurentPoly(0)}});
}

/// Unreduced Burau image of sigma_i^{sign} in GL_n(Z[t, t^-1]).
inline MatL burau_generator(int n, int index, int sign) {
  if (index < 1 || index > n - 1) throw std::invalid_argument("generator index out of range");
  MatL block = burau_block();
  if (sign < 0) {
    // det of the block is -t (a unit); inverse = adj / det.
    const LaurentPoly det = block(0, 0) * block(1, 1) - block(0, 1) * block(1, 0);
    if (det.terms().size() != 1) throw std::logic_error("Burau block determinant is not a unit");
    const auto& [e, c] = *det.terms().begin();
    if (c != 1 && c != -1) throw std::logic_error("Burau block determinant is not a unit");
    const LaurentPoly inv_det = LaurentPoly::monomial(c, -e);
    block = MatL::from_rows({{inv_det * block(1, 1), -(inv_det * block(0, 1))},
                             {-(inv_det * block(1, 0)), inv_det * block(0, 0)}});
  }
  MatL m = MatL::identity(static_cast<std::size_t>(n));
  const auto i = static_cast<std::size_t>(index - 1);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m(i + r, i + c) = block(r, c);
  return m;
}

inline MatL unreduced_burau(const BraidWord& w) {
  MatL m = MatL::identity(static_cast<std::size_t>(w.strands()));
  for (int s : w.letters()) m = m * burau_generator(w.strands(), s > 0 ? s : -s, s > 0 ? 1 : -1);
  return m;
}

namespace detail {

struct IntegralBlocks {
  std::array<BigInt, 4> forward;  // row-major 2x2
  std::array<BigInt, 4> backward;
};

inline const IntegralBlocks& integral_blocks() {
  static const IntegralBlocks blocks = [] {
    IntegralBlocks b;
    const MatZ f = eval_at_minus_one(burau_block());
    const MatZ inv = inverse(f);
    b.forward = {f(0, 0), f(0, 1), f(1, 0), f(1, 1)};
    b.backward = {inv(0, 0), inv(0, 1), inv(1, 0), inv(1, 1)};
    return b;
  }();
  return blocks;
}

}  // namespace detail

/// Right-multiplies m in place by rho_n(sigma_i^{sign}); only columns i, i+1 change.
inline void right_multiply_generator(MatZ& m, int signed_letter) {
  const auto& blocks = detail::integral_blocks();
  const auto& b = signed_letter > 0 ? blocks.forward : blocks.backward;
  const std::size_t i = static_cast<std::size_t>((signed_letter > 0 ? signed_letter : -signed_letter) - 1);
  for (std::size_t r = 0; r < m.dim(); ++r) {
    const BigInt x = m(r, i);
    const BigInt y = m(r, i + 1);
    m(r, i) = x * b[0] + y * b[2];
    m(r, i + 1) = x * b[1] + y * b[3];
  }
}

/// Applies rho_n(sigma_i^{sign}) to a column vector in place (rows i, i+1 change).
inline void apply_generator(LatticeVector& v, int signed_letter) {
  const auto& blocks = detail::integral_blocks();
  const auto& b = signed_letter > 0 ? blocks.forward : blocks.backward;
  const std::size_t i = static_cast<std::size_t>((signed_letter > 0 ? signed_letter : -signed_letter) - 1);
  const BigInt x = v[i];
  const BigInt y = v[i + 1];
  v[i] = b[0] * x + b[1] * y;
  v[i + 1] = b[2] * x + b[3] * y;
}

/// The integral Burau representation rho_n (t = -1).
inline MatZ integral_burau(const BraidWord& w) {
  MatZ m = MatZ::identity(static_cast<std::size_t>(w.strands()));
  for (int s : w.letters()) right_multiply_generator(m, s);
  return m;
}

/// rho_n(w) * v, computed letter by letter from the right.
inline LatticeVector act(const BraidWord& w, LatticeVector v) {
  if (v.dim() != static_cast<std::size_t>(w.strands())) throw std::invalid_argument("act: dimension mismatch");
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) apply_generator(v, *it);
  return v;
}

/// Matrix of T_x for the Burau form.
inline MatZ transvection(const LatticeVector& x) {
  const std::size_t n = x.dim();
  VecZ row(n, BigInt(0));
  for (std::size_t j = 1; j <= n; ++j) row[j - 1] = form(LatticeVector::e(n, j), x);
  MatZ t = MatZ::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) t(i, j) -= x[i] * row[j];
  }
  return t;
}

struct LatticeFlags {
  bool in_w = false;
  bool in_v = false;
};

/// W_n: coordinate sum zero. V_n: Z^n for even n, W_n for odd n.
inline LatticeFlags lattice_membership(const LatticeVector& x) {
  LatticeFlags f;
  f.in_w = x.coordinate_sum() == 0;
  f.in_v = x.dim() % 2 == 0 ? true : f.in_w;
  return f;
}

/// w = e_1 - e_2 + ... + (-1)^{n-1} e_n.
inline LatticeVector w_vector(std::size_t n) {
  if (n < 2) throw std::invalid_argument("w_vector needs n >= 2");
  LatticeVector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = i % 2 == 0 ? 1 : -1;
  return w;
}

/// For odd n: z = v + k w with v in W_n.
inline std::pair<LatticeVector, BigInt> split_odd(const LatticeVector& z) {
  if (z.dim() % 2 == 0) throw std::invalid_argument("split_odd needs odd n");
  const BigInt k = z.coordinate_sum();  // w has coordinate sum 1
  return {z - k * w_vector(z.dim()), k};
}

/// A basis (a_1, b_1, ..., a_g, b_g) of V_n with <a_i, b_i> = 1 and all
/// other pairings zero.
struct SymplecticBasis {
  std::size_t n = 0;
  std::vector<LatticeVector> vectors;

  std::size_t genus() const { return vectors.size() / 2; }

  /// Gram matrix of the basis vectors.
  MatZ gram() const {
    MatZ g(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
      for (std::size_t j = 0; j < vectors.size(); ++j) g(i, j) = form(vectors[i], vectors[j]);
    return g;
  }

  /// Coordinates of z in this basis; throws if z is not in their span.
  VecZ coordinates(const LatticeVector& z) const {
    VecZ out(vectors.size());
    LatticeVector back(n);
    for (std::size_t i = 0; i < genus(); ++i) {
      const LatticeVector& a = vectors[2 * i];
      const LatticeVector& b = vectors[2 * i + 1];
      out[2 * i] = form(z, b);
      out[2 * i + 1] = -form(z, a);
      back = back + out[2 * i] * a + out[2 * i + 1] * b;
    }
    if (back != z) throw PreconditionError("vector " + z.to_string() + " is not in V_n");
    return out;
  }

  /// Columns = basis vectors written in the natural basis of V_n (e-basis for
  /// even n, c-basis for odd n).
  MatZ change_of_basis() const {
    const std::size_t r = vectors.size();
    MatZ m(r);
    for (std::size_t j = 0; j < r; ++j) {
      VecZ col = n % 2 == 0 ? vectors[j].coords() : vectors[j].c_coords();
      for (std::size_t i = 0; i < r; ++i) m(i, j) = col[i];
    }
    return m;
  }
};

/// Integer symplectic reduction: repeatedly take the first pair of remaining
/// vectors with pairing +-1, then project the rest onto their orthogonal complement.
inline SymplecticBasis symplectic_basis(std::size_t n) {
  if (n < 2) throw std::invalid_argument("symplectic_basis needs n >= 2");
  std::vector<LatticeVector> rest;
  if (n % 2 == 0) {
    for (std::size_t i = 1; i <= n; ++i) rest.push_back(LatticeVector::e(n, i));
  } else {
    for (std::size_t i = 1; i < n; ++i) rest.push_back(LatticeVector::c(n, i));
  }
  SymplecticBasis basis{n, {}};
  while (!rest.empty()) {
    std::size_t pi = rest.size(), pj = rest.size();
    BigInt pairing = 0;
    for (std::size_t i = 0; i < rest.size() && pi == rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        pairing = form(rest[i], rest[j]);
        if (pairing == 1 || pairing == -1) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == rest.size()) throw std::runtime_error("symplectic reduction failed: no unit pairing");
    LatticeVector a = rest[pi], b = rest[pj];
    if (pairing == -1) std::swap(a, b);
    std::vector<LatticeVector> next;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (k == pi || k == pj) continue;
      const LatticeVector& z = rest[k];
      next.push_back(z - form(z, b) * a + form(z, a) * b);
    }
    basis.vectors.push_back(std::move(a));
    basis.vectors.push_back(std::move(b));
    rest = std::move(next);
  }
  return basis;
}

/// Matrix of g restricted to V_n, in the given symplectic basis.
inline MatZ to_sp(const MatZ& g, const SymplecticBasis& basis) {
  if (g.dim() != basis.n) throw std::invalid_argument("to_sp: dimension mismatch");
  const std::size_t r = basis.vectors.size();
  MatZ m(r);
  for (std::size_t j = 0; j < r; ++j) {
    const VecZ col = basis.coordinates(g * basis.vectors[j]);  // throws if V_n is not preserved
    for (std::size_t i = 0; i < r; ++i) m(i, j) = col[i];
  }
  if (!AlternatingForm::standard(basis.genus()).preserved_by(m))
    throw PreconditionError("to_sp: matrix does not preserve the form on V_n");
  return m;
}

/// For even n: the action of g (fixing w) on w^perp / w = W_n / Zw, in the basis
/// given by the images of c_1, ..., c_{n-2}.
inline MatZ project_wperp_mod_w(const MatZ& g) {
  const std::size_t n = g.dim();
  if (n % 2 != 0 || n < 4) throw std::invalid_argument("project_wperp_mod_w needs even n >= 4");
  const LatticeVector w = w_vector(n);
  if (g * w != w) throw PreconditionError("project_wperp_mod_w: w is not fixed");
  MatZ m(n - 2);
  for (std::size_t j = 1; j <= n - 2; ++j) {
    const LatticeVector image = g * LatticeVector::c(n, j);
    if (image.coordinate_sum() != 0) throw PreconditionError("project_wperp_mod_w: W_n is not preserved");
    const VecZ lambda = image.c_coords();
    // subtract lambda_{n-1} w = lambda_{n-1} (c_1 + c_3 + ... + c_{n-1})
    for (std::size_t i = 1; i <= n - 2; ++i) m(i - 1, j - 1) = lambda[i - 1] - (i % 2 == 1 ? lambda[n - 2] : BigInt(0));
  }
  return m;
}

}  // namespace braidcong
