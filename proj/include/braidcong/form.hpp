#pragma once

#include <cstddef>
#include <stdexcept>

#include "braidcong/lattice.hpp"
#include "braidcong/matrix.hpp"
#include "braidcong/mutation.hpp"

namespace braidcong {

/// <u, v> on Z^n with <e_i, e_j> = 1 (i < j), 0 (i = j), -1 (i > j).
inline BigInt form(const LatticeVector& u, const LatticeVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("form: dimension mismatch");
  // sum_{i<j} u_i v_j - sum_{i>j} u_i v_j, with running prefix sums of u.
  BigInt below = 0;  // u_1 + ... + u_{j-1}
  BigInt total = 0;
  BigInt usum = u.coordinate_sum();
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const BigInt above = usum - below - u[j];  // u_{j+1} + ... + u_n
    total += (below - above) * v[j];
    below += u[j];
  }
  if constexpr (active_mutation == Mutation::form_sign) total = -total;
  return total;
}

/// An alternating bilinear form on Z^d given by its Gram matrix
/// G(i, j) = <e_i, e_j>.
class AlternatingForm {
 public:
  explicit AlternatingForm(MatZ gram) : g_(std::move(gram)) {
    for (std::size_t i = 0; i < g_.dim(); ++i)
      for (std::size_t j = 0; j < g_.dim(); ++j)
        if (g_(i, j) != -g_(j, i)) throw std::invalid_argument("Gram matrix is not alternating");
  }

  /// The Burau form on Z^n.
  static AlternatingForm burau(std::size_t n) {
    MatZ g(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) g(i - 1, j - 1) = form(LatticeVector::e(n, i), LatticeVector::e(n, j));
    return AlternatingForm(std::move(g));
  }

  /// Standard symplectic form on Z^{2g} in the basis (a_1, b_1, ..., a_g, b_g),
  /// <a_i, b_i> = 1.
  static AlternatingForm standard(std::size_t genus) {
    MatZ g(2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
      g(2 * i, 2 * i + 1) = 1;
      g(2 * i + 1, 2 * i) = -1;
    }
    return AlternatingForm(std::move(g));
  }

  std::size_t dim() const { return g_.dim(); }
  const MatZ& gram() const { return g_; }

  BigInt operator()(const LatticeVector& u, const LatticeVector& v) const {
    if (u.dim() != dim() || v.dim() != dim()) throw std::invalid_argument("form: dimension mismatch");
    BigInt s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) s += u[i] * g_(i, j) * v[j];
    }
    return s;
  }

  /// Matrix of T_x(v) = v - <v, x> x.
  MatZ transvection(const LatticeVector& x) const {
    const std::size_t d = dim();
    if (x.dim() != d) throw std::invalid_argument("transvection: dimension mismatch");
    VecZ row(d, BigInt(0));  // row[j] = <e_j, x>
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) row[j] += g_(j, k) * x[k];
    MatZ t = MatZ::identity(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) t(i, j) -= x[i] * row[j];
    }
    return t;
  }

  /// M^T G M == G.
  bool preserved_by(const MatZ& m) const { return m.dim() == dim() && m.transpose() * g_ * m == g_; }

 private:
  MatZ g_;
};

}  // namespace braidcong
