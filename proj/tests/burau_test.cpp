#include <gtest/gtest.h>

#include <random>

#include "braidcong/burau.hpp"
#include "braidcong/form.hpp"

using namespace braidcong;

namespace {

BraidWord random_word(std::mt19937_64& rng, int n, int length) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution inv(0.5);
  BraidWord w(n);
  for (int i = 0; i < length; ++i) w.push_back(inv(rng) ? -gen(rng) : gen(rng));
  return w;
}

BraidWord power(const BraidWord& w, int k) {
  BraidWord r(w.strands());
  for (int i = 0; i < k; ++i) r = r * w;
  return r;
}

}  // namespace

TEST(UnreducedBurau, FirstGeneratorBlock) {
  const MatL m = unreduced_burau(BraidWord(2, {1}));
  const LaurentPoly t = LaurentPoly::t();
  EXPECT_EQ(m(0, 0), LaurentPoly(1) - t);
  EXPECT_EQ(m(0, 1), LaurentPoly(1));
  EXPECT_EQ(m(1, 0), t);
  EXPECT_EQ(m(1, 1), LaurentPoly(0));
}

TEST(UnreducedBurau, EmptyWordIsIdentity) { EXPECT_TRUE(unreduced_burau(BraidWord(4)).is_identity()); }

TEST(UnreducedBurau, BraidRelations) {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (j == i + 1) {
          EXPECT_EQ(unreduced_burau(BraidWord(n, {i, j, i})), unreduced_burau(BraidWord(n, {j, i, j})));
        } else {
          EXPECT_EQ(unreduced_burau(BraidWord(n, {i, j})), unreduced_burau(BraidWord(n, {j, i})));
        }
      }
    }
  }
}

TEST(UnreducedBurau, InverseLetters) {
  EXPECT_TRUE(unreduced_burau(BraidWord(3, {2, -2})).is_identity());
  EXPECT_TRUE(unreduced_burau(BraidWord(3, {-1, 1})).is_identity());
}

TEST(IntegralBurau, FirstGenerator) {
  EXPECT_EQ(integral_burau(BraidWord(3, {1})), MatZ::from_rows({{2, 1, 0}, {-1, 0, 0}, {0, 0, 1}}));
}

TEST(IntegralBurau, AgreesWithLaurentSpecialization) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord w = random_word(rng, 5, 12);
    EXPECT_EQ(integral_burau(w), eval_at_minus_one(unreduced_burau(w)));
  }
}

TEST(IntegralBurau, TorelliWords) {
  EXPECT_TRUE(integral_burau(power(BraidWord(3, {1, 2}), 6)).is_identity());
  EXPECT_TRUE(integral_burau(power(BraidWord(5, {1, 2, 3, 4}), 10)).is_identity());
}

TEST(Form, Values) {
  EXPECT_EQ(form(LatticeVector::e(3, 1), LatticeVector::e(3, 2)), 1);
  EXPECT_EQ(form(LatticeVector::e(3, 2), LatticeVector::c(3, 1)), -1);
  const LatticeVector u{3, -1, 4, 2};
  EXPECT_EQ(form(u, u), 0);
}

TEST(Form, AlternatingAndBilinear) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    LatticeVector u(5), v(5), x(5);
    for (std::size_t i = 0; i < 5; ++i) u[i] = d(rng), v[i] = d(rng), x[i] = d(rng);
    EXPECT_EQ(form(u, v), -form(v, u));
    EXPECT_EQ(form(u + x, v), form(u, v) + form(x, v));
    EXPECT_EQ(form(u, v), AlternatingForm::burau(5)(u, v));
  }
}

TEST(Transvection, ZeroIsIdentity) { EXPECT_TRUE(transvection(LatticeVector(4)).is_identity()); }

TEST(Transvection, GeneratorsAreTransvections) {
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i)
      EXPECT_EQ(integral_burau(BraidWord(n, {i})), transvection(LatticeVector::c(static_cast<std::size_t>(n), static_cast<std::size_t>(i))));
}

TEST(Transvection, ScalingSquaresTheExponent) {
  const LatticeVector c1 = LatticeVector::c(3, 1);
  EXPECT_EQ(transvection(BigInt(2) * c1), mat_pow(transvection(c1), 4));
  EXPECT_EQ(transvection(BigInt(3) * c1), mat_pow(transvection(c1), 9));
  EXPECT_EQ(transvection(-c1), transvection(c1));
}

TEST(Transvection, PreservesForm) {
  const LatticeVector x{2, -1, 5, -6};
  EXPECT_TRUE(AlternatingForm::burau(4).preserved_by(transvection(x)));
}

TEST(Lattice, Membership) {
  EXPECT_TRUE(lattice_membership(LatticeVector::c(5, 2)).in_w);
  EXPECT_FALSE(lattice_membership(LatticeVector::e(3, 1)).in_v);
  EXPECT_TRUE(lattice_membership(LatticeVector::e(4, 1)).in_v);
  EXPECT_FALSE(lattice_membership(LatticeVector::e(4, 1)).in_w);
}

TEST(Lattice, WVector) {
  EXPECT_EQ(w_vector(3), (LatticeVector{1, -1, 1}));
  EXPECT_EQ(w_vector(4), LatticeVector::c(4, 1) + LatticeVector::c(4, 3));
}

TEST(Lattice, WIsFixedAndWPreserved) {
  std::mt19937_64 rng(4);
  for (int n = 3; n <= 6; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    for (int trial = 0; trial < 100; ++trial) {
      const MatZ g = integral_burau(random_word(rng, n, 15));
      EXPECT_EQ(g * w_vector(nn), w_vector(nn));
      for (std::size_t i = 1; i < nn; ++i) EXPECT_TRUE(lattice_membership(g * LatticeVector::c(nn, i)).in_w);
    }
  }
}

TEST(Lattice, OddSplitReassembles) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    LatticeVector z(5);
    for (std::size_t i = 0; i < 5; ++i) z[i] = d(rng);
    const auto [v, k] = split_odd(z);
    EXPECT_TRUE(lattice_membership(v).in_w);
    EXPECT_EQ(v + k * w_vector(5), z);
  }
}

TEST(Lattice, EvenWPerpIsW) {
  for (std::size_t n : {2u, 4u, 6u, 8u}) {
    const LatticeVector w = w_vector(n);
    // every e_i pairs with w to the same unit, so <z, w> = +-(coordinate sum of z)
    const BigInt unit = form(LatticeVector::e(n, 1), w);
    EXPECT_TRUE(unit == 1 || unit == -1);
    for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(form(LatticeVector::e(n, i), w), unit) << "n=" << n << " i=" << i;
    for (std::size_t i = 1; i < n; ++i) EXPECT_EQ(form(LatticeVector::c(n, i), w), 0);
  }
}

TEST(SymplecticBasis, StandardGram) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const SymplecticBasis b = symplectic_basis(n);
    EXPECT_EQ(b.gram(), AlternatingForm::standard(b.genus()).gram()) << "n=" << n;
    const BigInt det = determinant(b.change_of_basis());
    EXPECT_TRUE(det == 1 || det == -1) << "n=" << n;
  }
}

TEST(ToSp, GeneratorsOnThreeStrands) {
  const SymplecticBasis b = symplectic_basis(3);
  EXPECT_TRUE(to_sp(MatZ::identity(3), b).is_identity());
  EXPECT_EQ(to_sp(integral_burau(BraidWord(3, {1})), b), MatZ::from_rows({{1, 1}, {0, 1}}));
  EXPECT_EQ(to_sp(integral_burau(BraidWord(3, {2})), b), MatZ::from_rows({{1, 0}, {-1, 1}}));
}

TEST(ProjectWPerp, DiagramOnGenerators) {
  const SymplecticBasis b3 = symplectic_basis(3);
  EXPECT_TRUE(project_wperp_mod_w(MatZ::identity(4)).is_identity());
  EXPECT_EQ(project_wperp_mod_w(integral_burau(BraidWord(4, {1}))), to_sp(integral_burau(BraidWord(3, {1})), b3));
  EXPECT_EQ(project_wperp_mod_w(integral_burau(BraidWord(4, {3}))), project_wperp_mod_w(integral_burau(BraidWord(4, {1}))));
}
