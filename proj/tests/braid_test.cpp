#include <gtest/gtest.h>

#include <random>

#include "braidcong/braid.hpp"
#include "braidcong/burau.hpp"

using namespace braidcong;

namespace {

BraidWord random_word(std::mt19937_64& rng, int n, int length) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution inv(0.5);
  BraidWord w(n);
  for (int i = 0; i < length; ++i) w.push_back(inv(rng) ? -gen(rng) : gen(rng));
  return w;
}

}  // namespace

TEST(BraidWord, ParseAndPrint) {
  const BraidWord w = BraidWord::parse("4: 1 2 -3 1");
  EXPECT_EQ(w.strands(), 4);
  EXPECT_EQ(w.letters(), (std::vector<int>{1, 2, -3, 1}));
  EXPECT_EQ(BraidWord::parse(w.to_string()), w);
}

TEST(BraidWord, RejectsOutOfRangeLetters) {
  EXPECT_THROW(BraidWord(3, {3}), std::invalid_argument);
  EXPECT_THROW(BraidWord(3, {0}), std::invalid_argument);
  EXPECT_ANY_THROW(BraidWord::parse("3: 1 x"));
}

TEST(BraidWord, GeneratorPowers) {
  EXPECT_EQ(BraidWord::generator(3, 2, -3).letters(), (std::vector<int>{-2, -2, -2}));
  EXPECT_TRUE(BraidWord::generator(3, 1, 0).empty());
}

TEST(FreeReduce, CancelsAdjacentInverses) {
  EXPECT_TRUE(free_reduce(BraidWord(3, {1, -1})).empty());
  EXPECT_EQ(free_reduce(BraidWord(3, {1, 2, -2, 1})), BraidWord(3, {1, 1}));
}

TEST(FreeReduce, WordTimesInverseIsEmpty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = random_word(rng, 5, 15);
    EXPECT_TRUE(free_reduce(w * w.inverse()).empty());
  }
}

TEST(FreeReduce, PreservesBurauImage) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord w = random_word(rng, 4, 20);
    EXPECT_EQ(integral_burau(free_reduce(w)), integral_burau(w));
  }
}

TEST(ConjugateWord, Basics) {
  const BraidWord h(3, {1});
  EXPECT_EQ(conjugate_word(BraidWord(3), h), h);
  EXPECT_EQ(conjugate_word(BraidWord(3, {2}), h), BraidWord(3, {2, 1, -2}));
}

TEST(ConjugateWord, ImageIsConjugateTransvectionPower) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const BraidWord g = random_word(rng, 4, 8);
    const MatZ rg = integral_burau(g);
    const MatZ lhs = integral_burau(conjugate_word(g, BraidWord::generator(4, 1, 3)));
    EXPECT_EQ(lhs, rg * mat_pow(transvection(LatticeVector::c(4, 1)), 3) * inverse(rg));
    EXPECT_EQ(lhs, mat_pow(transvection(rg * LatticeVector::c(4, 1)), 3));
  }
}

TEST(SpecialHom, ImagesOfGenerators) {
  EXPECT_EQ(special_hom_phi(BraidWord(4, {3})), BraidWord(3, {1}));
  EXPECT_TRUE(special_hom_phi(BraidWord(4, {1, -3})).empty());
  EXPECT_EQ(special_hom_phi(BraidWord(4, {2, -2, 2})), BraidWord(3, {2}));
}

TEST(SpecialHom, SectionOfInclusion) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord w = free_reduce(random_word(rng, 3, 12));
    EXPECT_EQ(special_hom_phi(include(w, 4)), w);
  }
}

TEST(Include, Basics) {
  EXPECT_EQ(include(BraidWord(2, {1}), 4), BraidWord(4, {1}));
  EXPECT_THROW(include(BraidWord(4, {3}), 3), std::invalid_argument);
}

TEST(Include, BlockDiagonalImage) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const BraidWord w = random_word(rng, 2, 7);
    EXPECT_EQ(integral_burau(include(w, 4)), integral_burau(w).direct_sum_identity(2));
  }
}

TEST(Include, Homomorphism) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const BraidWord a = random_word(rng, 3, 5), b = random_word(rng, 3, 5);
    EXPECT_EQ(include(a * b, 5), include(a, 5) * include(b, 5));
  }
}
