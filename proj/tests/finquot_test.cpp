#include <gtest/gtest.h>

#include <random>

#include "braidcong/shadows.hpp"

using namespace braidcong;

namespace {

// |SL_2(Z/p)| by checking every 2x2 matrix.
std::size_t brute_force_sl2(std::uint32_t p) {
  std::size_t count = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p == 1) ++count;
  return count;
}

BraidWord power(const BraidWord& w, int k) {
  BraidWord r(w.strands());
  for (int i = 0; i < k; ++i) r = r * w;
  return r;
}

}  // namespace

TEST(Enumerate, TrivialGenerator) {
  EXPECT_EQ(enumerate({{"id", MatMod::identity(3, 5)}}).order(), 1u);
}

TEST(Enumerate, GammaThreeModTwo) { EXPECT_EQ(gamma_mod(3, 2).order(), 6u); }

TEST(Enumerate, GammaThreeModPrimesMatchesBruteForce) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const std::size_t expected = brute_force_sl2(p);
    EXPECT_EQ(gamma_mod(3, p).order(), expected) << "p=" << p;
    EXPECT_EQ(symplectic_order_formula(1, p), expected);
  }
  EXPECT_EQ(gamma_mod(3, 5).order(), 120u);
}

TEST(Enumerate, SymplecticOrdersMatchFormula) {
  for (std::uint32_t l : {2u, 3u, 4u, 6u, 8u}) EXPECT_EQ(BigInt(symplectic_mod(1, l).order()), symplectic_order_formula(1, l));
  EXPECT_EQ(BigInt(symplectic_mod(2, 2).order()), symplectic_order_formula(2, 2));
  EXPECT_EQ(BigInt(symplectic_mod(2, 3).order()), symplectic_order_formula(2, 3));
}

TEST(Enumerate, CapRaisesBudgetExceededWithPartialCount) {
  try {
    gamma_mod(3, 6, 10);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GE(e.partial(), 10u);
    EXPECT_NE(std::string(e.what()).find("budget exceeded"), std::string::npos);
  }
}

TEST(Enumerate, WitnessesReproduceElements) {
  const GroupEnumeration g = gamma_mod(4, 3);
  for (std::size_t i = 0; i < g.order(); i += 7) EXPECT_EQ(g.evaluate(g.witness(i)), g.element(i));
  EXPECT_TRUE(g.witness(0).empty());
}

TEST(Enumerate, FindAndContains) {
  const GroupEnumeration g = gamma_mod(3, 4);
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.find(g.element(i)), std::optional<std::size_t>(i));
  EXPECT_FALSE(g.contains(MatMod(3, 4, {2, 0, 0, 0, 1, 0, 0, 0, 1})));
}

TEST(NormalClosure, IdentitySeedIsTrivial) {
  const GroupEnumeration g = gamma_mod(3, 4);
  EXPECT_EQ(normal_closure(g, {MatMod::identity(3, 4)}).order(), 1u);
}

TEST(NormalClosure, SquareOfFirstGeneratorModFour) {
  const GroupEnumeration g = gamma_mod(3, 4);
  const MatMod seed = reduce_mod(integral_burau(BraidWord::generator(3, 1, 2)), 4);
  const GroupEnumeration h = normal_closure(g, {seed});
  EXPECT_EQ(h.order(), 8u);
  EXPECT_EQ(g.order() % h.order(), 0u);
}

TEST(NormalClosure, ConjugationInvariant) {
  const GroupEnumeration g = gamma_mod(4, 3);
  const GroupEnumeration h = normal_closure(g, {reduce_mod(integral_burau(BraidWord::generator(4, 1, 3)), 3)});
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> gi(0, g.order() - 1), hi(0, h.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const MatMod a = g.element(gi(rng));
    EXPECT_TRUE(h.contains(a * h.element(hi(rng)) * a.inverse()));
  }
}

TEST(NormalClosure, RejectsSeedOutsideAmbient) {
  const GroupEnumeration g = gamma_mod(3, 2);
  EXPECT_THROW(normal_closure(g, {MatMod(3, 2, {1, 1, 0, 0, 1, 0, 0, 0, 1})}), PreconditionError);
}

TEST(Filter, LevelOneIsEverything) {
  const GroupEnumeration g = gamma_mod(3, 4);
  EXPECT_EQ(congruence_filter(g, 1).size(), g.order());
}

TEST(Filter, KernelSizes) {
  EXPECT_EQ(congruence_filter(symplectic_mod(1, 4), 2).size(), 8u);
  EXPECT_EQ(congruence_filter(symplectic_mod(2, 4), 2).size(), 1024u);
}

TEST(Filter, IsNormalSubgroup) {
  const GroupEnumeration g = gamma_mod(3, 8);
  const auto idx = congruence_filter(g, 4);
  EXPECT_EQ(g.order() % idx.size(), 0u);
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<std::size_t> gi(0, g.order() - 1), fi(0, idx.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const MatMod a = g.element(idx[fi(rng)]), b = g.element(idx[fi(rng)]), c = g.element(gi(rng));
    EXPECT_TRUE((a * b).is_identity_mod(4));
    EXPECT_TRUE((c * a * c.inverse()).is_identity_mod(4));
  }
}

TEST(Filter, RejectsNonDivisorLevel) { EXPECT_THROW(congruence_filter(gamma_mod(3, 4), 3), std::invalid_argument); }

TEST(Shadows, LevelFromDoubleLevel) {
  const ShadowReport r32 = shadow_check_thm41(3, 2);
  EXPECT_TRUE(r32.pass) << r32.to_text();
  EXPECT_NE(r32.to_text().find("closure_order: 8"), std::string::npos);
  EXPECT_NE(r32.to_text().find("filter_order: 8"), std::string::npos);
  EXPECT_TRUE(shadow_check_thm41(3, 3).pass);
  EXPECT_TRUE(shadow_check_thm41(3, 4).pass);
  EXPECT_TRUE(shadow_check_thm41(4, 2).pass);
}

TEST(Shadows, PowerOfTwoLevels) {
  EXPECT_TRUE(shadow_check_lemma42(3, 1).pass);
  EXPECT_TRUE(shadow_check_lemma42(3, 2).pass);
  EXPECT_TRUE(shadow_check_lemma42(4, 1).pass);
}

TEST(Shadows, TransvectionPowersGenusOne) {
  EXPECT_TRUE(shadow_check_mennicke(1, 1).pass);
  EXPECT_TRUE(shadow_check_mennicke(1, 2).pass);
  EXPECT_TRUE(shadow_check_mennicke(1, 3).pass);
}

TEST(Shadows, CorollaryTwoStrands) {
  for (std::uint32_t m = 1; m <= 6; ++m) EXPECT_TRUE(corollary_shadow(2, m, {}).pass) << "m=" << m;
}

TEST(Shadows, CorollaryThreeStrandsWithTorelliWord) {
  EXPECT_TRUE(corollary_shadow(3, 4, {power(BraidWord(3, {1, 2}), 6)}).pass);
}

TEST(Shadows, ReportFormatIsStable) {
  const std::string a = shadow_check_thm41(3, 2).to_text();
  EXPECT_EQ(a, shadow_check_thm41(3, 2).to_text());
  EXPECT_EQ(a.rfind("check: ", 0), 0u);
  EXPECT_NE(a.find("status: PASS\n"), std::string::npos);
}

TEST(Shadows, MismatchReportsDivergence) {
  // Level 2 filter inside Gamma_3 mod 4 versus closure of the cube: the cube
  // is not the identity mod 2, so the sets differ.
  const GroupEnumeration g = gamma_mod(3, 4);
  const GroupEnumeration h = normal_closure(g, {reduce_mod(integral_burau(BraidWord::generator(3, 1, 3)), 4)});
  ShadowReport r;
  r.check = "mismatch";
  EXPECT_FALSE(detail::compare_with_subset(g, congruence_filter(g, 2), h, r, "closure", "filter"));
  EXPECT_FALSE(r.divergence.empty());
}
