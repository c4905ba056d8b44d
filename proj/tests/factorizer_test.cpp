#include <gtest/gtest.h>

#include <random>

#include "braidcong/factorizer.hpp"

using namespace braidcong;

namespace {

LatticeVector random_c_vector(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  VecZ lambda;
  for (int i = 1; i < n; ++i) lambda.emplace_back(d(rng));
  return LatticeVector::from_c_coords(lambda);
}

BraidWord random_word(std::mt19937_64& rng, int n, int length) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution inv(0.5);
  BraidWord w(n);
  for (int i = 0; i < length; ++i) w.push_back(inv(rng) ? -gen(rng) : gen(rng));
  return w;
}

LatticeVector cvec(std::initializer_list<long long> lambda) {
  VecZ v;
  for (long long x : lambda) v.emplace_back(x);
  return LatticeVector::from_c_coords(v);
}

MatZ product(int n, const std::vector<CertificateFactor>& fs) {
  MatZ p = MatZ::identity(static_cast<std::size_t>(n));
  for (const auto& f : fs) p = p * factor_matrix(n, f);
  return p;
}

BigInt lambda(const LatticeVector& x, int i) { return x.c_coords()[static_cast<std::size_t>(i - 1)]; }

}  // namespace

TEST(EuclideanReduce, AlreadyReduced) {
  const auto [g, x1] = euclidean_reduce(4, LatticeVector::c(4, 3));
  EXPECT_TRUE(g.empty());
  EXPECT_EQ(x1, LatticeVector::c(4, 3));
}

TEST(EuclideanReduce, MiddleVectorOnFourStrands) {
  const LatticeVector x = LatticeVector::c(4, 2);
  const auto [g, x1] = euclidean_reduce(4, x);
  EXPECT_EQ(lambda(x1, 2), 0);
  EXPECT_EQ(integral_burau(g) * x, x1);
  EXPECT_EQ(abs(lambda(x1, 1) - lambda(x1, 3)), 1);
}

TEST(EuclideanReduce, RandomSamples) {
  std::mt19937_64 rng(41);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const LatticeVector x = random_c_vector(rng, n, 5);
      const auto [g, x1] = euclidean_reduce(n, x);
      EXPECT_EQ(lambda(x1, n - 2), 0);
      EXPECT_EQ(integral_burau(g) * x, x1);
      for (int letter : g.letters()) EXPECT_GE(std::abs(letter), n - 2);
    }
  }
}

TEST(EuclideanReduce, RejectsVectorsOutsideW) { EXPECT_THROW(euclidean_reduce(4, LatticeVector::e(4, 1)), PreconditionError); }

TEST(OrbitSearch, TargetNeedsNoWord) { EXPECT_TRUE(orbit_to_target(4, LatticeVector::c(4, 3)).empty()); }

TEST(OrbitSearch, RandomOrbitPoints) {
  std::mt19937_64 rng(42);
  for (int n = 4; n <= 6; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    for (int trial = 0; trial < 100; ++trial) {
      const BraidWord g0 = random_word(rng, n, 12);
      const LatticeVector y = integral_burau(g0) * LatticeVector::c(nn, nn - 1);
      // orbit points stay congruent to c_{n-1} mod 2 only when the image mod 2 fixes it
      bool even = true;
      for (const auto& c : (y - LatticeVector::c(nn, nn - 1)).coords()) even = even && c % 2 == 0;
      if (!even) continue;
      const BraidWord g = orbit_to_target(n, y);
      EXPECT_EQ(integral_burau(g) * y, LatticeVector::c(nn, nn - 1));
    }
  }
}

TEST(OrbitSearch, RejectsBadTargets) {
  EXPECT_THROW(orbit_to_target(4, BigInt(2) * LatticeVector::c(4, 1)), PreconditionError);
  EXPECT_THROW(orbit_to_target(4, LatticeVector::c(4, 1)), PreconditionError);
}

TEST(OrbitSearch, TinyBudgetFailsLoudly) {
  std::mt19937_64 rng(47);
  const LatticeVector target = LatticeVector::c(5, 4);
  int tested = 0;
  for (int attempt = 0; attempt < 1000 && tested < 5; ++attempt) {
    BraidWord squares(5);  // squares of generators are the identity mod 2
    const BraidWord base = random_word(rng, 5, 6);
    for (int letter : base.letters()) squares = squares * BraidWord(5, {letter, letter});
    const LatticeVector y = integral_burau(squares) * target;
    bool even = true;
    BigInt size = 0;
    for (const auto& c : (y - target).coords()) {
      even = even && c % 2 == 0;
      size += abs(c);
    }
    bool adjacent = false;  // one expansion would already reach +-target
    for (int mv : {1, -1, 2, -2, 3, -3, 4, -4}) {
      const LatticeVector z = act(BraidWord(5, {mv}), y);
      adjacent = adjacent || z == target || z == -target;
    }
    if (!even || size < 8 || adjacent) continue;
    ++tested;
    EXPECT_THROW(orbit_to_target(5, y, {0, 1}), BudgetExceeded);
    EXPECT_EQ(integral_burau(orbit_to_target(5, y)) * y, target);
  }
  EXPECT_EQ(tested, 5);
}

TEST(StepTwo, WorkedExampleOnFourStrands) {
  const LatticeVector x = LatticeVector::c(4, 1);
  const auto [y, k] = step_two_y(4, x, 1);
  EXPECT_EQ(k, 3);
  EXPECT_EQ(y, BigInt(3) * LatticeVector::c(4, 3));
  const MatZ lhs = mat_pow(transvection(x), 2) * mat_pow(transvection(x + y), 2);
  const MatZ rhs = transvection(BigInt(2) * x + y) * transvection(y);
  EXPECT_EQ(lhs, rhs);
}

TEST(StepTwo, OrthogonalityAndParity) {
  std::mt19937_64 rng(43);
  for (int n = 3; n <= 6; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    for (int trial = 0; trial < 100; ++trial) {
      VecZ lam = random_c_vector(rng, n, 5).c_coords();
      lam[nn - 3] = 0;
      const LatticeVector x = LatticeVector::from_c_coords(lam);
      for (int sign : {1, -1}) {
        const LatticeVector y = step_two_y(n, x, sign).first;
        EXPECT_EQ(form(x, y), 0);
        const LatticeVector d = BigInt(2) * x + y - LatticeVector::c(nn, nn - 1);
        EXPECT_EQ(d.coordinate_sum(), 0);
        for (const auto& c : d.coords()) EXPECT_EQ(c % 2, 0);
      }
    }
  }
}

TEST(StepTwo, FactorsCertifyTheExchange) {
  std::mt19937_64 rng(44);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      VecZ lam = random_c_vector(rng, n, 4).c_coords();
      lam[static_cast<std::size_t>(n - 3)] = 0;
      const LatticeVector x = LatticeVector::from_c_coords(lam);
      for (BigInt m : {BigInt(1), BigInt(2)}) {
        const StepTwoResult r = step_two_factors(n, m, x, 1);
        EXPECT_EQ(mat_pow(transvection(x), 2 * m), product(n, r.factors) * mat_pow(transvection(r.next), -2 * m));
      }
    }
  }
}

TEST(StepTwo, RejectsNonzeroMiddleCoordinate) { EXPECT_THROW(step_two_factors(4, 1, cvec({0, 1, 0}), 1), PreconditionError); }

TEST(StepThree, ZeroLastCoordinate) {
  const StepThreeResult r = step_three_normalize(4, 1, cvec({2, 0, 0}));
  EXPECT_EQ(r.l_moves, 0u);
  EXPECT_EQ(r.reduced, cvec({2, 0, 0}));
}

TEST(StepThree, WorkedExample) {
  const LatticeVector x = cvec({1, 0, 5});
  const StepThreeResult r = step_three_normalize(4, 1, x);
  EXPECT_LE(r.l_moves, 2u * (1 + 5));
  EXPECT_EQ(lambda(r.reduced, 3), 0);
  EXPECT_EQ(lambda(r.reduced, 2), 0);
}

TEST(StepThree, IdentityAndMoveBound) {
  std::mt19937_64 rng(45);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      VecZ lam = random_c_vector(rng, n, 5).c_coords();
      lam[static_cast<std::size_t>(n - 3)] = 0;
      const LatticeVector x = LatticeVector::from_c_coords(lam);
      const BigInt a = n >= 4 ? lam[static_cast<std::size_t>(n - 4)] : BigInt(0);
      const BigInt b = lam[static_cast<std::size_t>(n - 2)];
      const StepThreeResult r = step_three_normalize(n, 1, x);
      EXPECT_LE(BigInt(r.l_moves), 2 * (abs(a) + abs(b) + 1));
      if (a == 0) {
        EXPECT_LE(BigInt(r.l_moves), 2 * (abs(b) + 1));
      }
      const MatZ middle = mat_pow(transvection(r.reduced), r.inverted ? -2 : 2);
      EXPECT_EQ(product(n, r.prefix) * middle * product(n, r.suffix), mat_pow(transvection(x), 2));
    }
  }
}

TEST(Factorize, ZeroVector) {
  const FactorCertificate c = factor_T2m(4, 2, LatticeVector(4));
  EXPECT_TRUE(c.factors.empty());
  EXPECT_TRUE(verify_certificate(c));
}

TEST(Factorize, TwoStrandBaseCase) {
  const FactorCertificate c = factor_T2m(2, 3, cvec({2}));
  ASSERT_EQ(c.factors.size(), 1u);
  EXPECT_EQ(c.factors[0].exponent, 24);
  EXPECT_TRUE(c.factors[0].witness.empty());
  EXPECT_EQ(factor_matrix(2, c.factors[0]), mat_pow(transvection(LatticeVector::c(2, 1)), 24));
}

TEST(Factorize, FiveStrandAllOnes) {
  const LatticeVector x = cvec({1, 1, 1, 1});
  const FactorCertificate c = factor_T2m(5, 2, x);
  EXPECT_TRUE(verify_certificate(c));
  EXPECT_EQ(product(5, c.factors), mat_pow(transvection(x), 4));
}

TEST(Factorize, RandomInstancesVerify) {
  std::mt19937_64 rng(46);
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int trial = 0; trial < 10; ++trial) {
        const FactorCertificate c = factor_T2m(n, m, random_c_vector(rng, n, 5));
        EXPECT_TRUE(verify_certificate(c)) << c.to_text();
        for (const auto& f : c.factors) EXPECT_EQ(f.exponent % m, 0);
      }
    }
  }
}

TEST(Factorize, DeterministicForFixedSeed) {
  const LatticeVector x = cvec({3, -2, 4, 1, -5});
  EXPECT_EQ(factor_T2m(6, 2, x, {7, kDefaultSearchBudget}).to_text(), factor_T2m(6, 2, x, {7, kDefaultSearchBudget}).to_text());
}

TEST(Factorize, RejectsVectorsOutsideW) { EXPECT_THROW(factor_T2m(3, 1, LatticeVector::e(3, 1)), PreconditionError); }

TEST(Verify, EmptyCertificateForZero) {
  FactorCertificate c;
  c.n = 3;
  c.m = 2;
  c.x = LatticeVector(3);
  EXPECT_TRUE(verify_certificate(c));
}

TEST(Verify, TamperedExponentFails) {
  FactorCertificate c = factor_T2m(4, 2, cvec({1, -2, 3}));
  ASSERT_FALSE(c.factors.empty());
  c.factors[0].exponent += 2;  // still a multiple of m
  const VerifyResult v = verify_certificate(c);
  EXPECT_FALSE(v);
  EXPECT_NE(v.report.find("differs"), std::string::npos);
  c.factors[0].exponent += 1;
  EXPECT_FALSE(verify_certificate(c));
}

TEST(Verify, TextRoundTrip) {
  const FactorCertificate c = factor_T2m(5, 3, cvec({2, 0, -1, 3}));
  const FactorCertificate back = FactorCertificate::parse(c.to_text());
  EXPECT_EQ(back.n, c.n);
  EXPECT_EQ(back.m, c.m);
  EXPECT_EQ(back.x, c.x);
  EXPECT_EQ(back.factors, c.factors);
  EXPECT_TRUE(verify_certificate(back));
}

TEST(Verify, MalformedTextThrows) {
  EXPECT_THROW(FactorCertificate::parse(""), std::invalid_argument);
  EXPECT_THROW(FactorCertificate::parse("3 1 1\n"), std::invalid_argument);
  EXPECT_THROW(FactorCertificate::parse("3 1 1,0\n2 1 1\n"), std::invalid_argument);
}
