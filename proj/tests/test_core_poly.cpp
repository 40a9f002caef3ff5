#include <gtest/gtest.h>

#include <random>

#include "oracle_data.hpp"
#include "test_util.hpp"

using namespace xherm;

TEST(Hermite, BaseCasesAndSmallDegrees) {
  EXPECT_EQ(hermite(0), (IntPoly{1}));
  EXPECT_EQ(hermite(1), (IntPoly{0, 2}));
  EXPECT_EQ(hermite(2), (IntPoly{-2, 0, 4}));
  EXPECT_EQ(hermite(3), (IntPoly{0, -12, 0, 8}));
}

TEST(Hermite, ParityAndLeadingCoefficient) {
  for (int n = 0; n <= 50; ++n) {
    const IntPoly h = hermite(n);
    ASSERT_EQ(h.degree(), n);
    EXPECT_EQ(h.leading(), mpz_class(1) << n);
    for (int k = n - 1; k >= 0; k -= 2) EXPECT_EQ(h[k], 0) << "n=" << n << " k=" << k;
    EXPECT_EQ(h.reflected(), n % 2 ? -h : h);
  }
}

TEST(Hermite, RangeMatchesSingle) {
  auto hs = hermite_range(7, 19);
  ASSERT_EQ(hs.size(), 13u);
  for (int n = 7; n <= 19; ++n) EXPECT_EQ(hs[static_cast<std::size_t>(n - 7)], hermite(n));
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(IntPoly{-2, 0, 4}), (IntPoly{0, 8}));
  EXPECT_EQ(derivative(hermite(3)), (IntPoly{-12, 0, 24}));
  EXPECT_EQ(derivative(hermite(3)), hermite(2) * mpz_class(6));
  const IntPoly p{3, -1, 4, 1, -5};
  EXPECT_EQ(derivative(p, 0), p);
  EXPECT_TRUE(derivative(IntPoly{7}).is_zero());
}

TEST(Derivative, HermiteIdentity) {
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(derivative(hermite(n)), hermite(n - 1) * mpz_class(2 * n));
}

TEST(Wronskian, Examples) {
  const IntPoly p{5, 0, -3, 2};
  EXPECT_EQ(wronskian({p}), p);
  EXPECT_EQ(wronskian({hermite(1), hermite(2)}), (IntPoly{4, 0, 8}));
  EXPECT_EQ(wronskian({hermite(2), hermite(3)}), (IntPoly{24, 0, 0, 0, 32}));
  EXPECT_TRUE(wronskian({hermite(2), hermite(5), hermite(2)}).is_zero());
}

TEST(Wronskian, AlternatingUnderSwap) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    std::vector<IntPoly> fs;
    for (int i = 0; i < 4; ++i) fs.push_back(testutil::random_poly(rng, 3 + static_cast<int>(rng() % 6), 20));
    const IntPoly w = wronskian(fs);
    std::swap(fs[0], fs[2]);
    EXPECT_EQ(wronskian(fs), -w);
  }
}

TEST(Wronskian, MatchesCofactorExpansion) {
  // Bareiss path against the explicit 2x2 and 3x3 formulas.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    IntPoly a = testutil::random_poly(rng, 6, 30), b = testutil::random_poly(rng, 4, 30),
            c = testutil::random_poly(rng, 5, 30);
    EXPECT_EQ(wronskian({a, b}), a * derivative(b) - derivative(a) * b);
    EXPECT_EQ(determinant(derivative_matrix({a, b, c}, 3)), detail::det3(derivative_matrix({a, b, c}, 3)));
  }
}

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_real_root_count(IntPoly{-2, 0, 4}), 2);
  EXPECT_EQ(sturm_real_root_count(IntPoly{4, 0, 8}), 0);
  EXPECT_EQ(sturm_real_root_count(IntPoly{0, 192, 0, 128}), 1);
}

TEST(Sturm, HalfOpenInterval) {
  const IntPoly h2{-2, 0, 4};  // zeros at +-0.7071
  EXPECT_EQ(sturm_real_root_count(h2, Endpoint::at(0), Endpoint::pos_inf()), 1);
  EXPECT_EQ(sturm_real_root_count(h2, Endpoint::at(mpq_class(-1)), Endpoint::at(mpq_class(1))), 2);
  EXPECT_EQ(sturm_real_root_count(h2, Endpoint::at(mpq_class(1)), Endpoint::at(mpq_class(2))), 0);
  // (x - 1)^2 (x + 2): repeated root counted once.
  const IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};
  EXPECT_EQ(sturm_real_root_count(p), 2);
}

TEST(Sturm, HermiteHasAllRealZeros) {
  for (int n = 0; n <= 50; ++n) EXPECT_EQ(sturm_real_root_count(hermite(n)), n) << n;
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(IntPoly{4, 0, 8}, IntPoly{0, 16}).degree(), 0);
  EXPECT_EQ(gcd(IntPoly{0, 0, 1}, IntPoly{0, 0, 0, 1}), (IntPoly{0, 0, 1}));
  const IntPoly p{6, 0, 4, 2};
  EXPECT_EQ(gcd(p, IntPoly{}), primitive_part(p));
}

TEST(Gcd, DividesBothInputs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const IntPoly c = testutil::random_poly(rng, static_cast<int>(rng() % 4), 10);
    const IntPoly a = c * testutil::random_poly(rng, static_cast<int>(rng() % 8), 20);
    const IntPoly b = c * testutil::random_poly(rng, static_cast<int>(rng() % 8), 20);
    const IntPoly g = gcd(a, b);
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
    if (c.degree() > 0) {
      EXPECT_TRUE(divides(primitive_part(c), g));
    }
  }
}

TEST(Gcd, SquarefreePart) {
  const IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 0, 1};
  const IntPoly q = squarefree_part(p);
  EXPECT_EQ(q.degree(), 3);
  EXPECT_TRUE(divides(q, p));
  EXPECT_EQ(gcd(q, derivative(q)).degree(), 0);
}

TEST(EvalBigFloat, Examples) {
  const IntPoly h{4, 0, 8};
  EXPECT_EQ(eval_bigfloat(h, BigFloat(0.0, 128)).value.re().to_double(), 4.0);
  EXPECT_EQ(eval_bigfloat(hermite(2), BigFloat(1.0, 128)).value.re().to_double(), 2.0);
  // i / sqrt(2) is a zero of 8x^2 + 4.
  BigFloat im(2L, 256);
  im = sqrt(im);
  im = BigFloat(1L, 256) / im;
  Evaluation e = eval_bigfloat(h, BigComplex(BigFloat(256), im), 256);
  EXPECT_LT(e.value.abs().to_double(), 1e-70);
  EXPECT_LE(e.value.abs().to_double(), e.error_bound.to_double());
}

TEST(EvalBigFloat, ErrorBoundHoldsAgainstDoubledPrecision) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 25; ++t) {
    const int d = 1 + static_cast<int>(rng() % 200);
    const IntPoly p = testutil::random_poly(rng, d, 80);
    const BigComplex z(std::complex<double>(u(rng), u(rng)), 128);
    const Evaluation lo = eval_bigfloat(p, z, 128);
    const Evaluation hi = eval_bigfloat(p, z, 512);
    BigComplex diff = lo.value - hi.value;
    EXPECT_LE(diff.abs().to_double(), lo.error_bound.to_double() * (1 + 1e-9)) << "degree " << d;
  }
}

TEST(IntPoly, DivisionRoundTrip) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const IntPoly a = testutil::random_poly(rng, 5, 30), b = testutil::random_poly(rng, 7, 30);
    EXPECT_EQ(divexact(a * b, b), a);
    EXPECT_TRUE(divides(a, a * b));
  }
}
