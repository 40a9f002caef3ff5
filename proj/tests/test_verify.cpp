#include <gtest/gtest.h>

#include <random>

#include "oracle_data.hpp"
#include "test_util.hpp"

using namespace xherm;

TEST(Ode, Examples) {
  EXPECT_TRUE(check_ode(Partition{1, 1}, 3).pass());
  EXPECT_TRUE(check_ode(Partition{4, 4, 2, 2}, 40).pass());
  for (int k = 0; k <= 20; ++k) {
    // H_k'' - 2x H_k' + 2k H_k = 0
    const IntPoly h = hermite(k);
    EXPECT_TRUE((derivative(h, 2) - x_poly() * derivative(h) * mpz_class(2) + h * mpz_class(2 * k)).is_zero());
    EXPECT_TRUE(check_ode(Partition{}, k).pass());
  }
}

TEST(Ode, RejectsForbiddenDegree) {
  EXPECT_THROW(check_ode(Partition{1, 1}, 2), DomainError);
}

TEST(PerfectDerivative, Examples) {
  EXPECT_TRUE(check_perfect_derivative(Partition{1, 1}, 3, 4).pass());
  EXPECT_TRUE(check_perfect_derivative(Partition{2, 2}, 6, 7).pass());
  EXPECT_TRUE(check_perfect_derivative(Partition{}, 6, 9).pass());
  EXPECT_THROW(check_perfect_derivative(Partition{1, 1}, 3, 3), DomainError);
}

TEST(PerfectDerivative, NonEvenPartitionsToo) {
  for (const Partition& l : partitions_up_to(5)) {
    ExceptionalFamily fam(l);
    auto ns = fam.degrees().admissible(0, l.size() + 8);
    for (std::size_t i = 0; i + 1 < ns.size(); i += 2)
      EXPECT_TRUE(check_perfect_derivative(fam, ns[i], ns[i + 1]).pass()) << l.to_string();
  }
}

TEST(Residues, Examples) {
  EXPECT_TRUE(check_residues(Partition{1, 1}, 3).pass());
  const IdentityVerdict v = check_residues(Partition{}, 7);
  EXPECT_TRUE(v.pass());
  EXPECT_TRUE(v.vacuous);
  EXPECT_TRUE(check_residues(Partition{4, 4, 2, 2}, 40).pass());
}

TEST(Residues, MultipleZeroAtOrigin) {
  // H_(2,1) = c x^3 has a triple zero at 0; the Laurent check is exact.
  for (int n : ExceptionalFamily(Partition{2, 1}).degrees().admissible(0, 14)) {
    const IdentityVerdict v = check_residues(Partition{2, 1}, n);
    EXPECT_EQ(v.outcome, Outcome::kPass) << n << " " << v.note;
  }
  EXPECT_TRUE(check_residues(Partition{3, 2, 1}, 10).pass());
}

TEST(Residues, ArbitraryPolynomialFails) {
  // A generic P paired with H_(1,1) has nonzero residues.
  ExceptionalFamily fam(Partition{1, 1});
  const IntPoly h = fam.hermite_lambda();
  const IntPoly p = IntPoly{1, 3, 0, 1};
  IntPoly b = derivative(p) * derivative(h) * mpz_class(2);
  b -= p * derivative(h, 2);
  b -= x_poly() * p * derivative(h) * mpz_class(2);
  EXPECT_FALSE(divides(squarefree_part(h), b));
}

TEST(HermiteExpansion, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const int d = 1 + static_cast<int>(rng() % 25);
    const IntPoly p = testutil::random_poly(rng, d, 30);
    const RatPoly c = hermite_expansion(p);
    RatPoly back;
    for (int k = 0; k <= c.degree(); ++k) back += to_rational(hermite(k)) * c[k];
    EXPECT_EQ(back, to_rational(p));
  }
  EXPECT_EQ(hermite_expansion(hermite(6)), RatPoly::monomial(mpq_class(1), 6));
}

TEST(HermiteWindow, Examples) {
  const IdentityVerdict a = check_hermite_window(Partition{1, 1}, 3);
  EXPECT_TRUE(a.pass());
  EXPECT_TRUE(a.vacuous);
  EXPECT_TRUE(check_hermite_window(Partition{1, 1}, 8).pass());
  for (int n = 3; n <= 12; ++n) EXPECT_TRUE(check_hermite_window(Partition{1, 1}, n).pass()) << n;
}

TEST(HermiteWindow, WidthTwoWindowFailsForDoubledTwo) {
  // P_10 for (2,2) has a nonzero H_2 coefficient, below the window
  // H_{n-|lambda|-r}..H_n; a window of width 2|lambda| closes it.
  const IdentityVerdict v = check_hermite_window(Partition{2, 2}, 10);
  EXPECT_EQ(v.outcome, Outcome::kFail);
  EXPECT_EQ(v.witness.degree(), 2);
  EXPECT_TRUE(check_hermite_window(Partition{2, 2}, 10, 8).pass());
}

TEST(Orthogonality, Examples) {
  EXPECT_TRUE(check_orthogonality(Partition{1, 1}, 3, 4).pass());
  const OrthogonalityReport c = check_orthogonality(Partition{}, 3, 6);
  EXPECT_TRUE(c.pass());
  EXPECT_LT(c.normalized, 1e-12);
  const OrthogonalityReport r = check_orthogonality(Partition{2, 2}, 6, 8);
  EXPECT_TRUE(r.pass()) << r.normalized;
  EXPECT_GE(r.history.size(), 2u);
  EXPECT_THROW(check_orthogonality(Partition{2, 1}, 3, 4), DomainError);
}

TEST(Quadrature, MatchesOracleRules) {
  for (const auto& c : oracle::kGaussHermite) {
    const auto rule = gauss_hermite<BigFloat>(c.n, 192);
    ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(c.n));
    for (int i = 0; i < c.n; ++i) {
      BigFloat dn = rule.nodes[static_cast<std::size_t>(i)] - BigFloat(c.nodes[static_cast<std::size_t>(i)], 192);
      BigFloat w(c.weights[static_cast<std::size_t>(i)], 192);
      BigFloat dw = (rule.weights[static_cast<std::size_t>(i)] - w) / w;
      EXPECT_LT(std::abs(dn.to_double()), 1e-38) << "n=" << c.n;
      EXPECT_LT(std::abs(dw.to_double()), 1e-36) << "n=" << c.n;
    }
  }
  const auto d = gauss_hermite<double>(20);
  double sum = 0;
  for (double w : d.weights) sum += w;
  EXPECT_NEAR(sum, std::sqrt(std::acos(-1.0)), 1e-14);
}

TEST(Quadrature, ExactForPolynomialsUpToDegree2nMinus1) {
  // int x^{2k} e^{-x^2} = Gamma(k + 1/2)
  const auto rule = gauss_hermite<BigFloat>(12, 192);
  for (int k = 0; k < 12; ++k) {
    BigFloat s(192);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      BigFloat t = rule.weights[i];
      for (int j = 0; j < 2 * k; ++j) t *= rule.nodes[i];
      s += t;
    }
    const double want = std::tgamma(k + 0.5);
    EXPECT_NEAR(s.to_double() / want, 1.0, 1e-14) << k;
  }
}

TEST(Quadrature, WeightedNormMatchesOracle) {
  for (const auto& c : oracle::kNorms) {
    const Partition l(c.lambda);
    ExceptionalFamily fam(l);
    const IntPoly p = fam.polynomial(c.n);
    const auto rule = cached_gauss_hermite(400, 256);
    BigFloat s(256);
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      BigFloat a = eval_bigfloat(p, rule->nodes[i], 256).value.re();
      BigFloat h = eval_bigfloat(fam.hermite_lambda(), rule->nodes[i], 256).value.re();
      s += rule->weights[i] * a * a / (h * h);
    }
    EXPECT_NEAR(s.to_double() / testutil::to_d(c.norm_n), 1.0, 1e-12) << l.to_string();
  }
}

TEST(Scan, Examples) {
  EXPECT_EQ(scan_partition(Partition{1, 1}).verdict, ScanOutcome::kAllSimple);
  EXPECT_EQ(scan_partition(Partition{2, 2}).verdict, ScanOutcome::kAllSimple);
  EXPECT_EQ(scan_partition(Partition{1}).verdict, ScanOutcome::kAllSimple);
  const ScanVerdict v = scan_partition(Partition{2, 1});
  EXPECT_EQ(v.verdict, ScanOutcome::kSimpleExceptOrigin);
  EXPECT_EQ(v.origin_multiplicity, 3);
}

TEST(Scan, MatchesOracleGcdDegrees) {
  for (const auto& c : oracle::kGcd) {
    const ScanVerdict v = scan_partition(Partition(c.lambda));
    EXPECT_EQ(v.gcd.degree(), c.gcd_degree) << v.lambda.to_string();
    EXPECT_EQ(v.origin_multiplicity, c.origin_multiplicity) << v.lambda.to_string();
  }
}

TEST(Scan, DeterministicAcrossWorkers) {
  const auto a = veselov_scan(9, 1);
  const auto b = veselov_scan(9, 6);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].lambda, b[i].lambda);
    EXPECT_EQ(a[i].gcd, b[i].gcd);
  }
}

TEST(Interlacing, Examples) {
  const InterlacingReport a = check_interlacing(Partition{1, 1}, 10);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.required, 6);
  const InterlacingReport b = check_interlacing(Partition{4, 4, 2, 2}, 40);
  EXPECT_TRUE(b.pass());
  EXPECT_EQ(b.required, 24);
  EXPECT_TRUE(check_interlacing(Partition{}, 10).skipped);
}

TEST(Parallel, PreservesOrderAndRethrows) {
  std::vector<int> in(100);
  for (int i = 0; i < 100; ++i) in[static_cast<std::size_t>(i)] = i;
  const auto out = parallel_map(in, 7, [](int v) { return v * v; });
  for (int i = 0; i < 100; ++i) EXPECT_EQ(out[static_cast<std::size_t>(i)], i * i);
  EXPECT_THROW(parallel_map(in, 4, [](int v) -> int {
                 if (v == 37) throw std::runtime_error("boom");
                 return v;
               }),
               std::runtime_error);
}
