#include "fermat_euler/theorems.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "fermat_euler/classes.hpp"
#include "fermat_euler/report.hpp"
#include "fermat_euler/verify.hpp"

namespace fermat_euler {
namespace {

using K = Mod8Kind;

TheoremVerdict tv(Verdict v, std::string_view src) { return {v, std::string(src)}; }

TEST(PrimePowerHalfSignTest, Examples) {
  EXPECT_EQ(prime_power_half_sign(7, 1), Sign::Plus);
  EXPECT_EQ(prime_power_half_sign(3, 2), Sign::Minus);
  EXPECT_EQ(mod_pow(2, 3, 9), 8u);
  EXPECT_EQ(prime_power_half_sign(5, 1), Sign::Minus);
  EXPECT_EQ(mod_pow(2, 2, 5), 4u);
}

TEST(PrimePowerHalfSignTest, RejectsNonOddPrimes) {
  EXPECT_THROW(prime_power_half_sign(2, 1), std::domain_error);
  EXPECT_THROW(prime_power_half_sign(9, 1), std::domain_error);
  EXPECT_THROW(prime_power_half_sign(7, 0), std::domain_error);
}

TEST(PrimePowerHalfSignTest, AgreesWithModPowForSmallPrimePowers) {
  for (u64 p : primes_below(10'000)) {
    if (p == 2) continue;
    u64 q = 1;
    for (unsigned a = 1; a <= 3; ++a) {
      q *= p;
      if (q >= 10'000'000) break;
      const u64 phi = q / p * (p - 1);
      const u64 want = prime_power_half_sign(p, a) == Sign::Plus ? 1 : q - 1;
      ASSERT_EQ(mod_pow(2, phi / 2, q), want) << p << "^" << a;
    }
  }
}

TEST(PrimeQuarterClassTest, Examples) {
  EXPECT_EQ(mod_pow(2, 4, 17), 16u);
  EXPECT_EQ(prime_quarter_class(17), QuarterClass::FourMinus);
  EXPECT_EQ(512u % 73u, 1u);
  EXPECT_EQ(prime_quarter_class(73), QuarterClass::FourPlus);
  EXPECT_THROW(prime_quarter_class(5), std::domain_error);
  EXPECT_THROW(prime_quarter_class(25), std::domain_error);
}

TEST(QuarterLemmaTest, BothDirectionsBelowOneHundredThousand) {
  for (u64 p : primes_below(100'000)) {
    if (p == 2) continue;
    for (unsigned a = 1; a <= 2; ++a) {
      const Factorization f({{p, a}});
      const bool member = definitional_verdict(f, 2) != Verdict::Neither;
      ASSERT_EQ(member, p % 8 == 1) << p << "^" << a;
    }
  }
}

TEST(ResidueProfileTest, Examples) {
  const auto a = residue_profile(Factorization({{3, 1}, {11, 1}}));
  EXPECT_EQ(a.count(K::II), 2u);
  EXPECT_EQ(a.omega, 2u);
  const auto b = residue_profile(Factorization({{5, 1}, {13, 1}}));
  EXPECT_EQ(b.count(K::III), 2u);
  EXPECT_EQ(b.omega, 2u);
  const auto c = residue_profile(Factorization({{3, 1}, {7, 1}, {17, 1}}));
  EXPECT_EQ(c.counts, (std::array<unsigned, 4>{1, 1, 0, 1}));
  EXPECT_EQ(c.omega, 3u);
}

TEST(ResidueProfileTest, RejectsFactorTwo) {
  EXPECT_THROW(residue_profile(Factorization({{2, 1}, {3, 1}})), std::domain_error);
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_by_theorems(factorize(3 * 11 * 19), 3), tv(Verdict::Minus, "th:4"));
  EXPECT_TRUE(is_in_minus(3 * 11 * 19, 8));
  EXPECT_EQ(classify_by_theorems(factorize(65), 3), tv(Verdict::Minus, "th:9"));
  EXPECT_EQ(mod_pow(2, 6, 65), 64u);
  EXPECT_EQ(classify_by_theorems(factorize(21), 2), tv(Verdict::Neither, "th:6"));
  EXPECT_EQ(classify_by_theorems(factorize(15), 2), tv(Verdict::Neither, "th:5"));
  EXPECT_EQ(mod_pow(2, 2, 15), 4u);
  EXPECT_EQ(classify_by_theorems(factorize(7 * 73), 2), tv(Verdict::Plus, "th:2"));
  EXPECT_EQ(classify_by_theorems(factorize(7 * 23), 2), tv(Verdict::Plus, "th:3"));
  EXPECT_EQ(classify_by_theorems(factorize(3), 1), tv(Verdict::Minus, "prop:2"));
}

TEST(ClassifyTest, RemainingBranches) {
  EXPECT_EQ(classify_by_theorems(factorize(105), 2), tv(Verdict::Plus, "th:1"));
  EXPECT_EQ(classify_by_theorems(factorize(49), 1), tv(Verdict::Plus, "prop:2"));
  EXPECT_EQ(classify_by_theorems(factorize(15), 1), tv(Verdict::Plus, "th:1"));
  // k = w: three kind-III primes with one kind-II: r = 1 < k - 1.
  EXPECT_EQ(classify_by_theorems(factorize(3 * 5 * 13), 3), tv(Verdict::Plus, "th:5"));
  EXPECT_EQ(classify_by_theorems(factorize(5 * 13 * 29), 3), tv(Verdict::Plus, "th:3"));
  EXPECT_EQ(classify_by_theorems(factorize(17 * 41), 3), tv(Verdict::Plus, "th:7"));
  EXPECT_EQ(classify_by_theorems(factorize(17 * 5), 3), tv(Verdict::Plus, "th:7"));
  EXPECT_EQ(classify_by_theorems(factorize(73 * 3), 3), tv(Verdict::Plus, "th:8"));
  EXPECT_EQ(classify_by_theorems(factorize(17 * 3), 3), tv(Verdict::Neither, "th:8"));
  EXPECT_EQ(classify_by_theorems(factorize(5 * 13 * 29), 4), tv(Verdict::Plus, "th:9"));
  EXPECT_EQ(classify_by_theorems(factorize(5 * 7), 3), tv(Verdict::Neither, "th:10"));
  EXPECT_EQ(classify_by_theorems(factorize(5 * 13 * 29 * 3), 5), tv(Verdict::Plus, "th:10"));
  EXPECT_EQ(classify_by_theorems(factorize(17), 2), tv(Verdict::Minus, "lemma:3.1"));
  EXPECT_EQ(classify_by_theorems(factorize(73), 2), tv(Verdict::Plus, "lemma:3.1"));
  EXPECT_EQ(classify_by_theorems(factorize(125), 2), tv(Verdict::Neither, "lemma:3.1"));
  EXPECT_EQ(classify_by_theorems(factorize(3 * 7), 5), tv(Verdict::Neither, "remark"));
  EXPECT_EQ(classify_by_theorems(factorize(17), 4).verdict, Verdict::OutsidePaperScope);
  EXPECT_EQ(classify_by_theorems(factorize(5 * 3), 4).verdict, Verdict::OutsidePaperScope);
}

TEST(ClassifyTest, RejectsBadInput) {
  EXPECT_THROW(classify_by_theorems(Factorization({{2, 1}, {3, 1}}), 2), std::domain_error);
  EXPECT_THROW(classify_by_theorems(Factorization(), 2), std::domain_error);
  EXPECT_THROW(classify_by_theorems(factorize(15), 0), std::domain_error);
}

TEST(ClassifyTest, CoveredRangeNeverOutsideScope) {
  for (u64 n = 3; n <= 3001; n += 2) {
    const auto verdicts = classify_covered_range(factorize(n));
    ASSERT_EQ(verdicts.size(), factorize(n).omega() + 1);
    for (const auto& [k, v] : verdicts) {
      ASSERT_NE(v.verdict, Verdict::OutsidePaperScope) << n << " k=" << k;
    }
  }
}

TEST(ClassifyTest, MatchesDefinitionalOracle) {
  for (u64 n = 3; n <= 20'001; n += 2) {
    const Factorization f = factorize(n);
    for (unsigned k = 1; k <= 8; ++k) {
      const TheoremVerdict v = classify_by_theorems(f, k);
      if (v.verdict == Verdict::OutsidePaperScope) continue;
      const Verdict oracle = is_in_plus(n, u64{1} << k)    ? Verdict::Plus
                             : is_in_minus(n, u64{1} << k) ? Verdict::Minus
                                                           : Verdict::Neither;
      ASSERT_EQ(v.verdict, oracle) << "n=" << n << " k=" << k << " via " << v.source;
    }
  }
}

TEST(ClassifyTest, ExactlyOneTheoremPerProfile) {
  for (const auto& check : check_theorem_exhaustiveness(8)) {
    EXPECT_TRUE(check.passed()) << check.name << ": " << check.first_counterexample;
  }
}

TEST(TripleKindFixtureTest, Examples) {
  EXPECT_EQ(triple_kind_fixture({K::II, K::II, K::II}).verdict, Verdict::Minus);
  EXPECT_EQ(triple_kind_fixture({K::IV, K::IV, K::IV}).verdict, Verdict::Plus);
  EXPECT_EQ(triple_kind_fixture({K::III, K::II, K::IV}).verdict, Verdict::Neither);
}

TEST(TripleKindFixtureTest, OrderInsensitiveAndTotal) {
  const std::array<K, 4> kinds{K::I, K::II, K::III, K::IV};
  for (K a : kinds) {
    for (K b : kinds) {
      for (K c : kinds) {
        const auto v = triple_kind_fixture({a, b, c});
        ASSERT_NE(v.verdict, Verdict::OutsidePaperScope);
        ASSERT_EQ(v, triple_kind_fixture({c, a, b}));
        ASSERT_EQ(v, triple_kind_fixture({b, a, c}));
      }
    }
  }
}

TEST(KindsStringTest, SortedWithRepetition) {
  EXPECT_EQ(kinds_string(factorize(511)), "I,IV");
  EXPECT_EQ(kinds_string(factorize(9)), "II");
  EXPECT_EQ(kinds_string(factorize(3 * 11 * 7 * 17 * 5)), "I,II,II,III,IV");
}

}  // namespace
}  // namespace fermat_euler
