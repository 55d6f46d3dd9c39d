#include "fermat_euler/arith.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <stdexcept>

namespace fermat_euler {
namespace {

u64 naive_pow_mod(u64 base, u64 exponent, u64 modulus) {
  u64 r = 1 % modulus;
  for (u64 i = 0; i < exponent; ++i) r = r * (base % modulus) % modulus;
  return r;
}

u64 gcd_count_phi(u64 n) {
  u64 count = 0;
  for (u64 x = 1; x <= n; ++x) count += std::gcd(x, n) == 1;
  return count;
}

u64 linear_scan_order(u64 n) {
  u64 t = 1, x = 2 % n;
  while (x != 1) {
    x = 2 * x % n;
    ++t;
  }
  return t;
}

TEST(ModPowTest, Examples) {
  EXPECT_EQ(mod_pow(2, 3, 7), 1u);
  EXPECT_EQ(mod_pow(2, 0, 5), 1u);
  EXPECT_EQ(mod_pow(2, 6, 9), 1u);
}

TEST(ModPowTest, RejectsSmallModulus) {
  EXPECT_THROW(mod_pow(2, 3, 1), std::domain_error);
  EXPECT_THROW(mod_pow(2, 3, 0), std::domain_error);
}

TEST(ModPowTest, MatchesRepeatedMultiplication) {
  for (u64 m = 2; m < 60; ++m) {
    for (u64 b = 0; b < 20; ++b) {
      for (u64 e = 0; e < 40; ++e) {
        ASSERT_EQ(mod_pow(b, e, m), naive_pow_mod(b, e, m)) << b << "^" << e << " mod " << m;
      }
    }
  }
}

TEST(ModPowTest, ExponentsAddUnderMultiplication) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const u64 m = 2 + rng() % (kMaxSupported - 2);
    const u64 b = rng();
    const u64 e1 = rng() >> 1, e2 = rng() >> 1;
    ASSERT_EQ(mod_pow(b, e1 + e2, m), mul_mod(mod_pow(b, e1, m), mod_pow(b, e2, m), m));
  }
}

TEST(ModPowTest, WideModulusFermat) {
  const u64 p = 4611686018427387847ull;  // largest prime below 2^62
  ASSERT_TRUE(is_prime(p));
  EXPECT_EQ(mod_pow(3, p - 1, p), 1u);
}

TEST(IsPrimeTest, AgreesWithSieve) {
  const auto primes = primes_below(1'000'000);
  std::vector<bool> prime(1'000'000, false);
  for (u64 p : primes) prime[p] = true;
  for (u64 n = 0; n < prime.size(); ++n) ASSERT_EQ(is_prime(n), prime[n]) << n;
}

TEST(IsPrimeTest, StrongPseudoprimes) {
  EXPECT_FALSE(is_prime(3215031751ull));        // spsp to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ull));  // spsp to bases up to 23
  EXPECT_TRUE(is_prime(1000000007ull));
  EXPECT_TRUE(is_prime(2147483647ull));
}

TEST(FactorizeTest, Examples) {
  EXPECT_EQ(factorize(45), Factorization({{3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(1), Factorization());
  EXPECT_EQ(factorize(511), Factorization({{7, 1}, {73, 1}}));
}

TEST(FactorizeTest, RejectsZeroAndOverWidth) {
  EXPECT_THROW(factorize(0), std::domain_error);
  EXPECT_THROW(factorize(kMaxSupported + 1), std::domain_error);
}

TEST(FactorizeTest, ReassemblesUpToAMillion) {
  for (u64 n = 1; n <= 1'000'000; ++n) {
    const Factorization f = factorize(n);
    ASSERT_EQ(f.value(), n);
  }
}

TEST(FactorizeTest, LargeSemiprimesUsePollard) {
  EXPECT_EQ(factorize(1000000007ull * 998244353ull),
            Factorization({{998244353, 1}, {1000000007, 1}}));
  EXPECT_EQ(factorize(2147483647ull * 2147483647ull), Factorization({{2147483647, 2}}));
  EXPECT_EQ(factorize(1048583ull * 1048589ull * 1048601ull),
            Factorization({{1048583, 1}, {1048589, 1}, {1048601, 1}}));
  EXPECT_EQ(factorize(kMaxSupported - 1).value(), kMaxSupported - 1);
}

TEST(FactorizeTest, RandomWideInputsReassemble) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const u64 n = 1 + rng() % kMaxSupported;
    const Factorization f = factorize(n);
    ASSERT_EQ(f.value(), n);
    for (const auto& pp : f) ASSERT_TRUE(is_prime(pp.prime));
  }
}

TEST(FactorizationTest, ConstructorEnforcesCanonicalForm) {
  EXPECT_THROW(Factorization({{4, 1}}), std::domain_error);
  EXPECT_THROW(Factorization({{5, 1}, {3, 1}}), std::domain_error);
  EXPECT_THROW(Factorization({{3, 1}, {3, 1}}), std::domain_error);
  EXPECT_THROW(Factorization({{3, 0}}), std::domain_error);
  EXPECT_THROW(Factorization({{3, 40}}), std::domain_error);
  EXPECT_EQ(Factorization({{3, 2}, {7, 1}}).value(), 63u);
}

TEST(EulerPhiTest, Examples) {
  EXPECT_EQ(euler_phi(Factorization()), 1u);
  EXPECT_EQ(euler_phi(Factorization({{3, 2}, {5, 1}})), 24u);
  EXPECT_EQ(euler_phi(Factorization({{7, 1}, {73, 1}})), 432u);
}

TEST(EulerPhiTest, MatchesGcdCount) {
  for (u64 n = 1; n <= 3000; ++n) ASSERT_EQ(euler_phi(factorize(n)), gcd_count_phi(n)) << n;
}

TEST(PhiMultiplicativityTest, Examples) {
  EXPECT_TRUE(phi_multiplicativity_check(3, 5));
  // phi(27) phi(3) = 18 * 2 = 36 = phi(3) phi(9) 3 = 2 * 6 * 3.
  EXPECT_EQ(gcd_count_phi(27) * gcd_count_phi(3), gcd_count_phi(3) * gcd_count_phi(9) * 3);
  EXPECT_TRUE(phi_multiplicativity_check(3, 9));
  EXPECT_EQ(gcd_count_phi(315) * gcd_count_phi(3), gcd_count_phi(15) * gcd_count_phi(21) * 3);
  EXPECT_TRUE(phi_multiplicativity_check(15, 21));
}

TEST(PhiMultiplicativityTest, AllOddPairsUpTo300) {
  for (u64 m = 1; m <= 300; m += 2) {
    for (u64 n = 1; n <= 300; n += 2) ASSERT_TRUE(phi_multiplicativity_check(m, n)) << m << "," << n;
  }
}

TEST(OrderOfTwoTest, Examples) {
  EXPECT_EQ(order_of_two(7), 3u);
  EXPECT_EQ(order_of_two(9), 6u);
  EXPECT_EQ(linear_scan_order(9), 6u);
  EXPECT_EQ(order_of_two(15), 4u);
  EXPECT_EQ(order_of_two(7, factorize(6)), 3u);
}

TEST(OrderOfTwoTest, RejectsEvenAndOne) {
  EXPECT_THROW(order_of_two(8), std::domain_error);
  EXPECT_THROW(order_of_two(1), std::domain_error);
}

TEST(OrderOfTwoTest, MatchesLinearScan) {
  for (u64 n = 3; n <= 5000; n += 2) ASSERT_EQ(order_of_two(n), linear_scan_order(n)) << n;
}

TEST(OrderOfTwoTest, DividesPhi) {
  for (u64 n = 3; n <= 10'000; n += 2) {
    ASSERT_EQ(euler_phi(factorize(n)) % order_of_two(n), 0u) << n;
  }
}

TEST(Mod8KindTest, Mapping) {
  EXPECT_EQ(mod8_kind(17), Mod8Kind::I);
  EXPECT_EQ(mod8_kind(3), Mod8Kind::II);
  EXPECT_EQ(mod8_kind(5), Mod8Kind::III);
  EXPECT_EQ(mod8_kind(7), Mod8Kind::IV);
  EXPECT_EQ(to_string(Mod8Kind::III), "III");
  EXPECT_THROW(mod8_kind(2), std::domain_error);
}

}  // namespace
}  // namespace fermat_euler
