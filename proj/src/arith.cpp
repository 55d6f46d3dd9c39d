#include "fermat_euler/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fermat_euler {
namespace {

using u128 = unsigned __int128;

constexpr u64 kTrialBound = u64{1} << 20;

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = primes_below(kTrialBound);
  return primes;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard's rho; returns a nontrivial divisor of an odd
// composite n.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 x) {
      u64 y = mul_mod(x, x, n) + c;
      return y >= n ? y - n : y;
    };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    constexpr u64 kBatch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_large_factors(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  collect_large_factors(d, out);
  collect_large_factors(n / d, out);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
  u128 product = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& [p, e] = factors_[i];
    if (e == 0) throw std::domain_error("factorization: zero exponent");
    if (!is_prime(p)) {
      throw std::domain_error("factorization: " + std::to_string(p) +
                              " is not prime");
    }
    if (i > 0 && factors_[i - 1].prime >= p) {
      throw std::domain_error("factorization: primes not strictly increasing");
    }
    for (unsigned j = 0; j < e; ++j) {
      product *= p;
      if (product > kMaxSupported) {
        throw std::domain_error("factorization: product exceeds 2^62");
      }
    }
  }
}

u64 Factorization::value() const {
  u64 n = 1;
  for (const auto& [p, e] : factors_) {
    for (unsigned j = 0; j < e; ++j) n *= p;
  }
  return n;
}

Mod8Kind mod8_kind(u64 p) {
  if (p % 2 == 0) throw std::domain_error("mod8_kind: even input");
  return static_cast<Mod8Kind>(p % 8);
}

std::string_view to_string(Mod8Kind kind) {
  switch (kind) {
    case Mod8Kind::I: return "I";
    case Mod8Kind::II: return "II";
    case Mod8Kind::III: return "III";
    case Mod8Kind::IV: return "IV";
  }
  return "?";
}

u64 mul_mod(u64 a, u64 b, u64 modulus) {
  return static_cast<u64>(static_cast<u128>(a) * b % modulus);
}

u64 mod_pow(u64 base, u64 exponent, u64 modulus) {
  if (modulus < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
  u64 result = 1;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are exact below 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<u64> primes_below(u64 bound) {
  std::vector<u64> primes;
  if (bound <= 2) return primes;
  std::vector<bool> composite(bound, false);
  for (u64 i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j < bound; j += i) composite[j] = true;
  }
  return primes;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  if (n > kMaxSupported) throw std::domain_error("factorize: n exceeds 2^62");

  std::vector<PrimePower> factors;
  for (u64 p : trial_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (n > 1) {
    if (n < kTrialBound * kTrialBound || is_prime(n)) {
      factors.push_back({n, 1});
    } else {
      std::vector<u64> large;
      collect_large_factors(n, large);
      std::sort(large.begin(), large.end());
      for (u64 p : large) {
        if (!factors.empty() && factors.back().prime == p) {
          ++factors.back().exponent;
        } else {
          factors.push_back({p, 1});
        }
      }
    }
  }
  return Factorization(std::move(factors));
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f) {
    phi *= p - 1;
    for (unsigned j = 1; j < e; ++j) phi *= p;
  }
  return phi;
}

bool phi_multiplicativity_check(u64 m, u64 n) {
  if (m == 0 || n == 0) {
    throw std::domain_error("phi_multiplicativity_check: arguments must be positive");
  }
  if (static_cast<u128>(m) * n > kMaxSupported) {
    throw std::domain_error("phi_multiplicativity_check: m*n exceeds 2^62");
  }
  const u64 d = std::gcd(m, n);
  const u128 lhs = static_cast<u128>(euler_phi(factorize(m * n))) *
                   euler_phi(factorize(d));
  const u128 rhs = static_cast<u128>(euler_phi(factorize(m))) *
                   euler_phi(factorize(n)) * d;
  return lhs == rhs;
}

u64 order_of_two(u64 n, const Factorization& phi_factorization) {
  require_odd_modulus(n);
  u64 order = phi_factorization.value();
  for (const auto& [q, e] : phi_factorization) {
    for (unsigned j = 0; j < e; ++j) {
      if (mod_pow(2, order / q, n) != 1) break;
      order /= q;
    }
  }
  return order;
}

u64 order_of_two(u64 n) {
  require_odd_modulus(n);
  return order_of_two(n, factorize(euler_phi(factorize(n))));
}

void require_odd_modulus(u64 n) {
  if (n < 3 || n % 2 == 0) {
    throw std::domain_error("expected an odd integer >= 3, got " +
                            std::to_string(n));
  }
  if (n > kMaxSupported) throw std::domain_error("modulus exceeds 2^62");
}

}  // namespace fermat_euler
