#pragma once

// Exact 64-bit integer primitives: modular exponentiation, primality,
// factorization, Euler's totient and the multiplicative order of 2.

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace fermat_euler {

using u64 = std::uint64_t;

/// Largest integer accepted by `factorize` and the class/theorem modules.
inline constexpr u64 kMaxSupported = u64{1} << 62;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: primes strictly increasing, exponents >= 1.
/// The empty factorization denotes 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates the canonical-form invariants; throws std::domain_error.
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  /// Number of distinct prime divisors.
  std::size_t omega() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// Product of prime^exponent over all entries.
  u64 value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Arnold's kinds of odd primes by residue mod 8.
enum class Mod8Kind : unsigned { I = 1, II = 3, III = 5, IV = 7 };

/// Kind of an odd integer by its residue mod 8. Throws on even input.
Mod8Kind mod8_kind(u64 p);

std::string_view to_string(Mod8Kind kind);

/// Index 0..3 for I..IV, for use as an array slot.
constexpr std::size_t kind_index(Mod8Kind kind) {
  return static_cast<std::size_t>(kind) / 2;
}

u64 mul_mod(u64 a, u64 b, u64 modulus);

/// base^exponent mod modulus. Throws std::domain_error when modulus < 2.
u64 mod_pow(u64 base, u64 exponent, u64 modulus);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Ascending list of primes p < bound (sieve of Eratosthenes).
std::vector<u64> primes_below(u64 bound);

/// Trial division by primes below 2^20, then Pollard's rho (Brent) on the
/// remaining cofactor. Throws std::domain_error for n == 0 or n > 2^62.
Factorization factorize(u64 n);

u64 euler_phi(const Factorization& f);

/// Checks phi(mn) * phi(d) == phi(m) * phi(n) * d with d = gcd(m, n).
bool phi_multiplicativity_check(u64 m, u64 n);

/// Least T >= 1 with 2^T == 1 mod n, found by stripping prime factors off
/// phi(n) while the congruence holds. `phi_factorization` must factor phi(n).
u64 order_of_two(u64 n, const Factorization& phi_factorization);

/// Convenience overload that factors phi(n) itself.
u64 order_of_two(u64 n);

/// Throws std::domain_error unless n is odd, n >= 3 and n <= 2^62.
void require_odd_modulus(u64 n);

}  // namespace fermat_euler
