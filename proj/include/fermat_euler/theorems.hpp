#pragma once

// Membership of odd n in (2^k+) / (2^k-) decided from the mod-8 kinds of
// n's distinct prime divisors, without evaluating 2^(phi(n)/2^k) mod n.
//
// Let w be the number of distinct primes of n. The classifier covers
//   w > k           every such n is in (2^k+)                       th:1
//   k = 1, w = 1    sign of 2^(phi/2) mod p^a from p mod 8          prop:2
//   w = k >= 2      th:2 .. th:6
//   w = k-1 = 1     prime powers and (4+-), by p mod 8 and the
//                   sign of 2^((p-1)/4) mod p                       lemma:3.1
//   w = k-1 >= 2    th:7 .. th:10
//   w < k-1         only when every prime is of kind II or IV, in
//                   which case 2^k does not divide phi(n)           remark
// Anything else is reported as OutsidePaperScope.
//
// Source identifiers are stable strings; they appear in CLI reports and in
// the theorem_source column of generated tables.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fermat_euler/arith.hpp"

namespace fermat_euler {

enum class Verdict { Plus, Minus, Neither, OutsidePaperScope };

std::string_view to_string(Verdict v);

struct TheoremVerdict {
  Verdict verdict = Verdict::OutsidePaperScope;
  std::string source;

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

namespace source {
inline constexpr std::string_view kTh1 = "th:1";
inline constexpr std::string_view kTh2 = "th:2";
inline constexpr std::string_view kTh3 = "th:3";
inline constexpr std::string_view kTh4 = "th:4";
inline constexpr std::string_view kTh5 = "th:5";
inline constexpr std::string_view kTh6 = "th:6";
inline constexpr std::string_view kTh7 = "th:7";
inline constexpr std::string_view kTh8 = "th:8";
inline constexpr std::string_view kTh9 = "th:9";
inline constexpr std::string_view kTh10 = "th:10";
inline constexpr std::string_view kProp2 = "prop:2";
inline constexpr std::string_view kLemma31 = "lemma:3.1";
inline constexpr std::string_view kRemark = "remark";
inline constexpr std::string_view kNone = "none";
inline constexpr std::string_view kOracle = "oracle";
}  // namespace source

enum class Sign : int { Minus = -1, Plus = 1 };

enum class QuarterClass { FourPlus, FourMinus };

struct ResidueProfile {
  std::array<unsigned, 4> counts{};  // indexed by kind_index
  unsigned omega = 0;

  unsigned count(Mod8Kind kind) const { return counts[kind_index(kind)]; }

  friend bool operator==(const ResidueProfile&, const ResidueProfile&) = default;
};

/// Sign s with 2^(phi(p^a)/2) == s mod p^a: Plus for p == +-1 mod 8,
/// Minus for p == +-3 mod 8. Throws unless p is an odd prime and a >= 1.
Sign prime_power_half_sign(u64 p, unsigned a);

/// For a prime p == 1 mod 8, whether 2^((p-1)/4) is +1 or -1 mod p. The
/// same sign holds for every power p^a. Throws for any other p.
QuarterClass prime_quarter_class(u64 p);

/// Throws if the factorization contains 2 or is empty.
ResidueProfile residue_profile(const Factorization& f);

/// Throws for even n, n < 3, or k < 1.
TheoremVerdict classify_by_theorems(const Factorization& f, unsigned k);

/// Verdicts for every k in [1, omega + 1].
std::vector<std::pair<unsigned, TheoremVerdict>> classify_covered_range(
    const Factorization& f);

/// Every source whose hypotheses hold for (f, k), each tested on its own
/// rather than through the dispatcher. A covered input yields exactly one.
std::vector<std::string_view> applicable_theorems(const Factorization& f,
                                                  unsigned k);

/// Verdict for k = 3 prescribed by Arnold's tables of prime-kind triples.
TheoremVerdict triple_kind_fixture(std::array<Mod8Kind, 3> kinds);

/// Kinds of the distinct primes as "I,II,IV", sorted I < II < III < IV.
std::string kinds_string(const Factorization& f);

}  // namespace fermat_euler
