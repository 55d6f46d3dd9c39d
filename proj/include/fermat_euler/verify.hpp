#pragma once

// Exhaustive property sweeps behind `verify`. Each check counts the cases it
// examined and keeps the first counterexample it met.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fermat_euler/arith.hpp"

namespace fermat_euler {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  u64 checked = 0;
  u64 failed = 0;
  std::string first_counterexample;

  /// `describe` runs only for the first failure.
  void record(bool ok, const std::function<std::string()>& describe);
  bool passed() const { return failed == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// (n, k) pairs the classifier left as OutsidePaperScope.
  u64 outside_scope_cases = 0;

  bool passed() const;
  void append(std::vector<CheckResult> more);
};

enum class Suite { Props, Theorems, Dynamics, All };

std::optional<Suite> parse_suite(std::string_view name);

/// Primes used by the fixed-size fixtures (Arnold's (4+-), (8+-) lists).
inline constexpr u64 kFixturePrimeBound = 500;

/// Factorization, totient, order and Arnold class properties 1-4 over
/// odd n in [3, max_n].
std::vector<CheckResult> check_arith_properties(u64 max_n);
std::vector<CheckResult> check_class_properties(u64 max_n);

/// Classifier vs definitional membership for odd n in [3, max_n] and
/// k in [1, max_k]; also the scope-honesty check. Adds the count of
/// OutsidePaperScope verdicts to `outside_scope_cases`.
std::vector<CheckResult> check_theorem_oracle(u64 max_n, unsigned max_k,
                                              u64& outside_scope_cases);

/// Every residue profile with omega in [2, max_omega] at k = omega and
/// k = omega + 1 has exactly one applicable theorem.
std::vector<CheckResult> check_theorem_exhaustiveness(unsigned max_omega);

/// Half- and quarter-power signs of prime powers for odd primes below
/// prime_bound, exponents 1..3 (1..2 for the quarter-power lemma).
std::vector<CheckResult> check_prime_power_signs(u64 prime_bound);

/// Products of two kind-II prime powers are 1 or 3 mod 8.
CheckResult check_kind_square_closure(u64 prime_bound);

/// Arnold's (4+-) properties P1-P9.
std::vector<CheckResult> check_four_fixtures(u64 prime_bound);

/// Arnold's (8+-) triple properties P1-P3, the 64-ordered-triple coverage
/// claim, and pair properties P4-P9.
std::vector<CheckResult> check_eight_fixtures(u64 prime_bound);

/// Theorem A, N = maximal plus class, T = order of 2, cycle partition.
std::vector<CheckResult> check_dynamics(u64 max_n);

VerifyReport run_verification(Suite suite, u64 max_n, unsigned max_k);

void print_report(std::ostream& os, const VerifyReport& report);

}  // namespace fermat_euler
