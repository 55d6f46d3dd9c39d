#pragma once

// The doubling map x -> 2x mod n restricted to the Euler group (residues
// coprime to n). Non-coprime residues are not part of the system here.

#include <stdexcept>
#include <string>
#include <vector>

#include "fermat_euler/arith.hpp"

namespace fermat_euler {

/// Largest phi(n) cycle_decomposition will enumerate.
inline constexpr u64 kEnumerationGuard = 10'000'000;

class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cycles are rotated so their smallest element leads, and sorted by that
/// element. Each element is twice its predecessor mod n.
struct CycleStructure {
  u64 n = 0;
  u64 period_t = 0;
  u64 cycle_count = 0;
  std::vector<std::vector<u64>> cycles;
};

/// Ascending residues in [1, n) coprime to n.
std::vector<u64> euler_group(u64 n);

/// Throws capacity_error when phi(n) exceeds `guard`.
CycleStructure cycle_decomposition(u64 n, u64 guard = kEnumerationGuard);

/// All cycles share one length T, phi(n) = N T, and 2^(phi(n)/N) == 1 mod n.
bool verify_theorem_a(u64 n);

/// "T=3 N=2; (1 2 4)(3 6 5)"
std::string format_cycles(const CycleStructure& cs);

}  // namespace fermat_euler
