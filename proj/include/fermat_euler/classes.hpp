#pragma once

// Definitional membership in Arnold's classes (N+) and (M-):
//   n in (N+)  iff  N | phi(n)  and  2^(phi(n)/N) == +1 mod n
//   n in (M-)  iff  M | phi(n)  and  2^(phi(n)/M) == -1 mod n
// These are the ground truth every theorem-based verdict is checked against.

#include <optional>

#include "fermat_euler/arith.hpp"

namespace fermat_euler {

struct ClassRecord {
  u64 n = 0;
  u64 phi = 0;
  u64 period_t = 0;
  u64 n_max = 0;
  std::optional<u64> m_max;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

bool is_in_plus(u64 n, u64 index);
bool is_in_minus(u64 n, u64 index);

/// phi(n) / T where T is the order of 2 mod n; always >= 1.
u64 maximal_plus(u64 n);

/// Largest M with n in (M-), or nullopt when every (M-) misses n.
/// -1 lies in <2> mod n exactly when T is even and 2^(T/2) == -1, in which
/// case the smallest exponent giving -1 is T/2 and M = 2 phi(n) / T.
std::optional<u64> maximal_minus(u64 n);

ClassRecord class_record(u64 n);

/// Same as class_record but reuses a factorization of n the caller holds.
ClassRecord class_record(u64 n, const Factorization& f);

}  // namespace fermat_euler
