#include "fermat_euler/dynamics.hpp"

#include <numeric>

namespace fermat_euler {

std::vector<u64> euler_group(u64 n) {
  require_odd_modulus(n);
  std::vector<u64> group;
  for (u64 x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) group.push_back(x);
  }
  return group;
}

CycleStructure cycle_decomposition(u64 n, u64 guard) {
  require_odd_modulus(n);
  const u64 phi = euler_phi(factorize(n));
  if (phi > guard) {
    throw capacity_error("phi(" + std::to_string(n) + ") = " +
                         std::to_string(phi) + " exceeds enumeration guard " +
                         std::to_string(guard));
  }

  CycleStructure cs;
  cs.n = n;
  std::vector<bool> seen(n, false);
  // Ascending scan: the first unseen element of each cycle is its minimum.
  for (u64 start : euler_group(n)) {
    if (seen[start]) continue;
    std::vector<u64> cycle;
    u64 x = start;
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = 2 * x % n;
    } while (x != start);
    cs.cycles.push_back(std::move(cycle));
  }
  cs.cycle_count = cs.cycles.size();
  cs.period_t = cs.cycles.front().size();
  return cs;
}

bool verify_theorem_a(u64 n) {
  const CycleStructure cs = cycle_decomposition(n);
  const u64 phi = euler_phi(factorize(n));
  for (const auto& cycle : cs.cycles) {
    if (cycle.size() != cs.period_t) return false;
  }
  return cs.cycle_count * cs.period_t == phi &&
         mod_pow(2, phi / cs.cycle_count, n) == 1;
}

std::string format_cycles(const CycleStructure& cs) {
  std::string out = "T=" + std::to_string(cs.period_t) +
                    " N=" + std::to_string(cs.cycle_count) + ";";
  out += ' ';
  for (const auto& cycle : cs.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace fermat_euler
