#include "fermat_euler/classes.hpp"

#include <stdexcept>

namespace fermat_euler {
namespace {

// 2^(phi/index) mod n, or nullopt when index does not divide phi.
std::optional<u64> power_at_index(u64 n, u64 index) {
  require_odd_modulus(n);
  if (index == 0) throw std::domain_error("class index must be positive");
  const u64 phi = euler_phi(factorize(n));
  if (phi % index != 0) return std::nullopt;
  return mod_pow(2, phi / index, n);
}

std::optional<u64> minus_from_period(u64 n, u64 phi, u64 period) {
  if (period % 2 != 0) return std::nullopt;
  if (mod_pow(2, period / 2, n) != n - 1) return std::nullopt;
  return 2 * (phi / period);
}

}  // namespace

bool is_in_plus(u64 n, u64 index) {
  const auto r = power_at_index(n, index);
  return r && *r == 1;
}

bool is_in_minus(u64 n, u64 index) {
  const auto r = power_at_index(n, index);
  return r && *r == n - 1;
}

u64 maximal_plus(u64 n) {
  require_odd_modulus(n);
  return class_record(n).n_max;
}

std::optional<u64> maximal_minus(u64 n) {
  require_odd_modulus(n);
  return class_record(n).m_max;
}

ClassRecord class_record(u64 n) {
  require_odd_modulus(n);
  return class_record(n, factorize(n));
}

ClassRecord class_record(u64 n, const Factorization& f) {
  require_odd_modulus(n);
  if (f.value() != n) throw std::domain_error("factorization does not match n");
  ClassRecord rec;
  rec.n = n;
  rec.phi = euler_phi(f);
  rec.period_t = order_of_two(n, factorize(rec.phi));
  rec.n_max = rec.phi / rec.period_t;
  rec.m_max = minus_from_period(n, rec.phi, rec.period_t);
  return rec;
}

}  // namespace fermat_euler
