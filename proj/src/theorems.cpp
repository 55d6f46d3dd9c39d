#include "fermat_euler/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermat_euler {
namespace {

using K = Mod8Kind;

TheoremVerdict make(Verdict v, std::string_view src) {
  return {v, std::string(src)};
}

// w == k >= 2.
TheoremVerdict classify_exactly_k(const ResidueProfile& prof, unsigned k) {
  const unsigned w = prof.omega;
  if (prof.count(K::I) > 0) return make(Verdict::Plus, source::kTh2);
  if (prof.count(K::IV) == w || prof.count(K::III) == w) {
    return make(Verdict::Plus, source::kTh3);
  }
  if (prof.count(K::II) == w) return make(Verdict::Minus, source::kTh4);
  if (prof.count(K::III) == 0) return make(Verdict::Neither, source::kTh6);
  // Mixed: r primes of kind II or IV, the rest kind III, 0 < r < k.
  const unsigned r = prof.count(K::II) + prof.count(K::IV);
  return r == k - 1 ? make(Verdict::Neither, source::kTh5)
                    : make(Verdict::Plus, source::kTh5);
}

// w == k - 1 >= 2.
TheoremVerdict classify_k_minus_one(const Factorization& f,
                                    const ResidueProfile& prof, unsigned k) {
  const unsigned w = prof.omega;
  const unsigned ones = prof.count(K::I);
  if (ones >= 2 || (ones == 1 && prof.count(K::III) >= 1)) {
    return make(Verdict::Plus, source::kTh7);
  }
  if (prof.count(K::III) == w) {
    return make(k == 3 ? Verdict::Minus : Verdict::Plus, source::kTh9);
  }
  if (ones == 1) {
    const auto it = std::find_if(f.begin(), f.end(), [](const PrimePower& pp) {
      return mod8_kind(pp.prime) == K::I;
    });
    return prime_quarter_class(it->prime) == QuarterClass::FourPlus
               ? make(Verdict::Plus, source::kTh8)
               : make(Verdict::Neither, source::kTh8);
  }
  const unsigned r = prof.count(K::III);
  return r <= 2 ? make(Verdict::Neither, source::kTh10)
                : make(Verdict::Plus, source::kTh10);
}

void require_classifiable(const Factorization& f, unsigned k) {
  if (k < 1) throw std::domain_error("k must be >= 1");
  if (f.empty()) throw std::domain_error("n must be >= 3");
  if (f.factors().front().prime == 2) throw std::domain_error("n must be odd");
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Plus: return "Plus";
    case Verdict::Minus: return "Minus";
    case Verdict::Neither: return "Neither";
    case Verdict::OutsidePaperScope: return "OutsidePaperScope";
  }
  return "?";
}

Sign prime_power_half_sign(u64 p, unsigned a) {
  if (a < 1) throw std::domain_error("exponent must be >= 1");
  if (p == 2 || !is_prime(p)) throw std::domain_error("p must be an odd prime");
  switch (mod8_kind(p)) {
    case K::I:
    case K::IV: return Sign::Plus;
    case K::II:
    case K::III: return Sign::Minus;
  }
  return Sign::Plus;
}

QuarterClass prime_quarter_class(u64 p) {
  if (p % 8 != 1 || !is_prime(p)) {
    throw std::domain_error("prime_quarter_class: p must be a prime == 1 mod 8");
  }
  const u64 r = mod_pow(2, (p - 1) / 4, p);
  if (r == 1) return QuarterClass::FourPlus;
  if (r == p - 1) return QuarterClass::FourMinus;
  throw std::logic_error("2^((p-1)/4) is not +-1 mod p");
}

ResidueProfile residue_profile(const Factorization& f) {
  ResidueProfile prof;
  for (const auto& pp : f) {
    if (pp.prime == 2) throw std::domain_error("residue_profile: factor 2");
    ++prof.counts[kind_index(mod8_kind(pp.prime))];
    ++prof.omega;
  }
  return prof;
}

TheoremVerdict classify_by_theorems(const Factorization& f, unsigned k) {
  require_classifiable(f, k);
  const ResidueProfile prof = residue_profile(f);
  const unsigned w = prof.omega;

  if (w > k) return make(Verdict::Plus, source::kTh1);
  if (k == 1) {
    return prime_power_half_sign(f.factors().front().prime, 1) == Sign::Plus
               ? make(Verdict::Plus, source::kProp2)
               : make(Verdict::Minus, source::kProp2);
  }
  if (w == k) return classify_exactly_k(prof, k);
  if (w + 1 == k) {
    if (w == 1) {
      const u64 p = f.factors().front().prime;
      if (mod8_kind(p) != K::I) return make(Verdict::Neither, source::kLemma31);
      return prime_quarter_class(p) == QuarterClass::FourPlus
                 ? make(Verdict::Plus, source::kLemma31)
                 : make(Verdict::Minus, source::kLemma31);
    }
    return classify_k_minus_one(f, prof, k);
  }
  if (prof.count(K::I) == 0 && prof.count(K::III) == 0) {
    return make(Verdict::Neither, source::kRemark);
  }
  return make(Verdict::OutsidePaperScope, source::kNone);
}

std::vector<std::pair<unsigned, TheoremVerdict>> classify_covered_range(
    const Factorization& f) {
  std::vector<std::pair<unsigned, TheoremVerdict>> out;
  const auto w = static_cast<unsigned>(f.omega());
  for (unsigned k = 1; k <= w + 1; ++k) {
    out.emplace_back(k, classify_by_theorems(f, k));
  }
  return out;
}

std::vector<std::string_view> applicable_theorems(const Factorization& f,
                                                  unsigned k) {
  require_classifiable(f, k);
  const ResidueProfile prof = residue_profile(f);
  const unsigned w = prof.omega;
  const unsigned c1 = prof.count(K::I), c3 = prof.count(K::II),
                 c5 = prof.count(K::III), c7 = prof.count(K::IV);
  const bool exactly_k = w == k && k >= 2;
  const bool k_minus_one = w + 1 == k && w >= 2;

  std::vector<std::string_view> out;
  auto add = [&](bool holds, std::string_view id) {
    if (holds) out.push_back(id);
  };
  add(w > k, source::kTh1);
  add(k == 1 && w == 1, source::kProp2);

  add(exactly_k && c1 >= 1, source::kTh2);
  add(exactly_k && (c7 == w || c5 == w), source::kTh3);
  add(exactly_k && c3 == w, source::kTh4);
  // r primes of kind II/IV and the remaining k - r of kind III, 0 < r < k.
  add(exactly_k && c1 == 0 && c3 + c7 > 0 && c3 + c7 < k && c5 == k - (c3 + c7),
      source::kTh5);
  // Both kind II and kind IV present, nothing else.
  add(exactly_k && c3 >= 1 && c7 >= 1 && c3 + c7 == w, source::kTh6);

  add(k == 2 && w == 1, source::kLemma31);

  add(k_minus_one && c1 >= 1 && (c1 >= 2 || c5 >= 1), source::kTh7);
  add(k_minus_one && c1 == 1 && c3 + c7 == w - 1, source::kTh8);
  add(k_minus_one && c5 == w, source::kTh9);
  // r primes of kind III, 0 <= r < k - 1, the rest of kind II/IV.
  add(k_minus_one && c1 == 0 && c5 < k - 1 && c3 + c7 == w - c5, source::kTh10);

  add(w + 1 < k && c3 + c7 == w, source::kRemark);
  return out;
}

TheoremVerdict triple_kind_fixture(std::array<Mod8Kind, 3> kinds) {
  std::sort(kinds.begin(), kinds.end());
  using T = std::array<K, 3>;
  auto sorted = [](T t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  auto matches = [&](std::initializer_list<T> table) {
    return std::any_of(table.begin(), table.end(),
                       [&](const T& t) { return sorted(t) == kinds; });
  };
  auto matches_with_wildcard = [&](K a, K b) {
    constexpr std::array<K, 4> kAll{K::I, K::II, K::III, K::IV};
    return std::any_of(kAll.begin(), kAll.end(), [&](K x) {
      return sorted(T{a, b, x}) == kinds;
    });
  };

  if (matches({{K::II, K::II, K::II}})) return make(Verdict::Minus, "triple:P1");
  if (matches_with_wildcard(K::I, K::I) || matches_with_wildcard(K::I, K::III) ||
      matches_with_wildcard(K::III, K::III) ||
      matches({{K::I, K::II, K::II},
               {K::I, K::II, K::IV},
               {K::I, K::IV, K::IV},
               {K::IV, K::IV, K::IV}})) {
    return make(Verdict::Plus, "triple:P2");
  }
  if (matches({{K::III, K::II, K::II},
               {K::III, K::II, K::IV},
               {K::III, K::IV, K::IV},
               {K::II, K::IV, K::II},
               {K::II, K::IV, K::IV}})) {
    return make(Verdict::Neither, "triple:P3");
  }
  return make(Verdict::OutsidePaperScope, source::kNone);
}

std::string kinds_string(const Factorization& f) {
  std::vector<K> kinds;
  for (const auto& pp : f) kinds.push_back(mod8_kind(pp.prime));
  std::sort(kinds.begin(), kinds.end());
  std::string out;
  for (K kind : kinds) {
    if (!out.empty()) out += ',';
    out += to_string(kind);
  }
  return out;
}

}  // namespace fermat_euler
