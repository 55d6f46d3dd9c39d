#include "fermat_euler/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "fermat_euler/classes.hpp"
#include "fermat_euler/dynamics.hpp"
#include "fermat_euler/report.hpp"
#include "fermat_euler/theorems.hpp"

namespace fermat_euler {
namespace {

using K = Mod8Kind;
using u128 = unsigned __int128;

constexpr std::array<K, 4> kKinds{K::I, K::II, K::III, K::IV};

std::vector<u64> divisors_of(u64 m) {
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<u64> odd_primes_below(u64 bound) {
  auto primes = primes_below(bound);
  if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());
  return primes;
}

std::string describe_n(u64 n) { return "n=" + std::to_string(n); }

std::string describe_nk(const Factorization& f, unsigned k) {
  return "n=" + std::to_string(f.value()) + " k=" + std::to_string(k);
}

Factorization pair_of(u64 p, unsigned a, u64 q, unsigned b) {
  if (p > q) {
    std::swap(p, q);
    std::swap(a, b);
  }
  return Factorization({{p, a}, {q, b}});
}

// Classifier and oracle must both give `expected`.
void expect_verdict(CheckResult& check, const Factorization& f, unsigned k,
                    Verdict expected) {
  const TheoremVerdict tv = classify_by_theorems(f, k);
  const Verdict oracle = definitional_verdict(f, k);
  check.record(tv.verdict == expected && oracle == expected, [&] {
    return describe_nk(f, k) + " expected " + std::string(to_string(expected)) +
           ", classifier " + std::string(to_string(tv.verdict)) + " via " +
           tv.source + ", oracle " + std::string(to_string(oracle));
  });
}

bool in_four_plus_or_minus(u64 p) {
  return definitional_verdict(Factorization({{p, 1}}), 2) != Verdict::Neither;
}

}  // namespace

void CheckResult::record(bool ok, const std::function<std::string()>& describe) {
  ++checked;
  if (ok) return;
  if (failed++ == 0) first_counterexample = describe();
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

void VerifyReport::append(std::vector<CheckResult> more) {
  for (auto& c : more) checks.push_back(std::move(c));
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "props") return Suite::Props;
  if (name == "theorems") return Suite::Theorems;
  if (name == "dynamics") return Suite::Dynamics;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::vector<CheckResult> check_arith_properties(u64 max_n) {
  CheckResult reassemble{"arith.factorize_reassembles"};
  for (u64 n = 1; n <= max_n; ++n) {
    const Factorization f = factorize(n);
    reassemble.record(f.value() == n, [&] { return describe_n(n); });
  }

  CheckResult lagrange{"arith.order_divides_phi"};
  CheckResult scan{"arith.order_matches_linear_scan"};
  for (u64 n = 3; n <= max_n; n += 2) {
    const u64 phi = euler_phi(factorize(n));
    const u64 order = order_of_two(n, factorize(phi));
    lagrange.record(phi % order == 0, [&] { return describe_n(n); });
    u64 t = 1, x = 2 % n;
    while (x != 1) {
      x = 2 * x % n;
      ++t;
    }
    scan.record(t == order, [&] {
      return describe_n(n) + " scan=" + std::to_string(t) +
             " order_of_two=" + std::to_string(order);
    });
  }

  CheckResult multiplicative{"arith.phi_multiplicativity"};
  const u64 pair_bound = std::min<u64>(max_n, 300);
  for (u64 m = 1; m <= pair_bound; m += 2) {
    for (u64 n = 1; n <= pair_bound; n += 2) {
      multiplicative.record(phi_multiplicativity_check(m, n), [&] {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n);
      });
    }
  }

  CheckResult exponent_sum{"arith.mod_pow_exponent_sum"};
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 2000; ++i) {
    const u64 m = 2 + rng() % (kMaxSupported - 2);
    const u64 b = rng() % m;
    const u64 e1 = rng() >> 2, e2 = rng() >> 2;
    const u64 lhs = mod_pow(b, e1 + e2, m);
    const u64 rhs = mul_mod(mod_pow(b, e1, m), mod_pow(b, e2, m), m);
    exponent_sum.record(lhs == rhs, [&] {
      return "b=" + std::to_string(b) + " m=" + std::to_string(m);
    });
  }
  return {reassemble, lagrange, scan, multiplicative, exponent_sum};
}

std::vector<CheckResult> check_class_properties(u64 max_n) {
  CheckResult p1{"classes.property1_plus_divisor_closed"};
  CheckResult p2{"classes.property2_odd_minus_empty"};
  CheckResult p3{"classes.property3_minus_odd_cofactor"};
  CheckResult p4{"classes.property4_minus_2n_in_plus_n"};
  CheckResult max_plus{"classes.maximal_plus_exhaustive"};
  CheckResult max_minus{"classes.maximal_minus_exhaustive"};
  CheckResult twice{"classes.minus_is_twice_plus"};
  CheckResult record{"classes.record_invariants"};

  for (u64 n = 3; n <= max_n; n += 2) {
    const u64 phi = euler_phi(factorize(n));
    const auto divs = divisors_of(phi);
    std::map<u64, u64> power;  // d -> 2^(phi/d) mod n
    for (u64 d : divs) power[d] = mod_pow(2, phi / d, n);
    auto plus = [&](u64 d) { return power.at(d) == 1; };
    auto minus = [&](u64 d) { return power.at(d) == n - 1; };
    auto where = [&](u64 a, u64 b) {
      return describe_n(n) + " (" + std::to_string(a) + ", " +
             std::to_string(b) + ")";
    };

    u64 best_plus = 0, best_minus = 0;
    for (u64 big : divs) {
      if (plus(big)) best_plus = big;
      if (minus(big)) best_minus = big;
      if (big % 2 == 1) p2.record(!minus(big), [&] { return where(big, 0); });
      if (phi % (2 * big) == 0) {
        p4.record(!minus(2 * big) || plus(big), [&] { return where(2 * big, big); });
      }
      for (u64 small : divs) {
        if (small > big) break;
        if (big % small != 0) continue;
        p1.record(!plus(big) || plus(small), [&] { return where(big, small); });
        if ((big / small) % 2 == 1) {
          p3.record(!minus(big) || minus(small), [&] { return where(big, small); });
        }
      }
    }

    const ClassRecord rec = class_record(n);
    max_plus.record(rec.n_max == best_plus, [&] {
      return describe_n(n) + " n_max=" + std::to_string(rec.n_max) +
             " exhaustive=" + std::to_string(best_plus);
    });
    const std::optional<u64> expected_minus =
        best_minus ? std::optional<u64>(best_minus) : std::nullopt;
    max_minus.record(rec.m_max == expected_minus, [&] { return describe_n(n); });
    twice.record(!rec.m_max || *rec.m_max == 2 * rec.n_max,
                 [&] { return describe_n(n); });
    bool ok = rec.phi == phi && rec.phi == rec.n_max * rec.period_t &&
              mod_pow(2, rec.phi / rec.n_max, n) == 1;
    if (rec.m_max) {
      ok = ok && phi % *rec.m_max == 0 && *rec.m_max % 2 == 0 &&
           mod_pow(2, phi / *rec.m_max, n) == n - 1;
    }
    record.record(ok, [&] { return describe_n(n); });
  }
  return {p1, p2, p3, p4, max_plus, max_minus, twice, record};
}

std::vector<CheckResult> check_theorem_oracle(u64 max_n, unsigned max_k,
                                              u64& outside_scope_cases) {
  CheckResult equivalence{"theorems.oracle_equivalence"};
  CheckResult single{"theorems.single_applicable_source"};
  CheckResult honesty{"theorems.scope_honesty"};
  for (u64 n = 3; n <= max_n; n += 2) {
    const Factorization f = factorize(n);
    const ResidueProfile prof = residue_profile(f);
    for (unsigned k = 1; k <= max_k; ++k) {
      const TheoremVerdict tv = classify_by_theorems(f, k);
      const auto applicable = applicable_theorems(f, k);
      if (tv.verdict == Verdict::OutsidePaperScope) {
        ++outside_scope_cases;
        const bool uncovered =
            prof.omega + 1 < k &&
            (prof.count(K::I) > 0 || prof.count(K::III) > 0);
        honesty.record(uncovered && applicable.empty(),
                       [&] { return describe_nk(f, k); });
        continue;
      }
      const Verdict oracle = definitional_verdict(f, k);
      equivalence.record(tv.verdict == oracle, [&] {
        return describe_nk(f, k) + " classifier " +
               std::string(to_string(tv.verdict)) + " via " + tv.source +
               ", oracle " + std::string(to_string(oracle));
      });
      single.record(applicable.size() == 1 && applicable.front() == tv.source,
                    [&] {
                      std::string s = describe_nk(f, k) + " applicable:";
                      for (auto id : applicable) s += " " + std::string(id);
                      return s;
                    });
    }
  }
  return {equivalence, single, honesty};
}

std::vector<CheckResult> check_theorem_exhaustiveness(unsigned max_omega) {
  CheckResult exactly_one{"theorems.profile_exactly_one_applies"};
  CheckResult profile_oracle{"theorems.profile_oracle"};

  // Smallest primes of each kind; two orderings of kind I so that both a
  // (4-) prime (17) and a (4+) prime (73) lead.
  std::array<std::vector<u64>, 4> by_kind;
  for (u64 p : odd_primes_below(400)) by_kind[kind_index(mod8_kind(p))].push_back(p);
  std::vector<u64> ones_plus_first = by_kind[0];
  std::rotate(ones_plus_first.begin(),
              std::find(ones_plus_first.begin(), ones_plus_first.end(), 73),
              std::find(ones_plus_first.begin(), ones_plus_first.end(), 73) + 1);

  for (unsigned w = 2; w <= max_omega; ++w) {
    for (unsigned c1 = 0; c1 <= w; ++c1) {
      for (unsigned c3 = 0; c1 + c3 <= w; ++c3) {
        for (unsigned c5 = 0; c1 + c3 + c5 <= w; ++c5) {
          const std::array<unsigned, 4> counts{c1, c3, c5, w - c1 - c3 - c5};
          for (int variant = 0; variant < (c1 > 0 ? 2 : 1); ++variant) {
            std::vector<PrimePower> factors;
            for (std::size_t i = 0; i < 4; ++i) {
              const auto& pool = (i == 0 && variant == 1) ? ones_plus_first : by_kind[i];
              for (unsigned j = 0; j < counts[i]; ++j) factors.push_back({pool[j], 1});
            }
            std::sort(factors.begin(), factors.end());
            const Factorization f(std::move(factors));
            for (unsigned k : {w, w + 1}) {
              const TheoremVerdict tv = classify_by_theorems(f, k);
              const auto applicable = applicable_theorems(f, k);
              exactly_one.record(
                  applicable.size() == 1 && applicable.front() == tv.source,
                  [&] { return describe_nk(f, k); });
              profile_oracle.record(tv.verdict == definitional_verdict(f, k),
                                    [&] { return describe_nk(f, k); });
            }
          }
        }
      }
    }
  }
  return {exactly_one, profile_oracle};
}

std::vector<CheckResult> check_prime_power_signs(u64 prime_bound) {
  CheckResult half{"theorems.prime_power_half_sign"};
  CheckResult lemma{"theorems.quarter_class_iff_kind_one"};
  CheckResult lifts{"theorems.quarter_sign_lifts_to_powers"};
  for (u64 p : odd_primes_below(prime_bound)) {
    u64 q = 1;
    for (unsigned a = 1; a <= 3; ++a) {
      q *= p;
      const u64 phi = q / p * (p - 1);
      const u64 expected =
          prime_power_half_sign(p, a) == Sign::Plus ? 1 : q - 1;
      half.record(mod_pow(2, phi / 2, q) == expected, [&] {
        return "p=" + std::to_string(p) + " a=" + std::to_string(a);
      });
      const bool in_quarter =
          phi % 4 == 0 && (mod_pow(2, phi / 4, q) == 1 ||
                           mod_pow(2, phi / 4, q) == q - 1);
      if (a <= 2) {
        lemma.record(in_quarter == (p % 8 == 1), [&] {
          return "p=" + std::to_string(p) + " a=" + std::to_string(a);
        });
      }
      if (p % 8 == 1) {
        const u64 want =
            prime_quarter_class(p) == QuarterClass::FourPlus ? 1 : q - 1;
        lifts.record(mod_pow(2, phi / 4, q) == want, [&] {
          return "p=" + std::to_string(p) + " a=" + std::to_string(a);
        });
      }
    }
  }
  return {half, lemma, lifts};
}

CheckResult check_kind_square_closure(u64 prime_bound) {
  CheckResult check{"theorems.kind_two_pair_mod8"};
  std::vector<u64> twos;
  for (u64 p : odd_primes_below(prime_bound)) {
    if (p % 8 == 3) twos.push_back(p);
  }
  for (std::size_t i = 0; i < twos.size(); ++i) {
    for (std::size_t j = i + 1; j < twos.size(); ++j) {
      for (unsigned a = 1; a <= 2; ++a) {
        for (unsigned b = 1; b <= 2; ++b) {
          u128 n = 1;
          for (unsigned e = 0; e < a; ++e) n *= twos[i];
          for (unsigned e = 0; e < b; ++e) n *= twos[j];
          const auto r = static_cast<unsigned>(n % 8);
          check.record(r == 1 || r == 3, [&] {
            return "p=" + std::to_string(twos[i]) + " q=" + std::to_string(twos[j]);
          });
        }
      }
    }
  }
  return check;
}

std::vector<CheckResult> check_four_fixtures(u64 prime_bound) {
  std::array<CheckResult, 9> p;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i].name = "fixtures.four.P" + std::to_string(i + 1);
  }
  const auto primes = odd_primes_below(prime_bound);

  // P1: three or more distinct primes.
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      for (std::size_t l = j + 1; l < primes.size(); ++l) {
        expect_verdict(p[0], Factorization({{primes[i], 1}, {primes[j], 1}, {primes[l], 1}}),
                       2, Verdict::Plus);
      }
    }
  }
  for (std::size_t i = 0; i + 3 < primes.size() && i < 12; ++i) {
    expect_verdict(p[0],
                   Factorization({{primes[i], 1}, {primes[i + 1], 2},
                                  {primes[i + 2], 1}, {primes[i + 3], 1}}),
                   2, Verdict::Plus);
  }

  // P2-P6: two distinct primes.
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const K x = mod8_kind(primes[i]), y = mod8_kind(primes[j]);
      auto either = [&](K a, K b) { return (x == a && y == b) || (x == b && y == a); };
      for (unsigned a = 1; a <= 2; ++a) {
        for (unsigned b = 1; b <= 2; ++b) {
          const Factorization f = pair_of(primes[i], a, primes[j], b);
          if (x == K::I || y == K::I) expect_verdict(p[1], f, 2, Verdict::Plus);
          if (either(K::IV, K::IV) || either(K::III, K::III)) {
            expect_verdict(p[2], f, 2, Verdict::Plus);
          }
          if (either(K::II, K::II)) expect_verdict(p[3], f, 2, Verdict::Minus);
          if (either(K::II, K::IV) || either(K::II, K::III)) {
            expect_verdict(p[4], f, 2, Verdict::Neither);
          }
          if (either(K::III, K::IV)) expect_verdict(p[5], f, 2, Verdict::Neither);
        }
      }
    }
  }

  // P7: a prime power in (4+) or (4-) has p == 1 mod 8.
  for (u64 prime : primes) {
    for (unsigned a = 1; a <= 3; ++a) {
      const Factorization f({{prime, a}});
      const bool member = definitional_verdict(f, 2) != Verdict::Neither;
      const Verdict tv = classify_by_theorems(f, 2).verdict;
      p[6].record((!member || prime % 8 == 1) &&
                      ((tv != Verdict::Neither) == (prime % 8 == 1)),
                  [&] { return describe_nk(f, 2); });
    }
  }

  // P8, P9: n == 5 or 7 mod 8 is never in (4-).
  const u64 n_bound = prime_bound * prime_bound;
  for (u64 n = 3; n < n_bound; n += 2) {
    if (n % 8 != 5 && n % 8 != 7) continue;
    const Factorization f = factorize(n);
    const bool ok = definitional_verdict(f, 2) != Verdict::Minus &&
                    classify_by_theorems(f, 2).verdict != Verdict::Minus;
    p[n % 8 == 5 ? 7 : 8].record(ok, [&] { return describe_nk(f, 2); });
  }
  return {p.begin(), p.end()};
}

std::vector<CheckResult> check_eight_fixtures(u64 prime_bound) {
  std::map<std::string, CheckResult> triple;
  for (const char* id : {"triple:P1", "triple:P2", "triple:P3"}) {
    triple[id].name = std::string("fixtures.eight.") + (id + 7);
  }
  CheckResult unmatched{"fixtures.eight.triple_table_total"};
  const auto primes = odd_primes_below(prime_bound);

  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      for (std::size_t l = j + 1; l < primes.size(); ++l) {
        const Factorization f({{primes[i], 1}, {primes[j], 1}, {primes[l], 1}});
        const TheoremVerdict fx = triple_kind_fixture(
            {mod8_kind(primes[i]), mod8_kind(primes[j]), mod8_kind(primes[l])});
        auto it = triple.find(fx.source);
        unmatched.record(it != triple.end(), [&] { return describe_nk(f, 3); });
        if (it != triple.end()) expect_verdict(it->second, f, 3, fx.verdict);
      }
    }
  }

  // All 64 ordered kind triples get a verdict matching the classifier.
  CheckResult coverage{"fixtures.eight.ordered_triple_coverage"};
  std::array<std::vector<u64>, 4> by_kind;
  for (u64 p : odd_primes_below(100)) by_kind[kind_index(mod8_kind(p))].push_back(p);
  for (K a : kKinds) {
    for (K b : kKinds) {
      for (K c : kKinds) {
        const TheoremVerdict fx = triple_kind_fixture({a, b, c});
        std::array<std::size_t, 4> used{};
        std::vector<PrimePower> factors;
        for (K kind : {a, b, c}) {
          factors.push_back({by_kind[kind_index(kind)][used[kind_index(kind)]++], 1});
        }
        std::sort(factors.begin(), factors.end());
        const Factorization f(std::move(factors));
        coverage.record(fx.verdict != Verdict::OutsidePaperScope &&
                            fx.verdict == classify_by_theorems(f, 3).verdict,
                        [&] {
                          return std::string(to_string(a)) + "," +
                                 std::string(to_string(b)) + "," +
                                 std::string(to_string(c));
                        });
      }
    }
  }

  std::array<CheckResult, 6> pair;  // P4..P9
  for (std::size_t i = 0; i < pair.size(); ++i) {
    pair[i].name = "fixtures.eight.P" + std::to_string(i + 4);
  }
  std::vector<bool> quarter_member(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    quarter_member[i] = in_four_plus_or_minus(primes[i]);
  }
  auto two_or_four = [](K kind) { return kind == K::II || kind == K::IV; };
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i == j) continue;
      // Ordered: p = primes[i], q = primes[j].
      const u64 pp = primes[i], qq = primes[j];
      const K x = mod8_kind(pp), y = mod8_kind(qq);
      for (unsigned a = 1; a <= 2; ++a) {
        for (unsigned b = 1; b <= 2; ++b) {
          const Factorization f = pair_of(pp, a, qq, b);
          if (i < j && x == K::III && y == K::III) {
            expect_verdict(pair[0], f, 3, Verdict::Minus);
          }
          if (x == K::I && (y == K::I || y == K::III) && (y != K::I || i < j)) {
            expect_verdict(pair[1], f, 3, Verdict::Plus);
          }
          if (x == K::I && two_or_four(y)) {
            if (prime_quarter_class(pp) == QuarterClass::FourPlus) {
              expect_verdict(pair[2], f, 3, Verdict::Plus);
            } else {
              expect_verdict(pair[3], f, 3, Verdict::Neither);
            }
          }
          if (i < j && two_or_four(x) && two_or_four(y)) {
            expect_verdict(pair[4], f, 3, Verdict::Neither);
          }
        }
      }
      if (i < j && quarter_member[i] && quarter_member[j]) {
        expect_verdict(pair[5], pair_of(pp, 1, qq, 1), 3, Verdict::Plus);
      }
    }
  }

  std::vector<CheckResult> out;
  for (auto& [id, c] : triple) out.push_back(std::move(c));
  out.push_back(std::move(unmatched));
  out.push_back(std::move(coverage));
  for (auto& c : pair) out.push_back(std::move(c));
  return out;
}

std::vector<CheckResult> check_dynamics(u64 max_n) {
  CheckResult theorem_a{"dynamics.theorem_a"};
  CheckResult count{"dynamics.cycle_count_is_maximal_plus"};
  CheckResult period{"dynamics.period_is_order_of_two"};
  CheckResult partition{"dynamics.cycle_partition"};
  for (u64 n = 3; n <= max_n; n += 2) {
    theorem_a.record(verify_theorem_a(n), [&] { return describe_n(n); });
    const CycleStructure cs = cycle_decomposition(n);
    count.record(cs.cycle_count == maximal_plus(n), [&] { return describe_n(n); });
    period.record(cs.period_t == order_of_two(n), [&] { return describe_n(n); });

    std::vector<unsigned> hits(n, 0);
    bool ok = true;
    u64 prev_lead = 0;
    for (const auto& cycle : cs.cycles) {
      ok = ok && cycle.front() > prev_lead &&
           cycle.front() == *std::min_element(cycle.begin(), cycle.end());
      prev_lead = cycle.front();
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        ++hits[cycle[i]];
        ok = ok && cycle[(i + 1) % cycle.size()] == 2 * cycle[i] % n;
      }
    }
    for (u64 x = 0; x < n; ++x) {
      ok = ok && hits[x] == (std::gcd(x, n) == 1 ? 1u : 0u);
    }
    partition.record(ok, [&] { return describe_n(n); });
  }
  return {theorem_a, count, period, partition};
}

VerifyReport run_verification(Suite suite, u64 max_n, unsigned max_k) {
  VerifyReport report;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Props) {
    report.append(check_arith_properties(max_n));
    report.append(check_class_properties(max_n));
  }
  if (all || suite == Suite::Theorems) {
    report.append(check_theorem_oracle(max_n, max_k, report.outside_scope_cases));
    report.append(check_theorem_exhaustiveness(8));
    const u64 prime_bound = std::max(max_n, kFixturePrimeBound);
    report.append(check_prime_power_signs(prime_bound));
    report.checks.push_back(check_kind_square_closure(std::min<u64>(prime_bound, 10'000)));
    report.append(check_four_fixtures(kFixturePrimeBound));
    report.append(check_eight_fixtures(kFixturePrimeBound));
  }
  if (all || suite == Suite::Dynamics) report.append(check_dynamics(max_n));
  return report;
}

void print_report(std::ostream& os, const VerifyReport& report) {
  u64 checked = 0, failed = 0;
  for (const auto& c : report.checks) {
    checked += c.checked;
    failed += c.failed;
    os << (c.passed() ? "[PASS] " : "[FAIL] ") << c.name
       << ": checked=" << c.checked << " passed=" << c.checked - c.failed
       << " failed=" << c.failed << '\n';
    if (!c.passed()) os << "       first counterexample: " << c.first_counterexample << '\n';
  }
  os << "outside-scope cases: " << report.outside_scope_cases << '\n'
     << "total: checked=" << checked << " passed=" << checked - failed
     << " failed=" << failed << '\n';
}

}  // namespace fermat_euler
