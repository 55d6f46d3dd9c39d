#pragma once

// Table rows, CSV/JSON serialization and the human-readable classification
// report behind the command-line tool.

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fermat_euler/arith.hpp"
#include "fermat_euler/theorems.hpp"

namespace fermat_euler {

inline constexpr std::string_view kCsvHeader =
    "n,phi,period_t,n_max,m_max,omega,kinds,theorem_source";

struct TableRow {
  u64 n = 0;
  u64 phi = 0;
  u64 period_t = 0;
  u64 n_max = 0;
  std::optional<u64> m_max;
  unsigned omega = 0;
  std::string kinds;
  std::string theorem_source;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Membership in (2^k+) / (2^k-) by direct modular exponentiation.
Verdict definitional_verdict(u64 n, unsigned k);

/// Same, with phi(n) taken from a factorization the caller already holds.
Verdict definitional_verdict(const Factorization& f, unsigned k);

/// theorem_source is the classifier's source at k = omega(n), the
/// "exactly k distinct primes" case, which every odd n falls into.
TableRow table_row(u64 n);

/// One row per odd n with 1 < n < max_n, ascending.
std::vector<TableRow> build_table(u64 max_n);

/// Header plus one LF-terminated line per row. m_max is empty when absent;
/// kinds is always double-quoted since it contains commas.
void write_csv(std::ostream& os, std::span<const TableRow> rows);

/// Array of flat objects keyed like the CSV header; m_max is null when absent.
void write_json(std::ostream& os, std::span<const TableRow> rows);

/// Factorization, residue profile, class record and theorem verdicts for
/// each k in [1, omega + 1], or only `k` when given. With `resolve_oracle`,
/// OutsidePaperScope verdicts are replaced by definitional ones and flagged.
std::string classification_report(u64 n, std::optional<unsigned> k,
                                  bool resolve_oracle);

}  // namespace fermat_euler
