#include "fermat_euler/report.hpp"

#include <sstream>

#include "fermat_euler/classes.hpp"
#include "json.hpp"

namespace fermat_euler {
namespace {

std::string format_factorization(const Factorization& f) {
  std::string out;
  for (const auto& [p, e] : f) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string power_of_two_label(unsigned k) {
  return "(" + std::to_string(u64{1} << k) + "+-)";
}

}  // namespace

Verdict definitional_verdict(u64 n, unsigned k) {
  if (k >= 63) throw std::domain_error("k too large for the oracle");
  const u64 index = u64{1} << k;
  if (is_in_plus(n, index)) return Verdict::Plus;
  if (is_in_minus(n, index)) return Verdict::Minus;
  return Verdict::Neither;
}

Verdict definitional_verdict(const Factorization& f, unsigned k) {
  if (k >= 63) throw std::domain_error("k too large for the oracle");
  const u64 n = f.value();
  require_odd_modulus(n);
  const u64 phi = euler_phi(f);
  const u64 index = u64{1} << k;
  if (phi % index != 0) return Verdict::Neither;
  const u64 r = mod_pow(2, phi / index, n);
  if (r == 1) return Verdict::Plus;
  if (r == n - 1) return Verdict::Minus;
  return Verdict::Neither;
}

TableRow table_row(u64 n) {
  const Factorization f = factorize(n);
  const ClassRecord rec = class_record(n, f);
  const auto omega = static_cast<unsigned>(f.omega());
  return TableRow{
      .n = n,
      .phi = rec.phi,
      .period_t = rec.period_t,
      .n_max = rec.n_max,
      .m_max = rec.m_max,
      .omega = omega,
      .kinds = kinds_string(f),
      .theorem_source = classify_by_theorems(f, omega).source,
  };
}

std::vector<TableRow> build_table(u64 max_n) {
  std::vector<TableRow> rows;
  for (u64 n = 3; n < max_n; n += 2) rows.push_back(table_row(n));
  return rows;
}

void write_csv(std::ostream& os, std::span<const TableRow> rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.phi << ',' << r.period_t << ',' << r.n_max << ',';
    if (r.m_max) os << *r.m_max;
    os << ',' << r.omega << ",\"" << r.kinds << "\"," << r.theorem_source
       << '\n';
  }
}

void write_json(std::ostream& os, std::span<const TableRow> rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    obj["n"] = r.n;
    obj["phi"] = r.phi;
    obj["period_t"] = r.period_t;
    obj["n_max"] = r.n_max;
    obj["m_max"] = r.m_max ? nlohmann::ordered_json(*r.m_max) : nullptr;
    obj["omega"] = r.omega;
    obj["kinds"] = r.kinds;
    obj["theorem_source"] = r.theorem_source;
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

std::string classification_report(u64 n, std::optional<unsigned> k,
                                  bool resolve_oracle) {
  require_odd_modulus(n);
  if (k && *k < 1) throw std::domain_error("k must be >= 1");
  const Factorization f = factorize(n);
  const ClassRecord rec = class_record(n, f);
  const ResidueProfile prof = residue_profile(f);

  std::ostringstream os;
  os << "n = " << n << '\n'
     << "factorization: " << format_factorization(f) << '\n'
     << "residue profile: omega=" << prof.omega;
  for (Mod8Kind kind : {Mod8Kind::I, Mod8Kind::II, Mod8Kind::III, Mod8Kind::IV}) {
    os << ' ' << to_string(kind) << '=' << prof.count(kind);
  }
  os << " (" << kinds_string(f) << ")\n"
     << "phi = " << rec.phi << '\n'
     << "period T = " << rec.period_t << '\n'
     << "n_max = " << rec.n_max << "  (n in (" << rec.n_max << "+))\n";
  if (rec.m_max) {
    os << "m_max = " << *rec.m_max << "  (n in (" << *rec.m_max << "-))\n";
  } else {
    os << "m_max = none  (n in no (M-) class)\n";
  }

  std::vector<std::pair<unsigned, TheoremVerdict>> verdicts;
  if (k) {
    verdicts.emplace_back(*k, classify_by_theorems(f, *k));
  } else {
    verdicts = classify_covered_range(f);
  }
  for (auto& [kk, tv] : verdicts) {
    os << "k=" << kk << ' ';
    if (kk < 63) os << power_of_two_label(kk) << ' ';
    os << "-> ";
    if (tv.verdict == Verdict::OutsidePaperScope && resolve_oracle && kk < 63) {
      os << to_string(definitional_verdict(f, kk)) << " via "
         << source::kOracle << " (oracle-resolved)\n";
    } else {
      os << to_string(tv.verdict) << " via " << tv.source << '\n';
    }
  }
  return os.str();
}

}  // namespace fermat_euler
