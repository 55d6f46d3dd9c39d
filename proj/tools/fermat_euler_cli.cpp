// Command-line front end: classify, table, verify, cycles.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fermat_euler/dynamics.hpp"
#include "fermat_euler/report.hpp"
#include "fermat_euler/verify.hpp"

namespace fe = fermat_euler;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void check_odd_input(std::int64_t n) {
  if (n < 3 || n % 2 == 0 || static_cast<fe::u64>(n) > fe::kMaxSupported) {
    throw std::domain_error("n must be an odd integer in [3, 2^62], got " +
                            std::to_string(n));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arnold's Fermat-Euler classes (N+) and (M-) for odd integers"};
  app.require_subcommand(1);

  std::int64_t classify_n = 0;
  std::optional<unsigned> classify_k;
  bool resolve_oracle = false;
  auto* classify = app.add_subcommand("classify", "Report classes and theorem verdicts for n");
  classify->add_option("n", classify_n, "Odd integer >= 3")->required();
  classify->add_option("--k", classify_k, "Single k for (2^k+-)")->check(CLI::Range(1u, 62u));
  classify->add_flag("--resolve-oracle", resolve_oracle,
                     "Resolve verdicts no theorem covers by modular exponentiation");

  fe::u64 table_max = 0;
  std::string table_format = "csv";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Class table for odd 1 < n < max");
  table->add_option("--max", table_max, "Exclusive upper bound")->required()->check(CLI::Range(fe::u64{3}, fe::kMaxSupported));
  table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "Output path")->required();

  std::string suite_name = "all";
  fe::u64 verify_max = 0;
  unsigned verify_max_k = 8;
  auto* verify = app.add_subcommand("verify", "Run the property sweeps");
  verify->add_option("--suite", suite_name, "props, theorems, dynamics or all")
      ->check(CLI::IsMember({"props", "theorems", "dynamics", "all"}));
  verify->add_option("--max", verify_max, "Largest n swept")->required()->check(CLI::Range(fe::u64{3}, fe::u64{10'000'000}));
  verify->add_option("--max-k", verify_max_k, "Largest k swept")->check(CLI::Range(1u, 8u));

  std::int64_t cycles_n = 0;
  auto* cycles = app.add_subcommand("cycles", "Cycles of x -> 2x on the Euler group");
  cycles->add_option("n", cycles_n, "Odd integer >= 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) {
      check_odd_input(classify_n);
      std::cout << fe::classification_report(static_cast<fe::u64>(classify_n),
                                             classify_k, resolve_oracle);
    } else if (*table) {
      const auto rows = fe::build_table(table_max);
      std::ofstream out(table_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open " + table_out + " for writing");
      if (table_format == "json") {
        fe::write_json(out, rows);
      } else {
        fe::write_csv(out, rows);
      }
      out.close();
      if (!out) throw std::runtime_error("failed writing " + table_out);
      std::cout << "wrote " << rows.size() << " rows to " << table_out << '\n';
    } else if (*verify) {
      const auto report = fe::run_verification(*fe::parse_suite(suite_name),
                                               verify_max, verify_max_k);
      fe::print_report(std::cout, report);
      return report.passed() ? kExitOk : kExitVerifyFailed;
    } else if (*cycles) {
      check_odd_input(cycles_n);
      std::cout << fe::format_cycles(
                       fe::cycle_decomposition(static_cast<fe::u64>(cycles_n)))
                << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
