// perfover: counts, enumerations, tables, sequences, and cross-validation
// for perfect partitions, perfect overpartitions, and ordered
// factorizations.
//
// Exit codes: 0 success, 2 usage error, 3 failed cross-check or
// verification, 4 size guard refusal.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "records.hpp"
#include "verify.hpp"

namespace {

using perfover::cli::Format;
using perfover::cli::GlobalOpts;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return Format::Plain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "perfover: perfect partitions, perfect overpartitions, and ordered factorizations"};
  app.require_subcommand(1);

  GlobalOpts opts;
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--xcheck", opts.xcheck,
               "Recompute counts along every applicable independent path; "
               "exit 3 on mismatch");
  app.add_flag("--unicode", opts.unicode,
               "Render overlines and multiplication dots with Unicode in plain output");
  app.add_flag("--force", opts.force, "Override the enumeration size guard");
  app.add_option("--guard", opts.guard, "Size guard for enumeration streams")
      ->capture_default_str();

  // count
  auto* count = app.add_subcommand("count", "Count objects (f, fnk, fv, pp, pop, pop_r)");
  std::string count_kind;
  std::uint64_t count_n = 0;
  std::optional<std::uint32_t> opt_k, opt_v, opt_r;
  count->add_option("kind", count_kind, "What to count")
      ->required()
      ->check(CLI::IsMember({"f", "fnk", "fv", "pp", "pop", "pop_r"}));
  count->add_option("n", count_n, "The integer argument")->required();
  count->add_option("--k", opt_k, "Number of factors / blocks (fnk, pp)");
  count->add_option("--v", opt_v, "Number of factors equal to 2 (fv)");
  count->add_option("--r", opt_r, "Number of overlined parts (pop)");

  // enumerate
  auto* enumerate =
      app.add_subcommand("enumerate", "List objects (factorizations, perfect, overperfect)");
  std::string enum_kind;
  std::uint64_t enum_n = 0;
  std::optional<std::uint32_t> enum_r;
  enumerate->add_option("kind", enum_kind, "What to enumerate")
      ->required()
      ->check(CLI::IsMember({"factorizations", "perfect", "overperfect"}));
  enumerate->add_option("n", enum_n, "The integer argument")->required();
  enumerate->add_option("--r", enum_r, "Restrict to exactly r overlined parts (overperfect)");

  // table
  auto* table = app.add_subcommand("table", "Reproduce a reference table (t1, t2, t3)");
  std::string table_which;
  std::uint64_t table_nmax = 50;
  std::uint32_t table_rmax = 5;
  table->add_option("which", table_which, "Which table")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3"}));
  table->add_option("--nmax", table_nmax, "Largest n for t3")->capture_default_str();
  table->add_option("--rmax", table_rmax, "Largest r column for t3")->capture_default_str();

  // sequence
  auto* sequence =
      app.add_subcommand("sequence", "Emit sequence terms (pop, pop_even, pop_odd)");
  std::string seq_which;
  std::uint64_t seq_terms = 0;
  bool seq_bfile = false;
  sequence->add_option("which", seq_which, "Which sequence")
      ->required()
      ->check(CLI::IsMember({"pop", "pop_even", "pop_odd"}));
  sequence->add_option("--terms", seq_terms,
                       "Number of terms (default: the classic prefix length)");
  sequence->add_flag("--bfile", seq_bfile, "OEIS b-file output: one 'index value' per line");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run the property suites (all, fv, identities, bijection, oracle, tables)");
  std::string verify_suite;
  perfover::cli::VerifyLimits limits;
  std::uint64_t verify_nmax = 0;
  verify->add_option("suite", verify_suite, "Which suite")
      ->required()
      ->check(CLI::IsMember({"all", "fv", "identities", "bijection", "oracle", "tables"}));
  verify->add_option("--nmax", verify_nmax,
                     "Override the suite's primary bound (single suites only)");
  verify->add_option("--pow2-smax", limits.pow2_smax, "Power-of-two closed-form bound")
      ->capture_default_str();
  verify->add_option("--oracle-smax", limits.oracle_smax,
                     "Proposition-vs-enumeration bound")
      ->capture_default_str();
  verify->add_option("--brute-nmax", limits.brute_nmax, "Exhaustive partition search bound")
      ->capture_default_str();
  verify->add_option("--sound-nmax", limits.sound_nmax, "Constructive soundness bound")
      ->capture_default_str();
  verify->add_option("--parity-nmax", limits.parity_nmax, "Even-weight parity bound")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return perfover::cli::kExitUsage;
  }

  opts.format = parse_format(format);

  try {
    if (count->parsed())
      return perfover::cli::cmd_count(count_kind, count_n, opt_k, opt_v, opt_r, opts,
                                      std::cout, std::cerr);
    if (enumerate->parsed())
      return perfover::cli::cmd_enumerate(enum_kind, enum_n, enum_r, opts, std::cout,
                                          std::cerr);
    if (table->parsed())
      return perfover::cli::cmd_table(table_which, table_nmax, table_rmax, opts, std::cout,
                                      std::cerr);
    if (sequence->parsed())
      return perfover::cli::cmd_sequence(seq_which, seq_terms, seq_bfile, opts, std::cout,
                                         std::cerr);
    if (verify->parsed()) {
      if (verify_nmax > 0) {
        if (verify_suite == "fv") limits.fv_nmax = verify_nmax;
        if (verify_suite == "identities") limits.id_nmax = verify_nmax;
        if (verify_suite == "bijection") limits.bij_nmax = verify_nmax;
        if (verify_suite == "oracle") limits.oracle_nmax = verify_nmax;
      }
      return perfover::cli::cmd_verify(verify_suite, limits, opts, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return perfover::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return perfover::cli::kExitCheckFailed;
  }
  return perfover::cli::kExitUsage;
}
