// bstrata: enumerate Cauchon diagrams of the type B_n staircase word, their
// stratum dimensions, and the generating function that counts them.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "bstrata/harness.hpp"

namespace {

void add_format(CLI::App* cmd, bstrata::RunConfig& cfg) {
  static const std::map<std::string, bstrata::OutputFormat> kFormats{
      {"json", bstrata::OutputFormat::json},
      {"csv", bstrata::OutputFormat::csv},
      {"table", bstrata::OutputFormat::table}};
  cmd->add_option("--format", cfg.format, "Output format: json, csv, table")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--out", cfg.out, "Write output to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  bstrata::RunConfig cfg;
  CLI::App app{"Cauchon diagrams and stratum dimensions in type B_n"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand(
      "enumerate", "Enumerate Cauchon diagrams and histogram their dimensions");
  enumerate->add_option("--n", cfg.n, "Rank")->required();
  enumerate->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--counts-only", cfg.counts_only, "Skip dimensions");
  enumerate->add_flag("--unsafe-no-cap", cfg.unsafe_no_cap,
                      "Lift the enumeration size cap");
  add_format(enumerate, cfg);

  auto* gf = app.add_subcommand("gf", "Coefficient polynomials p_n(t) of H(x,t)");
  gf->add_option("--max-n,--n", cfg.max_n, "Largest n to print")->required();
  gf->add_option("--order", cfg.order, "Series truncation order (default 30)");
  gf->add_flag("--evaluate", cfg.evaluate, "Also print p_n(1) and p_n(0)");
  add_format(gf, cfg);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suite,
                     "all, lw, tau, kernel, bruhat or series");
  verify->add_option("--n", cfg.n, "Restrict diagram suites to one rank");
  verify->add_option("--seed", cfg.seed, "Seed for sampled checks");
  add_format(verify, cfg);

  auto* diagram = app.add_subcommand("diagram", "Inspect one diagram");
  diagram->add_option("--n", cfg.n, "Rank")->required();
  diagram->add_option("--bits", cfg.bits, "Diagram mask as hex")->required();
  add_format(diagram, cfg);

  auto* ratio = app.add_subcommand("primitive-ratio",
                                   "Proportion of zero-dimensional strata");
  ratio->add_option("--max-n,--n", cfg.max_n, "Largest n to print")->required();
  ratio->add_option("--order", cfg.order, "Series truncation order (default 100)");
  add_format(ratio, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bstrata::kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  const bstrata::CommandOutput result = bstrata::run_command(cfg);
  if (result.exit_code == bstrata::kExitUsage) {
    std::cerr << result.text;
    return result.exit_code;
  }
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!(file << result.text) || !file.flush()) {
      std::cerr << "error: cannot write " << *cfg.out << "\n";
      return bstrata::kExitUsage;
    }
  } else {
    std::cout << result.text;
  }
  return result.exit_code;
}
