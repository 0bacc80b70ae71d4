#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"loopless generation of permutations, combinations, multiset "
               "permutations and parking functions"};
  app.require_subcommand(1);

  std::string gen_kind, gen_format = "full";
  std::vector<int> gen_params;
  auto* gen = app.add_subcommand("gen", "enumerate objects on stdout");
  gen->add_option("kind", gen_kind, "perm|comb|multiperm|parking")->required();
  gen->add_option("params", gen_params, "size parameters (multiplicities for multiperm)")
      ->required();
  gen->add_option("--format", gen_format, "full|delta|count (default full)");

  std::string verify_kind;
  std::vector<int> verify_params;
  auto* verify = app.add_subcommand("verify", "check a run against the brute-force oracle");
  verify->add_option("kind", verify_kind, "perm|comb|multiperm|parking")->required();
  verify->add_option("params", verify_params, "size parameters")->required();

  std::string bench_kind;
  std::vector<int> bench_params;
  int bench_reps = 1;
  auto* bench = app.add_subcommand(
      "bench", "emit with output suppressed, reporting step cost and wall time");
  bench->add_option("kind", bench_kind, "perm|comb|multiperm|parking")->required();
  bench->add_option("params", bench_params, "size parameters")->required();
  bench->add_option("--reps", bench_reps, "repetitions (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed())
    return loopless::cli::run_gen(gen_kind, gen_params, gen_format, std::cout, std::cerr);
  if (verify->parsed())
    return loopless::cli::run_verify(verify_kind, verify_params, std::cout, std::cerr);
  return loopless::cli::run_bench(bench_kind, bench_params, bench_reps, std::cout, std::cerr);
}
