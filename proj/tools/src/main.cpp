#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "divcodes/error.hpp"
#include "divcodes/matrix_io.hpp"

using namespace divcodes;
using namespace divcodes::cli;

int main(int argc, char** argv) {
  CLI::App app{"Projective divisible binary codes"};
  app.require_subcommand(1);
  JobConfig job;

  auto* check = app.add_subcommand("check", "Report parameters of a generator matrix file");
  check->add_option("file", job.input, "Matrix text file")->required();
  check->add_option("--delta", job.delta, "Divisor to test")->default_val(2);

  auto* classify = app.add_subcommand("classify", "Classify projective delta-divisible codes up to length n");
  classify->add_option("--delta", job.delta, "2, 4 or 8")->required();
  classify->add_option("--n", job.n, "Maximum length")->required();
  classify->add_option("--out", job.out, "JSONL database to write");
  classify->add_option("--workers", job.workers, "Worker threads")->check(CLI::PositiveNumber);
  classify->add_option("--budget", job.budget, "Maximum classes per level (0 = unlimited)");

  auto* construct = app.add_subcommand("construct", "Print a catalog construction as a matrix");
  construct->add_option("--family", job.family, "Family or fixture name")->required();
  construct->add_option("--r", job.r, "Divisibility exponent");
  construct->add_option("--s", job.s, "flat-plus-affine parameter");
  construct->add_option("--k", job.k, "Dimension parameter");
  construct->add_option("--variant", job.variant, "Variant index");
  construct->add_option("--out", job.out, "Matrix file to write");

  auto* spread = app.add_subcommand("spread", "Build a maximal partial spread and its hole code");
  spread->add_option("--v", job.v, "Ambient dimension")->required();
  spread->add_option("--r", job.r, "Member dimension")->required();
  spread->add_flag("--verify", job.verify, "Run the hole-code checks");
  spread->add_option("--greedy", job.greedy, "Keep this many members and extend randomly");
  spread->add_option("--seed", job.seed, "Seed for --greedy");
  spread->add_option("--out", job.out, "Write the hole code matrix here");

  auto* bounds = app.add_subcommand("bounds", "Moment LP for [n,k] delta-divisible codes");
  bounds->add_option("--n", job.n, "Length")->required();
  bounds->add_option("--delta", job.delta, "Divisor")->required();
  bounds->add_option("--k", job.k, "Single dimension (default: all)");

  auto* lengths = app.add_subcommand("lengths", "Realizable, excluded and unknown lengths");
  lengths->add_option("--r", job.r, "Divisibility exponent 1..3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(job, std::cout, std::cerr);
    if (*classify) return cmd_classify(job, std::cout, std::cerr);
    if (*construct) return cmd_construct(job, std::cout, std::cerr);
    if (*spread) return cmd_spread(job, std::cout, std::cerr);
    if (*bounds) return cmd_bounds(job, std::cout, std::cerr);
    if (*lengths) return cmd_lengths(job, std::cout, std::cerr);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
