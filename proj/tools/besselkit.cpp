#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bessel/cli.hpp"
#include "bessel/errors.hpp"
#include "bessel/io.hpp"

namespace {

struct FuzzFlags {
  std::uint64_t seed = 42;
  std::size_t instances = 1000;
  std::string n_range = "1:12";
  std::string d_range = "1:8";
  std::string field = "mixed";
  double tolerance = bessel::kDefaultTolerance;
  std::vector<double> p_values{1.5, 2.0, 3.0, 6.0};
  double boundary_fraction = 0.25;
  unsigned threads = 1;
};

void add_fuzz_flags(CLI::App* cmd, FuzzFlags& f) {
  cmd->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  cmd->add_option("--instances", f.instances, "Number of instances")->capture_default_str();
  cmd->add_option("--n", f.n_range, "Family size range lo:hi")->capture_default_str();
  cmd->add_option("--dim", f.d_range, "Dimension range lo:hi")->capture_default_str();
  cmd->add_option("--field", f.field, "real, complex or mixed")->capture_default_str();
  cmd->add_option("--tolerance", f.tolerance, "Relative tolerance")->capture_default_str();
  cmd->add_option("--p", f.p_values, "Exponents p > 1")->capture_default_str();
  cmd->add_option("--boundary-fraction", f.boundary_fraction, "Share of boundary-only disk instances")
      ->capture_default_str();
  cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores); never changes results")
      ->capture_default_str();
}

bessel::FuzzConfig to_config(const FuzzFlags& f) {
  bessel::FuzzConfig cfg;
  cfg.master_seed = f.seed;
  cfg.instances = f.instances;
  cfg.n_range = bessel::cli::parse_range(f.n_range);
  cfg.d_range = bessel::cli::parse_range(f.d_range);
  const auto field = bessel::field_choice_from_string(f.field);
  if (!field) throw bessel::Error(bessel::ErrorKind::malformed_input, "--field must be real, complex or mixed");
  cfg.field = *field;
  cfg.tolerance = f.tolerance;
  cfg.p_values = f.p_values;
  cfg.disk.boundary_fraction = f.boundary_fraction;
  cfg.threads = f.threads;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bessel-type inequality toolkit"};
  app.require_subcommand(1);

  bessel::cli::EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate every applicable bound on a family file");
  eval_cmd->add_option("--input", eval.input, "Family JSON file")->required();
  eval_cmd->add_option("--output", eval.output, "Write the report here instead of stdout");
  eval_cmd->add_option("--tolerance", eval.tolerance, "Relative tolerance")->capture_default_str();
  eval_cmd->add_option("--format", eval.format, "json or csv")->capture_default_str();

  FuzzFlags fuzz_flags;
  std::optional<std::string> fuzz_output;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check every bound on seeded random families");
  add_fuzz_flags(fuzz_cmd, fuzz_flags);
  fuzz_cmd->add_option("--output", fuzz_output, "Summary JSON path");

  bessel::cli::ExtremalOptions extremal;
  auto* extremal_cmd = app.add_subcommand("extremal", "Construct a family attaining equality in a sharp bound");
  extremal_cmd->add_option("--target", extremal.target, "root or square (also thm21, thm22)")->capture_default_str();
  extremal_cmd->add_option("--n", extremal.n, "Number of test vectors")->capture_default_str();
  extremal_cmd->add_option("--gamma", extremal.gamma, "gamma as a+bi")->capture_default_str();
  extremal_cmd->add_option("--Gamma", extremal.big_gamma, "Gamma as a+bi")->capture_default_str();
  extremal_cmd->add_option("--dim", extremal.dim, "Dimension of the space")->capture_default_str();
  extremal_cmd->add_option("--seed", extremal.seed, "Randomize x and the orthogonal parts");
  extremal_cmd->add_option("--tolerance", extremal.tolerance, "Equality tolerance")->capture_default_str();
  extremal_cmd->add_option("--output", extremal.output, "Family JSON path");

  FuzzFlags compare_flags;
  std::string ensemble = "generic";
  std::optional<std::string> compare_output;
  auto* compare_cmd = app.add_subcommand("compare", "Tabulate which upper bound on the Bessel sum is tightest");
  add_fuzz_flags(compare_cmd, compare_flags);
  compare_cmd->add_option("--ensemble", ensemble, "generic, disk or orthonormal")->capture_default_str();
  compare_cmd->add_option("--output", compare_output, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bessel::cli::kInputError;
  }

  try {
    if (*eval_cmd) return bessel::cli::cmd_eval(eval, std::cout, std::cerr);
    if (*fuzz_cmd) return bessel::cli::cmd_fuzz({to_config(fuzz_flags), fuzz_output}, std::cout, std::cerr);
    if (*extremal_cmd) return bessel::cli::cmd_extremal(extremal, std::cout, std::cerr);
    if (*compare_cmd) {
      return bessel::cli::cmd_compare({to_config(compare_flags), ensemble, compare_output}, std::cout, std::cerr);
    }
  } catch (const bessel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bessel::cli::kInputError;
  }
  return bessel::cli::kInputError;
}
