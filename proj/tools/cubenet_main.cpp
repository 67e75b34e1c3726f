#include "cubenet/fock.hpp"
#include "cubenet/reports.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iostream>

namespace {

using cubenet::CommandResult;
using cubenet::RunConfig;

int emit(const CommandResult& result, const std::string& out_path,
         const std::string& format) {
  std::string text;
  if (format == "csv")
    text = cubenet::report_to_csv(result.report);
  else
    text = result.report.dump(2) + "\n";

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cubenet: cannot open output file '" << out_path << "'\n";
      return 1;
    }
    out << text;
  }
  return result.exit_code;
}

void add_param_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--U0", config.params.U0, "U0 coupling");
  cmd->add_option("--U1", config.params.U1, "U1 coupling");
  cmd->add_option("--U", config.params.U, "U coupling");
  cmd->add_option("--J", config.params.J, "tunnelling amplitude (J > 0 intended)");
}

void add_io_flags(CLI::App* cmd, std::string& out_path, std::string& format) {
  cmd->add_option("--out", out_path, "output file (default: stdout)");
  cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagonalization and Bethe-ansatz solver for the two "
               "integrable bosonic cube-network models"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file with the same keys as the flags");
  app.allow_config_extras(CLI::config_extras_mode::ignore);

  RunConfig config;
  std::string out_path;
  std::string format = "json";

  auto* dims = app.add_subcommand("dims", "sector dimension cross-checks");
  dims->add_option("--n-max", config.n_max, "largest boson number")
      ->default_val(6);
  add_io_flags(dims, out_path, format);

  auto* verify = app.add_subcommand(
      "verify", "run the algebraic verification suites and emit a report");
  verify->add_option("--model", config.model, "1, 2 or 0 for both")
      ->check(CLI::IsMember({0, 1, 2}))
      ->default_val(0);
  verify->add_option("--n-max", config.n_max, "largest sector for operator checks")
      ->default_val(3);
  verify->add_option("--seed", config.seed, "seed for randomized draws");
  verify->add_flag("--inject-fault", config.inject_fault,
                   "corrupt one conserved charge (harness hook; forces exit 1)");
  add_io_flags(verify, out_path, format);

  auto* spectrum =
      app.add_subcommand("spectrum", "eigenvalues of a Hamiltonian variant");
  spectrum->add_option("--model", config.model, "1 or 2")
      ->check(CLI::IsMember({1, 2}))
      ->required();
  spectrum->add_option("--n", config.n, "boson number")->required();
  spectrum
      ->add_option("--variant", config.variant,
                   "canonical | printed_a | printed_b | free")
      ->check(CLI::IsMember({"canonical", "printed_a", "printed_b", "free"}));
  spectrum->add_option("--cluster-tol", config.cluster_tol_factor,
                       "degeneracy clustering tolerance (x spectral range)");
  add_param_flags(spectrum, config);
  add_io_flags(spectrum, out_path, format);

  auto* bethe = app.add_subcommand(
      "bethe", "sector-by-sector Bethe solutions checked against exact "
               "diagonalization");
  bethe->add_option("--model", config.model, "1 or 2")
      ->check(CLI::IsMember({1, 2}))
      ->required();
  bethe->add_option("--n", config.n, "boson number")->required();
  bethe->add_option("--match-tol", config.match_tol_factor,
                    "spectrum match tolerance (x spectral range)");
  bethe->add_option("--seed", config.seed, "seed (reserved for future sweeps)");
  add_param_flags(bethe, config);
  add_io_flags(bethe, out_path, format);

  auto* compare = app.add_subcommand(
      "compare", "distances between printed and canonical Hamiltonian forms");
  compare->add_option("--model", config.model, "1, 2 or 0 for both")
      ->check(CLI::IsMember({0, 1, 2}))
      ->default_val(0);
  compare->add_option("--n", config.n, "compare sectors 1..n")->default_val(2);
  add_param_flags(compare, config);
  add_io_flags(compare, out_path, format);

  CLI11_PARSE(app, argc, argv);

  if (config.params.J <= 0.0 &&
      (spectrum->parsed() || bethe->parsed() || compare->parsed()))
    std::cerr << "cubenet: warning: J <= 0 (the models are stated for J > 0; "
                 "the algebra tolerates any real J)\n";

  try {
    CommandResult result;
    if (dims->parsed())
      result = cubenet::cmd_dims(config);
    else if (verify->parsed())
      result = cubenet::cmd_verify(config);
    else if (spectrum->parsed())
      result = cubenet::cmd_spectrum(config);
    else if (bethe->parsed())
      result = cubenet::cmd_bethe(config);
    else
      result = cubenet::cmd_compare(config);
    return emit(result, out_path, format);
  } catch (const cubenet::SectorCapExceeded& e) {
    std::cerr << "cubenet: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cubenet: " << e.what() << "\n";
    return 1;
  }
}
