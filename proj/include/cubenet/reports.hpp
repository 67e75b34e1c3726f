#pragma once

#include "cubenet/model.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace cubenet {

/// Everything a CLI run needs; flags and config-file keys map onto these
/// fields one-to-one.
struct RunConfig {
  int model = 0;  // 1, 2, or 0 = both where a command accepts both
  int n = 2;
  ModelParams params{0.0, 0.0, 0.0, 1.0};
  int n_max = 3;
  unsigned seed = 12345;
  double match_tol_factor = 1e-8;    // x spectral range
  double cluster_tol_factor = 1e-8;  // x spectral range
  std::string variant = "canonical";
  bool inject_fault = false;  // corrupts one conserved charge (test hook)
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = 0;
};

CommandResult cmd_dims(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_bethe(const RunConfig& config);
CommandResult cmd_compare(const RunConfig& config);

/// Measured deviations between printed formulas and the internally
/// consistent forms this library adopts. Informational: never affects exit
/// codes.
nlohmann::json paper_discrepancies();

/// Flattened CSV export of a command report (one line per record).
std::string report_to_csv(const nlohmann::json& report);

}  // namespace cubenet
