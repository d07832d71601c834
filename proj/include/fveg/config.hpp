#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fveg {

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) +
                                          ")"
                                    : msg),
        line_number(line) {}
  int line_number = 0;
};

/// One run of the driver. Zero/negative numeric fields mean "scenario
/// default"; CLI flags override file keys.
struct RunConfig {
  std::string scenario;
  int nx = 0, ny = 0;
  double gravity = -1.0;
  double mu = 0.5;
  double end_time = -1.0;
  std::vector<double> snapshot_times;  // empty: scenario defaults
  std::string outdir = "out";
  std::string format = "dat";
  double eps_h = 1e-8;
  bool entropy_fix = true;
  int order = 2;
  std::vector<int> grids;       // convergence mode grid list
  bool lake_at_rest = false;    // drop forcing/initial motion, keep the basin
  std::string bc_override;      // "", "open", "periodic", "reflective"
  double dam_h_left = 1.0;      // dam-break-1d states (not from a reference)
  double dam_h_right = 0.1;
  double dt_min = 1e-14;
  double dt_all_dry = 1e-3;
  bool parallel = true;
  int threads = 0;

  void validate() const;  // throws ConfigError
};

/// Flat key = value text, optional [scenario] sections whose keys apply only
/// when that scenario is selected. '#' starts a comment.
RunConfig parse_config_file(const std::string& path);

/// Applies one key to the config; used by both the file parser and tests.
void apply_config_key(RunConfig& cfg, const std::string& key,
                      const std::string& value, int line = 0);

}  // namespace fveg
