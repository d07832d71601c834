#pragma once

#include <filesystem>

#include "fveg/config.hpp"
#include "fveg/output.hpp"
#include "fveg/scenario.hpp"
#include "fveg/solver.hpp"

namespace fveg {

struct RunResult {
  int steps = 0;
  double wall_seconds = 0.0;
  double end_time = 0.0;
  double min_h = 0.0;         // over the run, after dry zeroing
  double min_h_update = 0.0;  // over the run, before dry zeroing
  double volume_initial = 0.0;
  double volume_final = 0.0;
};

/// Scenario with all config overrides applied (grid-independent parts).
Scenario configure_scenario(const RunConfig& cfg);

CartesianGrid make_run_grid(const Scenario& s, int nx_override,
                            int ny_override);

SchemeParams make_scheme_params(const RunConfig& cfg);

/// Builds a ready-to-step solver for a scenario on a grid.
Solver make_solver(const Scenario& s, const CartesianGrid& g,
                   const SchemeParams& params);

/// Full batch run: time loop with snapshot/end clamping, gage series,
/// per-step history and a manifest, all under cfg.outdir.
RunResult run_scenario(const RunConfig& cfg);

struct ConvergenceRow {
  int n = 0;
  ErrorNorms errors;
};

/// Error/EOC study over cfg.grids (square grids); requires an exact
/// solution. Writes the table to <outdir>/convergence.dat and returns rows.
std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg);

}  // namespace fveg
