// Batch driver for the shallow water solver: runs benchmark scenarios,
// writes plot-ready snapshots, gage series and convergence tables.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <string>

#include "fveg/config.hpp"
#include "fveg/output.hpp"
#include "fveg/runner.hpp"
#include "fveg/scenario.hpp"
#include "fveg/solver.hpp"

namespace {

void add_common_flags(CLI::App* cmd, fveg::RunConfig& cfg,
                      std::string& config_file) {
  cmd->add_option("--config", config_file, "flat key=value config file");
  cmd->add_option("-s,--scenario", cfg.scenario, "scenario id");
  cmd->add_option("--nx", cfg.nx, "cells along x (0: scenario default)");
  cmd->add_option("--ny", cfg.ny, "cells along y (0: derived/default)");
  cmd->add_option("-g,--gravity", cfg.gravity, "gravity override (m/s^2)");
  cmd->add_option("--mu", cfg.mu, "CFL number in (0,1)");
  cmd->add_option("--end", cfg.end_time, "end time override (s)");
  cmd->add_option("--snapshots", cfg.snapshot_times,
                  "snapshot times (space separated)");
  cmd->add_option("-o,--out", cfg.outdir, "output directory");
  cmd->add_option("--eps-h", cfg.eps_h, "dry threshold (m)");
  cmd->add_flag("--entropy-fix,!--no-entropy-fix", cfg.entropy_fix,
                "sonic-cone entropy fix (default on)");
  cmd->add_option("--order", cfg.order,
                  "1: piecewise-constant predictor, 2: combined (default)");
  cmd->add_flag("--lake-at-rest", cfg.lake_at_rest,
                "still-water variant: zero velocity, no inflow forcing");
  cmd->add_option("--bc", cfg.bc_override,
                  "override all boundaries: open|periodic|reflective");
  cmd->add_option("--hl", cfg.dam_h_left, "dam-break-1d left depth");
  cmd->add_option("--hr", cfg.dam_h_right, "dam-break-1d right depth");
  cmd->add_flag("--parallel,!--serial", cfg.parallel,
                "OpenMP stage loops (default on)");
  cmd->add_option("-t,--threads", cfg.threads, "OpenMP thread count");
}

// CLI flags win over config-file keys: parse the file first, then let CLI11
// overwrite whatever was given on the command line.
fveg::RunConfig merge_config(const fveg::RunConfig& cli_cfg,
                             const std::string& config_file, CLI::App* cmd) {
  if (config_file.empty()) return cli_cfg;
  fveg::RunConfig cfg = fveg::parse_config_file(config_file);
  if (cmd->count("--scenario")) cfg.scenario = cli_cfg.scenario;
  if (cmd->count("--nx")) cfg.nx = cli_cfg.nx;
  if (cmd->count("--ny")) cfg.ny = cli_cfg.ny;
  if (cmd->count("--gravity")) cfg.gravity = cli_cfg.gravity;
  if (cmd->count("--mu")) cfg.mu = cli_cfg.mu;
  if (cmd->count("--end")) cfg.end_time = cli_cfg.end_time;
  if (cmd->count("--snapshots")) cfg.snapshot_times = cli_cfg.snapshot_times;
  if (cmd->count("--out")) cfg.outdir = cli_cfg.outdir;
  if (cmd->count("--eps-h")) cfg.eps_h = cli_cfg.eps_h;
  if (cmd->count("--entropy-fix") || cmd->count("--no-entropy-fix"))
    cfg.entropy_fix = cli_cfg.entropy_fix;
  if (cmd->count("--order")) cfg.order = cli_cfg.order;
  if (cmd->count("--lake-at-rest")) cfg.lake_at_rest = cli_cfg.lake_at_rest;
  if (cmd->count("--bc")) cfg.bc_override = cli_cfg.bc_override;
  if (cmd->count("--hl")) cfg.dam_h_left = cli_cfg.dam_h_left;
  if (cmd->count("--hr")) cfg.dam_h_right = cli_cfg.dam_h_right;
  if (cmd->count("--parallel") || cmd->count("--serial"))
    cfg.parallel = cli_cfg.parallel;
  if (cmd->count("--threads")) cfg.threads = cli_cfg.threads;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FVEG shallow water solver with wetting and drying"};
  app.require_subcommand(1);

  fveg::RunConfig cfg;
  std::string config_file;

  CLI::App* run = app.add_subcommand("run", "run one scenario");
  add_common_flags(run, cfg, config_file);

  CLI::App* conv = app.add_subcommand(
      "convergence", "error/EOC study over a list of square grids");
  add_common_flags(conv, cfg, config_file);
  conv->add_option("--grids", cfg.grids, "grid sizes, e.g. --grids 25 50 100");

  CLI::App* list =
      app.add_subcommand("list-scenarios", "print the scenario ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& n : fveg::scenario_names()) std::printf("%s\n", n.c_str());
      return 0;
    }
    if (run->parsed()) {
      const fveg::RunConfig merged = merge_config(cfg, config_file, run);
      if (merged.scenario.empty())
        throw fveg::ConfigError("no scenario given (see list-scenarios)");
      const fveg::RunResult res = fveg::run_scenario(merged);
      std::printf("%s: %d steps to t=%.6g, min h %.3e, wall %.2fs -> %s\n",
                  merged.scenario.c_str(), res.steps, res.end_time, res.min_h,
                  res.wall_seconds, merged.outdir.c_str());
      return 0;
    }
    const fveg::RunConfig merged = merge_config(cfg, config_file, conv);
    if (merged.scenario.empty())
      throw fveg::ConfigError("no scenario given (see list-scenarios)");
    const auto rows = fveg::convergence_study(merged);
    std::printf("# cells Linf EOC L1 EOC L2 EOC\n");
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& e = rows[k].errors;
      if (k == 0) {
        std::printf("%d %.4e - %.4e - %.4e -\n", rows[k].n, e.linf, e.l1,
                    e.l2);
      } else {
        const auto& p = rows[k - 1].errors;
        std::printf("%d %.4e %.2f %.4e %.2f %.4e %.2f\n", rows[k].n, e.linf,
                    std::log2(p.linf / e.linf), e.l1, std::log2(p.l1 / e.l1),
                    e.l2, std::log2(p.l2 / e.l2));
      }
    }
    return 0;
  } catch (const fveg::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const fveg::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 4;
  } catch (const fveg::SolverError& e) {
    std::fprintf(stderr, "runtime failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "runtime failure: %s\n", e.what());
    return 3;
  }
}
