#include "fveg/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "fveg/exec.hpp"

namespace fveg {

namespace {

BoundaryKind parse_bc(const std::string& s) {
  if (s == "open") return BoundaryKind::open;
  if (s == "periodic") return BoundaryKind::periodic;
  if (s == "reflective") return BoundaryKind::reflective;
  throw ConfigError("unknown boundary kind '" + s + "'");
}

std::string snapshot_name(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snapshot_t%.6f.dat", t);
  return buf;
}

}  // namespace

Scenario configure_scenario(const RunConfig& cfg) {
  Scenario s = (cfg.scenario == "dam-break-1d")
                   ? dam_break_1d(cfg.dam_h_left, cfg.dam_h_right, cfg.gravity)
                   : make_scenario(cfg.scenario, cfg.gravity);
  if (cfg.end_time >= 0.0) s.end_time = cfg.end_time;
  if (!cfg.snapshot_times.empty()) s.snapshot_times = cfg.snapshot_times;
  if (cfg.lake_at_rest) {
    s.velocity0 = [](double, double) { return std::array<double, 2>{0, 0}; };
    auto drop_inflow = [](BoundaryKind& k) {
      if (k == BoundaryKind::inflow) k = BoundaryKind::open;
    };
    drop_inflow(s.boundaries.west);
    drop_inflow(s.boundaries.east);
    drop_inflow(s.boundaries.south);
    drop_inflow(s.boundaries.north);
  }
  if (!cfg.bc_override.empty()) {
    const BoundaryKind k = parse_bc(cfg.bc_override);
    s.boundaries.west = s.boundaries.east = k;
    s.boundaries.south = s.boundaries.north = k;
  }
  for (double t : s.snapshot_times)
    if (t > s.end_time + 1e-12)
      throw ConfigError("snapshot time " + std::to_string(t) +
                        " beyond end time " + std::to_string(s.end_time));
  return s;
}

CartesianGrid make_run_grid(const Scenario& s, int nx_override,
                            int ny_override) {
  int nx = nx_override > 0 ? nx_override : s.default_nx;
  int ny = ny_override > 0 ? ny_override : s.default_ny;
  if (nx_override > 0 && ny_override <= 0) {
    const double aspect = (s.hi[1] - s.lo[1]) / (s.hi[0] - s.lo[0]);
    ny = static_cast<int>(std::lround(nx * aspect));
  }
  return build_grid(s.lo, s.hi, nx, ny);
}

SchemeParams make_scheme_params(const RunConfig& cfg) {
  SchemeParams p;
  p.mu = cfg.mu;
  p.eps_h = cfg.eps_h;
  p.order = cfg.order;
  p.entropy_fix = cfg.entropy_fix;
  p.parallel = cfg.parallel;
  p.dt_min = cfg.dt_min;
  p.dt_all_dry = cfg.dt_all_dry;
  return p;
}

Solver make_solver(const Scenario& s, const CartesianGrid& g,
                   const SchemeParams& params) {
  Bathymetry bathy = make_scenario_bathymetry(s, g);
  Solver solver(g, std::move(bathy), s.boundaries, params);
  solver.set_state(initial_state(s, g, solver.bathymetry()));
  return solver;
}

RunResult run_scenario(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.threads > 0) set_threads(cfg.threads);
  const Scenario s = configure_scenario(cfg);
  const CartesianGrid grid = make_run_grid(s, cfg.nx, cfg.ny);
  Solver solver = make_solver(s, grid, make_scheme_params(cfg));

  const std::filesystem::path outdir(cfg.outdir);
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw IoError("cannot create output directory " + outdir.string());

  std::vector<double> events = s.snapshot_times;
  if (events.empty() || std::abs(events.back() - s.end_time) > 1e-12)
    events.push_back(s.end_time);

  GageRecorder gages(s.gages, s.reference_surface);
  std::vector<std::array<double, 3>> history;
  std::vector<std::string> snapshot_files;

  RunResult res;
  res.volume_initial = solver.total_volume();
  res.min_h = res.min_h_update = std::numeric_limits<double>::max();
  const auto wall0 = std::chrono::steady_clock::now();

  if (!s.gages.empty())
    gages.sample(grid, solver.bathymetry(), solver.state(), solver.time());

  std::size_t next_event = 0;
  // time zero snapshots first
  while (next_event < events.size() && events[next_event] <= 1e-14) {
    const std::string name = snapshot_name(events[next_event]);
    write_snapshot(outdir / name, grid, solver.bathymetry(), solver.state(),
                   cfg.eps_h);
    snapshot_files.push_back(name);
    ++next_event;
  }

  while (next_event < events.size()) {
    const double target = events[next_event];
    while (solver.time() < target - 1e-12 * std::max(1.0, target)) {
      const StepStats st = solver.advance(target - solver.time());
      ++res.steps;
      res.min_h = std::min(res.min_h, st.min_h);
      res.min_h_update = std::min(res.min_h_update, st.min_h_update);
      history.push_back({solver.time(), solver.total_volume(), st.min_h});
      if (!s.gages.empty())
        gages.sample(grid, solver.bathymetry(), solver.state(), solver.time());
    }
    solver.state().time = target;  // snap off the last-step round-off
    const std::string name = snapshot_name(target);
    write_snapshot(outdir / name, grid, solver.bathymetry(), solver.state(),
                   cfg.eps_h);
    snapshot_files.push_back(name);
    ++next_event;
  }

  const auto wall1 = std::chrono::steady_clock::now();
  res.wall_seconds = std::chrono::duration<double>(wall1 - wall0).count();
  res.end_time = solver.time();
  res.volume_final = solver.total_volume();
  if (res.steps == 0) res.min_h = res.min_h_update = 0.0;

  write_history(outdir / "history.dat", history);
  if (!s.gages.empty()) gages.write(outdir);

  nlohmann::json manifest;
  manifest["scenario"] = s.name;
  manifest["nx"] = grid.nx;
  manifest["ny"] = grid.ny;
  manifest["dx"] = grid.dx;
  manifest["gravity"] = s.gravity;
  manifest["mu"] = cfg.mu;
  manifest["eps_h"] = cfg.eps_h;
  manifest["order"] = cfg.order;
  manifest["entropy_fix"] = cfg.entropy_fix;
  manifest["lake_at_rest"] = cfg.lake_at_rest;
  manifest["bc_override"] = cfg.bc_override;
  manifest["end_time"] = res.end_time;
  manifest["steps"] = res.steps;
  manifest["wall_seconds"] = res.wall_seconds;
  manifest["min_h"] = res.min_h;
  manifest["min_h_before_zeroing"] = res.min_h_update;
  manifest["volume_initial"] = res.volume_initial;
  manifest["volume_final"] = res.volume_final;
  manifest["volume_drift_rel"] =
      (res.volume_initial != 0.0)
          ? (res.volume_final - res.volume_initial) / res.volume_initial
          : 0.0;
  manifest["snapshots"] = snapshot_files;
  manifest["history"] = "history.dat";
  manifest["threads"] = cfg.parallel ? max_threads() : 1;
  {
    std::FILE* f = std::fopen((outdir / "manifest.json").string().c_str(), "w");
    if (!f) throw IoError("cannot write manifest in " + outdir.string());
    const std::string text = manifest.dump(2);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fputc('\n', f);
    std::fclose(f);
  }
  return res;
}

std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.threads > 0) set_threads(cfg.threads);
  const Scenario base = configure_scenario(cfg);
  if (!base.exact_h)
    throw ConfigError("scenario '" + base.name +
                      "' has no exact solution for a convergence study");
  std::vector<int> grids = cfg.grids;
  if (grids.empty()) grids = {25, 50, 100};

  std::vector<ConvergenceRow> rows;
  for (int n : grids) {
    const CartesianGrid grid = build_grid(base.lo, base.hi, n, n);
    Solver solver = make_solver(base, grid, make_scheme_params(cfg));
    while (solver.time() < base.end_time - 1e-12)
      solver.advance(base.end_time - solver.time());
    const double t = base.end_time;
    ConvergenceRow row;
    row.n = n;
    row.errors = error_norms(
        solver.state().h, grid,
        [&](double x, double y) { return base.exact_h(x, y, t); });
    rows.push_back(row);
  }

  const std::filesystem::path outdir(cfg.outdir);
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw IoError("cannot create output directory " + outdir.string());
  std::FILE* f = std::fopen((outdir / "convergence.dat").string().c_str(), "w");
  if (!f) throw IoError("cannot write convergence table");
  std::fprintf(f, "# %s: error in water height at t=%.17g\n",
               base.name.c_str(), base.end_time);
  std::fprintf(f, "# cells Linf EOC L1 EOC L2 EOC\n");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ErrorNorms& e = rows[k].errors;
    if (k == 0) {
      std::fprintf(f, "%d %.17g - %.17g - %.17g -\n", rows[k].n, e.linf, e.l1,
                   e.l2);
    } else {
      const ErrorNorms& p = rows[k - 1].errors;
      std::fprintf(f, "%d %.17g %.2f %.17g %.2f %.17g %.2f\n", rows[k].n,
                   e.linf, std::log2(p.linf / e.linf), e.l1,
                   std::log2(p.l1 / e.l1), e.l2, std::log2(p.l2 / e.l2));
    }
  }
  std::fclose(f);
  return rows;
}

}  // namespace fveg
