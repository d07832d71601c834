// Times full solver steps with the OpenMP stage loops against the serial
// reference path on a mid-size dam break.

#include <chrono>
#include <cstdio>
#include <string>

#include "fveg/exec.hpp"
#include "fveg/runner.hpp"
#include "fveg/scenario.hpp"

namespace {

double time_steps(fveg::Solver& solver, int steps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < steps; ++k) solver.advance(0.0);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = 192;
  int steps = 25;
  if (argc > 1) n = std::stoi(argv[1]);
  if (argc > 2) steps = std::stoi(argv[2]);

  const fveg::Scenario s = fveg::circular_dam_break();
  const fveg::CartesianGrid grid = fveg::build_grid(s.lo, s.hi, n, n);
  const double cells = static_cast<double>(grid.cell_count());

  fveg::SchemeParams params;
  params.parallel = false;
  fveg::Solver serial = fveg::make_solver(s, grid, params);
  const double warm = time_steps(serial, 2);
  (void)warm;
  const double t_serial = time_steps(serial, steps);

  params.parallel = true;
  fveg::Solver parallel = fveg::make_solver(s, grid, params);
  time_steps(parallel, 2);
  const double t_parallel = time_steps(parallel, steps);

  std::printf("grid %dx%d, %d steps, %d threads\n", n, n, steps,
              fveg::max_threads());
  std::printf("serial:  %8.3f s  (%.2f Mcell-steps/s)\n", t_serial,
              cells * steps / t_serial / 1e6);
  std::printf("openmp:  %8.3f s  (%.2f Mcell-steps/s)\n", t_parallel,
              cells * steps / t_parallel / 1e6);
  std::printf("speedup: %.2fx\n", t_serial / t_parallel);
  return 0;
}
