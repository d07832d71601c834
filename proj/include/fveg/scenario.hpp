#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fveg/boundary.hpp"
#include "fveg/grid.hpp"
#include "fveg/solver.hpp"
#include "fveg/state.hpp"

namespace fveg {

/// A benchmark problem: domain, bottom, initial surface and velocity,
/// boundaries, and (when known) the exact water height.
struct Scenario {
  std::string name;
  std::array<double, 2> lo{0.0, 0.0}, hi{1.0, 1.0};
  int default_nx = 1, default_ny = 1;
  double gravity = 9.81;
  double end_time = 1.0;
  std::vector<double> snapshot_times;
  BoundarySet boundaries;
  ScalarFn bottom;                                   // b(x)
  ScalarFn surface0;                                 // H(x, 0)
  std::function<std::array<double, 2>(double, double)> velocity0;
  std::function<double(double, double, double)> exact_h;  // h(x, t), optional
  std::vector<std::array<double, 2>> gages;
  double reference_surface = 0.0;  // still-water level for gage output
};

/// A nonpositive gravity selects the scenario default (9.81; the Thacker
/// cases default to 10 to reproduce the reported periods).
Scenario circular_dam_break(double gravity = -1.0);
Scenario sloping_shore(double gravity = -1.0);
Scenario double_rarefaction(double gravity = -1.0);
Scenario thacker_curved(double gravity = -1.0);
Scenario thacker_planar(double gravity = -1.0);
Scenario conical_island(double gravity = -1.0);
Scenario dam_break_1d(double h_left = 1.0, double h_right = 0.1,
                      double gravity = -1.0);

const std::vector<std::string>& scenario_names();
Scenario make_scenario(const std::string& name, double gravity = -1.0);

/// Cell-averaged initial state: the bottom and the surface are averaged by
/// the 3x3 Gauss rule, then h = max(H - b, 0) per cell so that still-water
/// data is a discrete equilibrium; discharge is depth times the averaged
/// velocity.
ConservedState initial_state(const Scenario& s, const CartesianGrid& g,
                             const Bathymetry& bathy);

/// Bathymetry for a scenario grid, ghost cells from the analytic bottom.
Bathymetry make_scenario_bathymetry(const Scenario& s, const CartesianGrid& g);

/// Exact free surface of the oscillating parabolic basin solutions.
double thacker_curved_surface(double x, double y, double t, double g);
double thacker_planar_surface(double x, double y, double t, double g);
double thacker_bottom(double x, double y);
double thacker_curved_period(double g);
double thacker_planar_period(double g);

/// Similarity solution of the 1D dam break on a flat bottom (dam at x = 0).
/// h_right = 0 gives the dry-bed fan.
struct DamBreakExact {
  double h_l = 0.0, h_r = 0.0, g = 9.81;
  double c_l = 0.0;
  double h_m = 0.0, v_m = 0.0, c_m = 0.0, shock_speed = 0.0;  // wet case

  static DamBreakExact make(double h_left, double h_right, double g);
  std::array<double, 2> eval(double xi) const;  // (h, v) at xi = x/t
};

/// Dry-bed dam break profile at (x, t), dam at x = x0.
std::array<double, 2> ritter_exact(double x, double t, double x0, double h_l,
                                   double g);

struct ErrorNorms {
  double linf = 0.0, l1 = 0.0, l2 = 0.0;
};

/// Errors of a cell-average field against the cell averages of an exact
/// solution (3x3 Gauss). L1 and L2 carry the cell-area factor.
ErrorNorms error_norms(const Field& h, const CartesianGrid& g,
                       const std::function<double(double, double)>& exact);

/// Experimental orders of convergence between consecutive grids refined by
/// factor two: eoc[k] = log2(e[k] / e[k+1]).
std::vector<double> eoc(const std::vector<double>& errors);

}  // namespace fveg
