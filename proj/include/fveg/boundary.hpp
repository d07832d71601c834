#pragma once

#include <functional>

#include "fveg/grid.hpp"
#include "fveg/state.hpp"

namespace fveg {

enum class BoundaryKind { open, periodic, reflective, inflow };

/// Time-dependent inflow forcing: a prescribed free surface on the ghost
/// cells with the velocity closed through the outgoing Riemann invariant
/// v_n = 2 (sqrt(g H) - sqrt(g H_ref)).
struct InflowSpec {
  std::function<double(double)> surface;  // H(t)
  double reference_surface = 0.0;         // still-water level H_ref
};

struct BoundarySet {
  BoundaryKind west = BoundaryKind::open;
  BoundaryKind east = BoundaryKind::open;
  BoundaryKind south = BoundaryKind::open;
  BoundaryKind north = BoundaryKind::open;
  InflowSpec inflow;  // used by any side marked inflow

  bool any(BoundaryKind k) const {
    return west == k || east == k || south == k || north == k;
  }
};

/// Fills both ghost rings of the conserved fields at time t. Periodic sides
/// must be paired. x-sweeps run first over interior rows, then y-sweeps over
/// all columns so that corner ghosts pick up consistent values.
void fill_ghost_cells(ConservedState& u, const CartesianGrid& g,
                      const Field& b_cell, const BoundarySet& bc, double t,
                      double gravity);

/// Ghost values for the bottom: wrap for periodic sides, mirror for walls,
/// nearest-interior copy otherwise. Used when the scenario bottom function
/// cannot be evaluated outside the domain.
void fill_ghost_bathymetry(Field& b_cell, const CartesianGrid& g,
                           const BoundarySet& bc);

}  // namespace fveg
