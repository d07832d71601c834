#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "fveg/boundary.hpp"
#include "fveg/evolution.hpp"
#include "fveg/grid.hpp"
#include "fveg/reconstruction.hpp"
#include "fveg/state.hpp"

namespace fveg {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemeParams {
  double mu = 0.5;
  double eps_h = 1e-8;
  int order = 2;
  bool entropy_fix = true;
  bool parallel = true;
  double dt_all_dry = 1e-3;  // CFL fallback when nothing is wet
  double dt_min = 1e-14;     // stagnation guard
};

/// Split advective fluxes per edge (outward in +x / +y orientation) and the
/// cut-off time steps. A single stored value serves both adjacent cells.
struct EdgeFluxes {
  Field fv[3];  // vertical edges: mass, x-momentum, y-momentum advection
  Field fh[3];
  Field dt_v, dt_h;  // cut-off time step per edge

  EdgeFluxes() = default;
  explicit EdgeFluxes(const CartesianGrid& g) {
    for (auto& f : fv) f = Field(g.nx + 1, g.ny, 0);
    for (auto& f : fh) f = Field(g.nx, g.ny + 1, 0);
    dt_v = Field(g.nx + 1, g.ny, 0);
    dt_h = Field(g.nx, g.ny + 1, 0);
  }
};

struct CellTerms {
  Field src_x, src_y;  // gravity driven source, momentum components
  Field drain;         // draining time per cell

  CellTerms() = default;
  explicit CellTerms(const CartesianGrid& g)
      : src_x(g.nx, g.ny, 0), src_y(g.nx, g.ny, 0), drain(g.nx, g.ny, 0) {}
};

struct StepStats {
  double dt = 0.0;
  double min_h = 0.0;        // after update and zeroing
  double min_h_update = 0.0; // after update, before dry zeroing
  int cut_edges = 0;         // edges with dt_E < dt
};

/// Draining time of a cell: the moment its initial volume is exhausted by
/// the outgoing fluxes. No outflow means no cut-off (returns dt).
double draining_time(double h, double dx, double outflow_sum, double dt);

/// Cut-off time step of an edge from the draining time of its upwind cell;
/// edges without mass flux keep the full step.
double edge_time_step(double mass_flux, double drain_minus_side,
                      double drain_plus_side, double dt);

/// Simpson-combined advective flux through an edge; axis 0 for vertical
/// edges (+x normal), 1 for horizontal.
std::array<double, 3> advective_edge_flux(const std::array<EvolvedValue, 3>& q,
                                          int axis);

/// Gravity-driven source of one cell from the evolved values at the three
/// quadrature-point pairs across it in each direction.
std::array<double, 3> cell_source(const std::array<EvolvedValue, 3>& left,
                                  const std::array<EvolvedValue, 3>& right,
                                  const std::array<EvolvedValue, 3>& bottom,
                                  const std::array<EvolvedValue, 3>& top,
                                  double g);

/// The corrector update with the cut-off fluxes: u -= (sum dt_E F*_E
/// + dt S*) / dx. Returns the smallest updated depth; a depth below
/// -1e-12 * h_max throws SolverError naming the cell.
double fv_update(ConservedState& u, const CartesianGrid& g,
                 const EdgeFluxes& fluxes, const CellTerms& terms, double dt,
                 double h_max, bool parallel);

/// One full predictor-corrector step. Owns the state and all stage storage;
/// stage outputs stay accessible for tests and diagnostics.
class Solver {
 public:
  Solver(CartesianGrid grid, Bathymetry bathymetry, BoundarySet boundaries,
         SchemeParams params);

  void set_state(ConservedState u);
  const ConservedState& state() const { return u_; }
  ConservedState& state() { return u_; }
  const CartesianGrid& grid() const { return grid_; }
  const Bathymetry& bathymetry() const { return bathy_; }
  const DryParams& dry_params() const { return dry_; }
  const SchemeParams& params() const { return params_; }
  SchemeParams& params() { return params_; }
  double time() const { return u_.time; }

  /// CFL time step of the current state (prepares ghosts and primitives).
  double cfl_dt();

  /// Advances by the given dt. Throws SolverError on a negativity failure.
  StepStats step(double dt);

  /// CFL step capped at dt_cap (no cap when dt_cap <= 0).
  StepStats advance(double dt_cap);

  double total_volume() const;  // fixed summation order

  // stage outputs of the last step
  const PrimitiveState& primitives() const { return w_; }
  const CornerData& corners() const { return corners_; }
  const EvoDataGrid& evolution_data() const { return cells_; }
  const EvolvedFields& evolved() const { return evolved_; }
  const EdgeFluxes& fluxes() const { return fluxes_; }
  const CellTerms& cell_terms() const { return terms_; }

 private:
  void prepare();  // ghosts, reference speed, primitives, max depth

  CartesianGrid grid_;
  Bathymetry bathy_;
  BoundarySet bc_;
  SchemeParams params_;
  DryParams dry_;

  ConservedState u_;
  PrimitiveState w_;
  CornerData corners_;
  EvoDataGrid cells_;
  EvolvedFields evolved_;
  EdgeFluxes fluxes_;
  CellTerms terms_;
  double h_max_ = 0.0;
  double char_bound_ = -1.0;  // running max of |v| + 2c; -1 until prepared
  double bslope_max_ = 0.0;
};

}  // namespace fveg
