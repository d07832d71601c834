#pragma once

#include <array>
#include <functional>

#include "fveg/grid.hpp"

namespace fveg {

using ScalarFn = std::function<double(double, double)>;

/// Conserved variables (h, h*v1, h*v2) as cell averages.
/// Invariants: h >= 0 everywhere; h == 0 implies zero discharge.
struct ConservedState {
  Field h, hv1, hv2;
  double time = 0.0;

  ConservedState() = default;
  explicit ConservedState(const CartesianGrid& g)
      : h(g.nx, g.ny, g.ghost),
        hv1(g.nx, g.ny, g.ghost),
        hv2(g.nx, g.ny, g.ghost) {}
};

/// Primitive variables plus the free surface H = h + b. Dry cells carry
/// h = v1 = v2 = 0 and H = b exactly.
struct PrimitiveState {
  Field h, v1, v2, H;

  PrimitiveState() = default;
  explicit PrimitiveState(const CartesianGrid& g)
      : h(g.nx, g.ny, g.ghost),
        v1(g.nx, g.ny, g.ghost),
        v2(g.nx, g.ny, g.ghost),
        H(g.nx, g.ny, g.ghost) {}
};

/// Bottom topography: cell averages plus derived corner and edge-midpoint
/// values. Corner values are the plain stencil averages; the per-step
/// wet/dry modification of these values lives in the reconstruction pass.
struct Bathymetry {
  Field b_cell;    // padded cell averages, ghosts included
  Field b_corner;  // corner lattice (nx+1) x (ny+1), ghost frame 2
  Field b_mid_v;   // midpoints of vertical edges, (nx+1) x ny
  Field b_mid_h;   // midpoints of horizontal edges, nx x (ny+1)
  double gravity = 9.81;
};

/// Builds corner values as stencil averages of b_cell and edge-midpoint
/// values as means of the two corner endpoints. b_cell ghosts must be filled.
Bathymetry make_bathymetry(const CartesianGrid& g, const Field& b_cell,
                           double gravity);

/// Thresholds for wet/dry classification and velocity desingularization.
struct DryParams {
  double eps_h = 1e-8;  // dry cutoff for the water height
  double eps_v = 0.0;   // desingularization depth, dx / L_ref
  double l_ref = 0.0;   // max-norm diameter of the cell-center set

  static DryParams make(const CartesianGrid& g, double eps_h = 1e-8);
};

/// Cell averages of a pointwise field by 3x3 tensor Gauss quadrature
/// (exact through degree 5). Covers ghost cells when with_ghosts is set.
Field cell_average_init(const CartesianGrid& g, const ScalarFn& f,
                        bool with_ghosts = false);

/// Largest flow speed over cells deeper than eps_v (interior only);
/// zero if no such cell exists.
double reference_speed(const ConservedState& u, const CartesianGrid& g,
                       const DryParams& dry);

/// Magnitude-limited velocity for a nearly dry cell: the returned vector has
/// magnitude v_ref*(2 - v_ref/|v|) in the direction of the discharge.
std::array<double, 2> desingularize_velocity(std::array<double, 2> v,
                                             std::array<double, 2> hv,
                                             double v_ref);

/// Largest characteristic speed |v| + 2c over wet cells; ghost rings
/// included when with_ghosts is set (boundary forcing can raise it).
double characteristic_speed_max(const ConservedState& u,
                                const CartesianGrid& g, double eps_h,
                                double gravity, bool with_ghosts);

/// Primitive variables over the padded range: cells below eps_h become
/// exactly (0,0,0) with H = b; nearly dry cells get desingularized
/// velocities. v_ref must come from reference_speed on the same state.
/// char_bound, when nonnegative, caps |v| + 2c per cell: wetting and
/// draining cells otherwise accumulate discharge out of proportion to
/// their mass and the division v = hv/h runs away. Pass -1 to disable.
void conserved_to_primitive(const ConservedState& u, const Bathymetry& bathy,
                            const CartesianGrid& g, const DryParams& dry,
                            double v_ref, double char_bound, bool parallel,
                            PrimitiveState& w);

/// Zeroes cells with h below eps_h in place (mass and discharge), enforcing
/// the dry-state invariant on conserved data.
void zero_dry_cells(ConservedState& u, const CartesianGrid& g,
                    const DryParams& dry, bool parallel);

/// Writes the limited velocities back into the stored discharge wherever a
/// limiter touched the cell. Without this the discharge of a thin film
/// keeps growing while only the primitive velocity is capped, and the
/// runaway re-enters the time step once the cell refills.
void reset_limited_discharge(ConservedState& u, const PrimitiveState& w,
                             const CartesianGrid& g, const DryParams& dry,
                             bool parallel);

/// Eigenvalues (v.xi - c, v.xi, v.xi + c) of the directional Jacobian.
std::array<double, 3> eigenvalues(double h, std::array<double, 2> v,
                                  std::array<double, 2> xi, double g);

}  // namespace fveg
