#pragma once

#include <span>

#include "fveg/geometry.hpp"
#include "fveg/grid.hpp"
#include "fveg/reconstruction.hpp"

namespace fveg {

/// Predicted point value at a quadrature point at the half time level.
/// Clipped points carry h = v1 = v2 = 0 with H equal to the local bottom.
struct EvolvedValue {
  double h = 0.0, v1 = 0.0, v2 = 0.0, H = 0.0;
};

enum class PointKind { corner, vmid, hmid };

struct EvoParams {
  double tau = 0.0;  // evolution horizon, dt/2
  double g = 9.81;
  int order = 2;  // 1: piecewise-constant operator on cell averages
  bool entropy_fix = true;
};

/// Linearization at a quadrature point: the arithmetic mean of the modified
/// stencil values, with the depth from the modified free surface and bottom.
struct ConeState {
  double hbar = 0.0, v1bar = 0.0, v2bar = 0.0, cbar = 0.0;
};

ConeState average_state(std::span<const ModCell> cells, double g);

/// True when the modified stencil holds both a wet cell faster than its
/// gravity wave speed and a wet one slower than it.
bool transonic_detect(std::span<const ModCell> cells, double g);

/// Cone footprint for one linearization: center displaced by tau*v,
/// radius tau*c.
Circle build_cone(double xk, double yk, double v1, double v2, double c,
                  double tau);

/// Entropy-fix footprint: the circle comprehending the per-cell footprints.
/// Four-cell stencils merge the two diagonal pairs first.
Circle entropy_fix_cone(double xk, double yk, std::span<const ModCell> cells,
                        double tau, double g);

/// Everything point-specific resolved before integration. The cone lives in
/// coordinates local to the quadrature point; x_shift/y_shift place the grid
/// lines at (m + shift) dx in this frame (0.5 for midpoint kinds).
struct PointEnv {
  int base_i = 0, base_j = 0;
  double x_shift = 0.0, y_shift = 0.0;
  double bP = 0.0;
  int nst = 0;
  std::array<std::array<int, 2>, 4> stencil{};
  std::array<ModCell, 4> mod{};
  int nwet = 0;
  double Hbar = 0.0;
  ConeState avg;
  Circle cone;  // local frame
};

/// Per-arc view of one cell's data: bilinear recovery plus the constant
/// correction for wet cells; dry land above the local wet surface is
/// flattened to it. Coefficients are about the cell center.
struct ArcCellData {
  Bilin H, v1, v2, b;
  double dH = 0.0, dv1 = 0.0, dv2 = 0.0;
};

ArcCellData arc_cell_data(const CartesianGrid& g, const EvoDataGrid& cells,
                          int ci, int cj, double Hbar, int nwet, int order);

PointEnv prepare_point(const CartesianGrid& g, const EvoDataGrid& cells,
                       const CornerData& corners, PointKind kind, int i, int j,
                       const EvoParams& p);

/// Closed-form per-arc integration of the evolution operators over the cone
/// footprint, including the first-order correction and the h >= 0 clip.
EvolvedValue integrate_point(const CartesianGrid& g, const EvoDataGrid& cells,
                             const PointEnv& env, const EvoParams& p);

inline EvolvedValue evolve_point(const CartesianGrid& g,
                                 const EvoDataGrid& cells,
                                 const CornerData& corners, PointKind kind,
                                 int i, int j, const EvoParams& p) {
  const PointEnv env = prepare_point(g, cells, corners, kind, i, j, p);
  return integrate_point(g, cells, env, p);
}

/// Evolved values at all quadrature points of the finite volume update.
struct EvolvedFields {
  Field h_c, v1_c, v2_c, H_c;  // corners, (nx+1) x (ny+1)
  Field h_v, v1_v, v2_v, H_v;  // vertical edge midpoints, (nx+1) x ny
  Field h_h, v1_h, v2_h, H_h;  // horizontal edge midpoints, nx x (ny+1)

  EvolvedFields() = default;
  explicit EvolvedFields(const CartesianGrid& g)
      : h_c(g.nx + 1, g.ny + 1, 0),
        v1_c(g.nx + 1, g.ny + 1, 0),
        v2_c(g.nx + 1, g.ny + 1, 0),
        H_c(g.nx + 1, g.ny + 1, 0),
        h_v(g.nx + 1, g.ny, 0),
        v1_v(g.nx + 1, g.ny, 0),
        v2_v(g.nx + 1, g.ny, 0),
        H_v(g.nx + 1, g.ny, 0),
        h_h(g.nx, g.ny + 1, 0),
        v1_h(g.nx, g.ny + 1, 0),
        v2_h(g.nx, g.ny + 1, 0),
        H_h(g.nx, g.ny + 1, 0) {}
};

void evolve_all(const CartesianGrid& g, const EvoDataGrid& cells,
                const CornerData& corners, const EvoParams& p, bool parallel,
                EvolvedFields& out);

}  // namespace fveg
