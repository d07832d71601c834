#pragma once

#include <span>
#include <vector>

#include "fveg/grid.hpp"
#include "fveg/state.hpp"

namespace fveg {

/// Cell data offered to the dry-stencil modification at a quadrature point.
struct StencilCell {
  double H, b, v1, v2, h;
};

/// Values actually used for averaging and operator evaluation at the point.
struct ModCell {
  double H, b, v1, v2;
  bool dry;
};

/// Wet cells keep their values. Dry cells rising above the largest wet free
/// surface Hbar at the point are flattened to (Hbar, Hbar, 0); the remaining
/// dry cells keep (H = b, 0). Returns the wet count; with no wet cell the
/// inputs are copied through and Hbar is meaningless.
int dry_stencil_modify(std::span<const StencilCell> cells, double& Hbar,
                       std::span<ModCell> out);

/// Per-corner dry-modified stencil means on the extended corner lattice
/// [-1, n+1] in both directions (enough for the recovery on one ghost ring).
struct CornerData {
  Field H, v1, v2, b;
  Field all_dry;  // 1.0 where the corner stencil holds no wet cell

  CornerData() = default;
  explicit CornerData(const CartesianGrid& g)
      : H(g.nx + 1, g.ny + 1, 2),
        v1(g.nx + 1, g.ny + 1, 2),
        v2(g.nx + 1, g.ny + 1, 2),
        b(g.nx + 1, g.ny + 1, 2),
        all_dry(g.nx + 1, g.ny + 1, 2) {}
};

/// Bilinear coefficients about the cell center: w(X,Y) = c0 + cx X + cy Y
/// + cxy X Y with X, Y relative to the center.
struct Bilin {
  double c0 = 0.0, cx = 0.0, cy = 0.0, cxy = 0.0;

  double at(double X, double Y) const { return c0 + cx * X + cy * Y + cxy * X * Y; }
};

/// Everything the evolution stage needs per cell: the continuous recovery,
/// the first-order correction (cell average minus corner mean), and the
/// plain cell averages for dry overrides and first-order operation.
struct CellEvoData {
  Bilin H, v1, v2, b;
  double dH = 0.0, dv1 = 0.0, dv2 = 0.0;
  double Hc = 0.0, bc = 0.0, v1c = 0.0, v2c = 0.0, hc = 0.0;
  bool wet = false;
};

/// Cell-indexed container covering the interior plus one ghost ring.
class EvoDataGrid {
 public:
  EvoDataGrid() = default;
  explicit EvoDataGrid(const CartesianGrid& g)
      : nx_(g.nx), ny_(g.ny), stride_(g.nx + 2) {
    cells_.resize(static_cast<std::size_t>(g.nx + 2) * (g.ny + 2));
  }

  CellEvoData& at(int i, int j) { return cells_[index(i, j)]; }
  const CellEvoData& at(int i, int j) const { return cells_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + 1) * stride_ + (i + 1);
  }
  int nx_ = 0, ny_ = 0, stride_ = 0;
  std::vector<CellEvoData> cells_;
};

/// Stage 1 of the recovery: dry-modified averages at every corner.
void corner_pass(const CartesianGrid& g, const PrimitiveState& w,
                 const Bathymetry& bathy, bool parallel, CornerData& out);

/// Stage 2: the continuous piecewise bilinear interpolant of the corner
/// values (slopes zeroed in dry cells), the correction field, and the cell
/// averages packed per cell.
void build_evolution_data(const CartesianGrid& g, const PrimitiveState& w,
                          const Bathymetry& bathy, const CornerData& corners,
                          bool parallel, EvoDataGrid& out);

}  // namespace fveg
