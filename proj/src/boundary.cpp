#include "fveg/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fveg {

namespace {

void fill_x(ConservedState& u, const CartesianGrid& g, const Field& b,
            const BoundarySet& bc, double t, double grav, int j) {
  const int gh = g.ghost;
  for (int k = 0; k < gh; ++k) {
    // west
    switch (bc.west) {
      case BoundaryKind::open:
        u.h(-1 - k, j) = u.h(0, j);
        u.hv1(-1 - k, j) = u.hv1(0, j);
        u.hv2(-1 - k, j) = u.hv2(0, j);
        break;
      case BoundaryKind::periodic:
        u.h(-1 - k, j) = u.h(g.nx - 1 - k, j);
        u.hv1(-1 - k, j) = u.hv1(g.nx - 1 - k, j);
        u.hv2(-1 - k, j) = u.hv2(g.nx - 1 - k, j);
        break;
      case BoundaryKind::reflective:
        u.h(-1 - k, j) = u.h(k, j);
        u.hv1(-1 - k, j) = -u.hv1(k, j);
        u.hv2(-1 - k, j) = u.hv2(k, j);
        break;
      case BoundaryKind::inflow: {
        const double H = bc.inflow.surface(t);
        const double h = std::max(H - b(-1 - k, j), 0.0);
        const double v1 =
            2.0 * (std::sqrt(grav * H) -
                   std::sqrt(grav * bc.inflow.reference_surface));
        u.h(-1 - k, j) = h;
        u.hv1(-1 - k, j) = h * v1;
        u.hv2(-1 - k, j) = 0.0;
        break;
      }
    }
    // east
    switch (bc.east) {
      case BoundaryKind::open:
        u.h(g.nx + k, j) = u.h(g.nx - 1, j);
        u.hv1(g.nx + k, j) = u.hv1(g.nx - 1, j);
        u.hv2(g.nx + k, j) = u.hv2(g.nx - 1, j);
        break;
      case BoundaryKind::periodic:
        u.h(g.nx + k, j) = u.h(k, j);
        u.hv1(g.nx + k, j) = u.hv1(k, j);
        u.hv2(g.nx + k, j) = u.hv2(k, j);
        break;
      case BoundaryKind::reflective:
        u.h(g.nx + k, j) = u.h(g.nx - 1 - k, j);
        u.hv1(g.nx + k, j) = -u.hv1(g.nx - 1 - k, j);
        u.hv2(g.nx + k, j) = u.hv2(g.nx - 1 - k, j);
        break;
      case BoundaryKind::inflow: {
        const double H = bc.inflow.surface(t);
        const double h = std::max(H - b(g.nx + k, j), 0.0);
        const double v1 =
            -2.0 * (std::sqrt(grav * H) -
                    std::sqrt(grav * bc.inflow.reference_surface));
        u.h(g.nx + k, j) = h;
        u.hv1(g.nx + k, j) = h * v1;
        u.hv2(g.nx + k, j) = 0.0;
        break;
      }
    }
  }
}

void fill_y(ConservedState& u, const CartesianGrid& g, const Field& b,
            const BoundarySet& bc, double t, double grav, int i) {
  const int gh = g.ghost;
  for (int k = 0; k < gh; ++k) {
    switch (bc.south) {
      case BoundaryKind::open:
        u.h(i, -1 - k) = u.h(i, 0);
        u.hv1(i, -1 - k) = u.hv1(i, 0);
        u.hv2(i, -1 - k) = u.hv2(i, 0);
        break;
      case BoundaryKind::periodic:
        u.h(i, -1 - k) = u.h(i, g.ny - 1 - k);
        u.hv1(i, -1 - k) = u.hv1(i, g.ny - 1 - k);
        u.hv2(i, -1 - k) = u.hv2(i, g.ny - 1 - k);
        break;
      case BoundaryKind::reflective:
        u.h(i, -1 - k) = u.h(i, k);
        u.hv1(i, -1 - k) = u.hv1(i, k);
        u.hv2(i, -1 - k) = -u.hv2(i, k);
        break;
      case BoundaryKind::inflow: {
        const double H = bc.inflow.surface(t);
        const double h = std::max(H - b(i, -1 - k), 0.0);
        const double v2 =
            2.0 * (std::sqrt(grav * H) -
                   std::sqrt(grav * bc.inflow.reference_surface));
        u.h(i, -1 - k) = h;
        u.hv1(i, -1 - k) = 0.0;
        u.hv2(i, -1 - k) = h * v2;
        break;
      }
    }
    switch (bc.north) {
      case BoundaryKind::open:
        u.h(i, g.ny + k) = u.h(i, g.ny - 1);
        u.hv1(i, g.ny + k) = u.hv1(i, g.ny - 1);
        u.hv2(i, g.ny + k) = u.hv2(i, g.ny - 1);
        break;
      case BoundaryKind::periodic:
        u.h(i, g.ny + k) = u.h(i, k);
        u.hv1(i, g.ny + k) = u.hv1(i, k);
        u.hv2(i, g.ny + k) = u.hv2(i, k);
        break;
      case BoundaryKind::reflective:
        u.h(i, g.ny + k) = u.h(i, g.ny - 1 - k);
        u.hv1(i, g.ny + k) = u.hv1(i, g.ny - 1 - k);
        u.hv2(i, g.ny + k) = -u.hv2(i, g.ny - 1 - k);
        break;
      case BoundaryKind::inflow: {
        const double H = bc.inflow.surface(t);
        const double h = std::max(H - b(i, g.ny + k), 0.0);
        const double v2 =
            -2.0 * (std::sqrt(grav * H) -
                    std::sqrt(grav * bc.inflow.reference_surface));
        u.h(i, g.ny + k) = h;
        u.hv1(i, g.ny + k) = 0.0;
        u.hv2(i, g.ny + k) = h * v2;
        break;
      }
    }
  }
}

}  // namespace

void fill_ghost_cells(ConservedState& u, const CartesianGrid& g,
                      const Field& b_cell, const BoundarySet& bc, double t,
                      double gravity) {
  if ((bc.west == BoundaryKind::periodic) !=
          (bc.east == BoundaryKind::periodic) ||
      (bc.south == BoundaryKind::periodic) !=
          (bc.north == BoundaryKind::periodic))
    throw std::invalid_argument("boundary: periodic sides must be paired");
  if (bc.any(BoundaryKind::inflow) && !bc.inflow.surface)
    throw std::invalid_argument("boundary: inflow side without surface");
  for (int j = 0; j < g.ny; ++j) fill_x(u, g, b_cell, bc, t, gravity, j);
  for (int i = -g.ghost; i < g.nx + g.ghost; ++i)
    fill_y(u, g, b_cell, bc, t, gravity, i);
}

void fill_ghost_bathymetry(Field& b, const CartesianGrid& g,
                           const BoundarySet& bc) {
  const int gh = g.ghost;
  auto wrap_or_copy_x = [&](BoundaryKind k, int gi, int j, bool west) {
    switch (k) {
      case BoundaryKind::periodic:
        return west ? b(g.nx + gi, j) : b(gi - g.nx, j);
      case BoundaryKind::reflective:
        return west ? b(-1 - gi, j) : b(2 * g.nx - 1 - gi, j);
      default:
        return west ? b(0, j) : b(g.nx - 1, j);
    }
  };
  auto wrap_or_copy_y = [&](BoundaryKind k, int i, int gj, bool south) {
    switch (k) {
      case BoundaryKind::periodic:
        return south ? b(i, g.ny + gj) : b(i, gj - g.ny);
      case BoundaryKind::reflective:
        return south ? b(i, -1 - gj) : b(i, 2 * g.ny - 1 - gj);
      default:
        return south ? b(i, 0) : b(i, g.ny - 1);
    }
  };
  for (int j = 0; j < g.ny; ++j)
    for (int k = 1; k <= gh; ++k) {
      b(-k, j) = wrap_or_copy_x(bc.west, -k, j, true);
      b(g.nx - 1 + k, j) = wrap_or_copy_x(bc.east, g.nx - 1 + k, j, false);
    }
  for (int i = -gh; i < g.nx + gh; ++i)
    for (int k = 1; k <= gh; ++k) {
      b(i, -k) = wrap_or_copy_y(bc.south, i, -k, true);
      b(i, g.ny - 1 + k) = wrap_or_copy_y(bc.north, i, g.ny - 1 + k, false);
    }
}

}  // namespace fveg
