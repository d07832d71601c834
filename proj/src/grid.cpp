#include "fveg/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fveg {

int CartesianGrid::cell_of_x(double x) const {
  const double u = (x - origin[0]) / dx;
  double f = std::floor(u);
  if (f == u) f -= 1.0;  // on a grid line: lower-index cell
  return static_cast<int>(f);
}

int CartesianGrid::cell_of_y(double y) const {
  const double u = (y - origin[1]) / dx;
  double f = std::floor(u);
  if (f == u) f -= 1.0;
  return static_cast<int>(f);
}

CartesianGrid build_grid(std::array<double, 2> lo, std::array<double, 2> hi,
                         int nx, int ny, int ghost) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("grid: nx, ny must be >= 1");
  const double w = hi[0] - lo[0];
  const double h = hi[1] - lo[1];
  if (!(w > 0.0) || !(h > 0.0))
    throw std::invalid_argument("grid: extent must have positive size");
  const double dxx = w / nx;
  const double dxy = h / ny;
  if (std::abs(dxx - dxy) > 1e-12 * std::max(dxx, dxy)) {
    std::ostringstream os;
    os << "grid: cells are not square, dx=" << dxx << " from width vs dx="
       << dxy << " from height";
    throw std::invalid_argument(os.str());
  }
  CartesianGrid g;
  g.nx = nx;
  g.ny = ny;
  g.dx = dxx;
  g.origin = lo;
  g.ghost = ghost;
  return g;
}

std::array<QuadPointRef, 3> edge_quadrature_v(const CartesianGrid& g, int i,
                                              int j) {
  const double x = g.corner_x(i);
  return {{{{x, g.corner_y(j)}, QuadPointRef::Kind::corner, kEdgeWeights[0]},
           {{x, g.corner_y(j) + 0.5 * g.dx}, QuadPointRef::Kind::edge_midpoint,
            kEdgeWeights[1]},
           {{x, g.corner_y(j + 1)}, QuadPointRef::Kind::corner,
            kEdgeWeights[2]}}};
}

std::array<QuadPointRef, 3> edge_quadrature_h(const CartesianGrid& g, int i,
                                              int j) {
  const double y = g.corner_y(j);
  return {{{{g.corner_x(i), y}, QuadPointRef::Kind::corner, kEdgeWeights[0]},
           {{g.corner_x(i) + 0.5 * g.dx, y}, QuadPointRef::Kind::edge_midpoint,
            kEdgeWeights[1]},
           {{g.corner_x(i + 1), y}, QuadPointRef::Kind::corner,
            kEdgeWeights[2]}}};
}

}  // namespace fveg
