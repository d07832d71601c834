#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace fveg {

/// Uniform Cartesian grid with square cells of edge length dx.
///
/// Indexing is arithmetic throughout, no connectivity tables:
///   - cells      (i,j), interior i in [0,nx), j in [0,ny)
///   - corners    (i,j) at origin + (i,j)*dx, lattice (nx+1) x (ny+1)
///   - vertical   edges (i,j): between cells (i-1,j) and (i,j), normal +x,
///                i in [0,nx], j in [0,ny)
///   - horizontal edges (i,j): between cells (i,j-1) and (i,j), normal +y,
///                i in [0,nx), j in [0,ny]
/// Two rings of ghost cells surround the interior; negative indices are valid
/// on padded fields.
struct CartesianGrid {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  std::array<double, 2> origin{0.0, 0.0};
  int ghost = 2;

  double cell_center_x(int i) const { return origin[0] + (i + 0.5) * dx; }
  double cell_center_y(int j) const { return origin[1] + (j + 0.5) * dx; }
  double corner_x(int i) const { return origin[0] + i * dx; }
  double corner_y(int j) const { return origin[1] + j * dx; }

  double width() const { return nx * dx; }
  double height() const { return ny * dx; }
  double cell_area() const { return dx * dx; }
  int cell_count() const { return nx * ny; }

  // Containing cell of a point; points exactly on a grid line go to the
  // lower-index cell. Result may be a ghost cell.
  int cell_of_x(double x) const;
  int cell_of_y(double y) const;

  bool in_interior_cell_range(int i, int j) const {
    return i >= 0 && i < nx && j >= 0 && j < ny;
  }
};

/// Validates the extent against the requested cell counts and builds the grid.
/// The implied cell sizes along both axes must agree to 1e-12 relative.
CartesianGrid build_grid(std::array<double, 2> lo, std::array<double, 2> hi,
                         int nx, int ny, int ghost = 2);

/// Cells adjacent to corner (ci,cj), fixed order SW, SE, NW, NE.
inline std::array<std::array<int, 2>, 4> corner_stencil(int ci, int cj) {
  return {{{ci - 1, cj - 1}, {ci, cj - 1}, {ci - 1, cj}, {ci, cj}}};
}

/// Simpson weights for the three quadrature points of an edge
/// (corner, midpoint, corner).
inline constexpr std::array<double, 3> kEdgeWeights{1.0 / 6.0, 2.0 / 3.0,
                                                    1.0 / 6.0};

struct QuadPointRef {
  std::array<double, 2> location;
  enum class Kind { corner, edge_midpoint } kind;
  double weight;
};

/// The three quadrature points of a vertical/horizontal edge with their
/// Simpson weights.
std::array<QuadPointRef, 3> edge_quadrature_v(const CartesianGrid& g, int i,
                                              int j);
std::array<QuadPointRef, 3> edge_quadrature_h(const CartesianGrid& g, int i,
                                              int j);

/// Scalar field over the cell lattice (or any lattice given by nx,ny) with a
/// ghost frame. Storage is row-major over the padded range.
class Field {
 public:
  Field() = default;
  Field(int nx, int ny, int ghost, double init = 0.0)
      : nx_(nx),
        ny_(ny),
        ghost_(ghost),
        stride_(nx + 2 * ghost),
        data_(static_cast<std::size_t>(nx + 2 * ghost) * (ny + 2 * ghost),
              init) {}

  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int ghost() const { return ghost_; }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + ghost_) * stride_ + (i + ghost_);
  }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

  void fill(double v) { data_.assign(data_.size(), v); }

 private:
  int nx_ = 0, ny_ = 0, ghost_ = 0, stride_ = 0;
  std::vector<double> data_;
};

}  // namespace fveg
