#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "fveg/reconstruction.hpp"

using namespace fveg;

namespace {

// small test world built from pointwise fields evaluated at cell centers
struct World {
  CartesianGrid g;
  Bathymetry bathy;
  PrimitiveState w;
  CornerData corners;
  EvoDataGrid cells;

  World(int n, double size, const std::function<double(double, double)>& b,
        const std::function<double(double, double)>& H,
        const std::function<double(double, double)>& v1,
        const std::function<double(double, double)>& v2, double grav = 9.81)
      : g(build_grid({0, 0}, {size, size}, n, n)), w(g), corners(g), cells(g) {
    Field bc(g.nx, g.ny, g.ghost);
    for (int j = -g.ghost; j < g.ny + g.ghost; ++j)
      for (int i = -g.ghost; i < g.nx + g.ghost; ++i)
        bc(i, j) = b(g.cell_center_x(i), g.cell_center_y(j));
    bathy = make_bathymetry(g, bc, grav);
    for (int j = -g.ghost; j < g.ny + g.ghost; ++j)
      for (int i = -g.ghost; i < g.nx + g.ghost; ++i) {
        const double x = g.cell_center_x(i), y = g.cell_center_y(j);
        const double depth = H(x, y) - bc(i, j);
        if (depth > 0.0) {
          w.h(i, j) = depth;
          w.H(i, j) = H(x, y);
          w.v1(i, j) = v1(x, y);
          w.v2(i, j) = v2(x, y);
        } else {
          w.h(i, j) = 0.0;
          w.H(i, j) = bc(i, j);
          w.v1(i, j) = 0.0;
          w.v2(i, j) = 0.0;
        }
      }
    finalize();
  }

  void finalize() {
    corner_pass(g, w, bathy, false, corners);
    build_evolution_data(g, w, bathy, corners, false, cells);
  }
};

}  // namespace

TEST_CASE("dry stencil modification") {
  double Hbar = 0.0;
  ModCell out[4];

  // wet cells at H0 = 10, dry cell with b = 15 is flattened to (10, 10, 0)
  StencilCell a[4] = {{10, 2, 0, 0, 8},
                      {10, 3, 0, 0, 7},
                      {10, 1, 0, 0, 9},
                      {15, 15, 0, 0, 0}};
  CHECK(dry_stencil_modify({a, 4}, Hbar, {out, 4}) == 3);
  CHECK(Hbar == doctest::Approx(10.0));
  CHECK(out[3].H == doctest::Approx(10.0));
  CHECK(out[3].b == doctest::Approx(10.0));
  CHECK(out[3].v1 == 0.0);
  CHECK(out[3].dry);
  CHECK(out[0].H == doctest::Approx(10.0));
  CHECK_FALSE(out[0].dry);

  // dry cell below the surface keeps its values
  StencilCell lo[4] = {{10, 2, 0, 0, 8},
                       {10, 3, 0, 0, 7},
                       {10, 1, 0, 0, 9},
                       {5, 5, 0, 0, 0}};
  dry_stencil_modify({lo, 4}, Hbar, {out, 4});
  CHECK(out[3].H == doctest::Approx(5.0));
  CHECK(out[3].b == doctest::Approx(5.0));

  // all wet: no changes
  StencilCell wet[4] = {{10, 2, 1, 2, 8},
                        {11, 3, 3, 4, 8},
                        {9, 1, 5, 6, 8},
                        {12, 4, 7, 8, 8}};
  CHECK(dry_stencil_modify({wet, 4}, Hbar, {out, 4}) == 4);
  CHECK(Hbar == doctest::Approx(12.0));
  for (int k = 0; k < 4; ++k) {
    CHECK(out[k].H == wet[k].H);
    CHECK(out[k].v1 == wet[k].v1);
  }

  // all dry: signals zero wet cells, values pass through
  StencilCell dry[2] = {{3, 3, 0, 0, 0}, {4, 4, 0, 0, 0}};
  CHECK(dry_stencil_modify({dry, 2}, Hbar, {out, 2}) == 0);
  CHECK(out[0].H == doctest::Approx(3.0));
  CHECK(out[1].b == doctest::Approx(4.0));
}

TEST_CASE("corner averages") {
  // uniform wet field: corner values equal it
  World u(4, 4.0, [](double, double) { return 0.0; },
          [](double, double) { return 2.5; },
          [](double, double) { return 0.3; },
          [](double, double) { return -0.1; });
  for (int cj = 0; cj <= 4; ++cj)
    for (int ci = 0; ci <= 4; ++ci) {
      CHECK(u.corners.H(ci, cj) == doctest::Approx(2.5));
      CHECK(u.corners.v1(ci, cj) == doctest::Approx(0.3));
      CHECK(u.corners.v2(ci, cj) == doctest::Approx(-0.1));
      CHECK(u.corners.all_dry(ci, cj) == 0.0);
    }

  // lake at rest with an island above the surface: corner H stays H0, v = 0
  World lake(6, 6.0,
             [](double x, double y) {
               return (std::abs(x - 3) < 1 && std::abs(y - 3) < 1) ? 2.0 : 0.0;
             },
             [](double x, double y) {
               const bool dryland =
                   (std::abs(x - 3) < 1 && std::abs(y - 3) < 1);
               return dryland ? 2.0 : 1.0;  // H = b on dry, H0 = 1 wet
             },
             [](double, double) { return 0.0; },
             [](double, double) { return 0.0; });
  for (int cj = 0; cj <= 6; ++cj)
    for (int ci = 0; ci <= 6; ++ci) {
      if (lake.corners.all_dry(ci, cj) != 0.0) continue;
      CHECK(lake.corners.H(ci, cj) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(lake.corners.v1(ci, cj) == 0.0);
      // corner depth H - b stays nonnegative
      CHECK(lake.corners.H(ci, cj) - lake.corners.b(ci, cj) >= -1e-15);
    }
}

TEST_CASE("bilinear recovery reproduces its corner values") {
  World lin(4, 4.0, [](double, double) { return 0.0; },
            [](double x, double y) { return 5.0 + 0.5 * x - 0.25 * y; },
            [](double x, double y) { return 0.1 * x * y; },
            [](double, double) { return 0.0; });
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      const CellEvoData& cd = lin.cells.at(i, j);
      const double hx = 0.5 * lin.g.dx;
      // interpolates the 4 corner averages exactly
      CHECK(cd.H.at(-hx, -hx) ==
            doctest::Approx(lin.corners.H(i, j)).epsilon(1e-13));
      CHECK(cd.H.at(hx, -hx) ==
            doctest::Approx(lin.corners.H(i + 1, j)).epsilon(1e-13));
      CHECK(cd.H.at(-hx, hx) ==
            doctest::Approx(lin.corners.H(i, j + 1)).epsilon(1e-13));
      CHECK(cd.H.at(hx, hx) ==
            doctest::Approx(lin.corners.H(i + 1, j + 1)).epsilon(1e-13));
      // linear field: slopes match the gradient, no cross term
      CHECK(cd.H.cx == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(cd.H.cy == doctest::Approx(-0.25).epsilon(1e-12));
      CHECK(cd.H.cxy == doctest::Approx(0.0));
      // bilinear field: cross term recovered
      CHECK(cd.v1.cxy == doctest::Approx(0.1).epsilon(1e-12));
    }
}

TEST_CASE("zero corners give the zero function") {
  World z(3, 3.0, [](double, double) { return -1.0; },
          [](double, double) { return 0.0; },
          [](double, double) { return 0.0; },
          [](double, double) { return 0.0; });
  const CellEvoData& cd = z.cells.at(1, 1);
  CHECK(cd.v1.c0 == 0.0);
  CHECK(cd.v1.cx == 0.0);
  CHECK(cd.v1.cxy == 0.0);
}

TEST_CASE("recovery is continuous across shared edges") {
  World r(5, 5.0, [](double x, double y) { return 0.05 * x + 0.02 * y; },
          [](double x, double y) { return 3.0 + std::sin(x) * 0.2 + 0.1 * y; },
          [](double x, double y) { return std::cos(x + y); },
          [](double x, double y) { return x - y; });
  for (int j = 1; j < 4; ++j)
    for (int i = 1; i < 4; ++i) {
      const CellEvoData& a = r.cells.at(i - 1, j);
      const CellEvoData& b = r.cells.at(i, j);
      const double hx = 0.5 * r.g.dx;
      for (double s = -hx; s <= hx; s += hx / 2) {
        CHECK(a.H.at(hx, s) == doctest::Approx(b.H.at(-hx, s)).epsilon(1e-12));
        CHECK(a.v1.at(hx, s) ==
              doctest::Approx(b.v1.at(-hx, s)).epsilon(1e-12));
      }
    }
}

TEST_CASE("dry cells keep the corner mean but zero all derivatives") {
  World lake(6, 6.0,
             [](double x, double y) {
               return (std::abs(x - 3) < 1 && std::abs(y - 3) < 1) ? 2.0 : 0.0;
             },
             [](double x, double y) {
               return (std::abs(x - 3) < 1 && std::abs(y - 3) < 1) ? 2.0 : 1.0;
             },
             [](double, double) { return 0.0; },
             [](double, double) { return 0.0; });
  const CellEvoData& dry = lake.cells.at(2, 2);  // island cell
  CHECK_FALSE(dry.wet);
  CHECK(dry.H.cx == 0.0);
  CHECK(dry.H.cy == 0.0);
  CHECK(dry.H.cxy == 0.0);
  CHECK(dry.b.cx == 0.0);
  // the correction still measures cell value minus corner mean
  CHECK(dry.dH == doctest::Approx(dry.Hc - dry.H.c0));
}

TEST_CASE("correction field") {
  // uniform data: zero correction
  World u(4, 4.0, [](double, double) { return 0.0; },
          [](double, double) { return 2.0; },
          [](double, double) { return 0.5; },
          [](double, double) { return 0.0; });
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      CHECK(u.cells.at(i, j).dH == doctest::Approx(0.0));
      CHECK(u.cells.at(i, j).dv1 == doctest::Approx(0.0));
    }

  // globally linear data: corner means equal center values, correction 0
  World lin(4, 4.0, [](double, double) { return 0.0; },
            [](double x, double y) { return 1.0 + 0.3 * x + 0.7 * y; },
            [](double, double) { return 0.0; },
            [](double, double) { return 0.0; });
  for (int j = 1; j < 3; ++j)
    for (int i = 1; i < 3; ++i)
      CHECK(lin.cells.at(i, j).dH == doctest::Approx(0.0).epsilon(1e-13));

  // single spike: correction 1 - 1/4 in the spiked cell (hand evaluation of
  // the corner averaging on a 3x3 patch)
  World spike(3, 3.0, [](double, double) { return 0.0; },
              [](double x, double y) {
                return (std::abs(x - 1.5) < 0.5 && std::abs(y - 1.5) < 0.5)
                           ? 2.0
                           : 1.0;
              },
              [](double, double) { return 0.0; },
              [](double, double) { return 0.0; });
  // each corner of the spiked cell averages one spike plus three base cells
  CHECK(spike.cells.at(1, 1).dH == doctest::Approx(2.0 - 1.25));
}

TEST_CASE("reconstructed depth stays nonnegative in wet cells") {
  World lake(6, 6.0,
             [](double x, double y) {
               const double r = std::hypot(x - 3, y - 3);
               return std::max(0.0, 1.5 - 0.5 * r);
             },
             [](double x, double y) {
               const double b =
                   std::max(0.0, 1.5 - 0.5 * std::hypot(x - 3, y - 3));
               return std::max(1.0, b);
             },
             [](double, double) { return 0.0; },
             [](double, double) { return 0.0; });
  const double hx = 0.5 * lake.g.dx;
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 6; ++i) {
      const CellEvoData& cd = lake.cells.at(i, j);
      if (!cd.wet) continue;
      for (double sy : {-hx, 0.0, hx})
        for (double sx : {-hx, 0.0, hx}) {
          const double depth = cd.H.at(sx, sy) - cd.b.at(sx, sy);
          CHECK(depth >= -1e-12);
        }
    }
}
