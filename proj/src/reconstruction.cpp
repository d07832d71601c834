#include "fveg/reconstruction.hpp"

#include <algorithm>

#include "fveg/exec.hpp"

namespace fveg {

int dry_stencil_modify(std::span<const StencilCell> cells, double& Hbar,
                       std::span<ModCell> out) {
  int nwet = 0;
  double hb = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k].h > 0.0) {
      hb = (nwet == 0) ? cells[k].H : std::max(hb, cells[k].H);
      ++nwet;
    }
  }
  Hbar = hb;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const StencilCell& c = cells[k];
    if (c.h > 0.0) {
      out[k] = {c.H, c.b, c.v1, c.v2, false};
    } else if (nwet > 0 && c.b > hb) {
      out[k] = {hb, hb, 0.0, 0.0, true};
    } else {
      out[k] = {c.H, c.b, 0.0, 0.0, true};
    }
  }
  return nwet;
}

void corner_pass(const CartesianGrid& g, const PrimitiveState& w,
                 const Bathymetry& bathy, bool parallel, CornerData& out) {
  const int rows = g.ny + 3;  // corners j in [-1, ny+1]
  parallel_for(rows, parallel, [&](int r) {
    const int cj = r - 1;
    for (int ci = -1; ci <= g.nx + 1; ++ci) {
      StencilCell sc[4];
      const auto st = corner_stencil(ci, cj);
      for (int k = 0; k < 4; ++k) {
        const int i = st[k][0], j = st[k][1];
        sc[k] = {w.H(i, j), bathy.b_cell(i, j), w.v1(i, j), w.v2(i, j),
                 w.h(i, j)};
      }
      ModCell mc[4];
      double Hbar = 0.0;
      const int nwet = dry_stencil_modify({sc, 4}, Hbar, {mc, 4});
      double sH = 0.0, sv1 = 0.0, sv2 = 0.0, sb = 0.0;
      for (int k = 0; k < 4; ++k) {
        sH += mc[k].H;
        sv1 += mc[k].v1;
        sv2 += mc[k].v2;
        sb += mc[k].b;
      }
      out.H(ci, cj) = 0.25 * sH;
      out.v1(ci, cj) = 0.25 * sv1;
      out.v2(ci, cj) = 0.25 * sv2;
      out.b(ci, cj) = 0.25 * sb;
      out.all_dry(ci, cj) = (nwet == 0) ? 1.0 : 0.0;
    }
  });
}

namespace {

inline Bilin bilin_from_corners(double sw, double se, double nw, double ne,
                                double dx) {
  Bilin r;
  r.c0 = 0.25 * (sw + se + nw + ne);
  r.cx = ((se + ne) - (sw + nw)) / (2.0 * dx);
  r.cy = ((nw + ne) - (sw + se)) / (2.0 * dx);
  r.cxy = (ne - nw - se + sw) / (dx * dx);
  return r;
}

}  // namespace

void build_evolution_data(const CartesianGrid& g, const PrimitiveState& w,
                          const Bathymetry& bathy, const CornerData& corners,
                          bool parallel, EvoDataGrid& out) {
  const int rows = g.ny + 2;  // cells j in [-1, ny]
  parallel_for(rows, parallel, [&](int r) {
    const int j = r - 1;
    for (int i = -1; i <= g.nx; ++i) {
      CellEvoData& cd = out.at(i, j);
      cd.hc = w.h(i, j);
      cd.wet = cd.hc > 0.0;
      cd.Hc = w.H(i, j);
      cd.bc = bathy.b_cell(i, j);
      cd.v1c = w.v1(i, j);
      cd.v2c = w.v2(i, j);
      cd.H = bilin_from_corners(corners.H(i, j), corners.H(i + 1, j),
                                corners.H(i, j + 1), corners.H(i + 1, j + 1),
                                g.dx);
      cd.v1 = bilin_from_corners(corners.v1(i, j), corners.v1(i + 1, j),
                                 corners.v1(i, j + 1),
                                 corners.v1(i + 1, j + 1), g.dx);
      cd.v2 = bilin_from_corners(corners.v2(i, j), corners.v2(i + 1, j),
                                 corners.v2(i, j + 1),
                                 corners.v2(i + 1, j + 1), g.dx);
      cd.b = bilin_from_corners(corners.b(i, j), corners.b(i + 1, j),
                                corners.b(i, j + 1), corners.b(i + 1, j + 1),
                                g.dx);
      if (!cd.wet) {
        cd.H.cx = cd.H.cy = cd.H.cxy = 0.0;
        cd.v1.cx = cd.v1.cy = cd.v1.cxy = 0.0;
        cd.v2.cx = cd.v2.cy = cd.v2.cxy = 0.0;
        cd.b.cx = cd.b.cy = cd.b.cxy = 0.0;
      }
      cd.dH = cd.Hc - cd.H.c0;
      cd.dv1 = cd.v1c - cd.v1.c0;
      cd.dv2 = cd.v2c - cd.v2.c0;
    }
  });
}

}  // namespace fveg
