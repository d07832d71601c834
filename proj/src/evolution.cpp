#include "fveg/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "fveg/exec.hpp"

// All cone geometry is computed in coordinates local to the quadrature
// point. Offsets of grid lines and cell centers are then exact multiples of
// dx/2, so mirrored configurations produce exactly negated coordinates and
// the evolved values inherit the grid symmetries to the last few ulp.

namespace fveg {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

ConeState average_state(std::span<const ModCell> cells, double g) {
  ConeState s;
  double h, v1, v2;
  if (cells.size() == 4) {
    // diagonal-pair grouping keeps the mean invariant under the grid
    // symmetries (stencil order SW, SE, NW, NE)
    h = ((cells[0].H - cells[0].b) + (cells[3].H - cells[3].b)) +
        ((cells[1].H - cells[1].b) + (cells[2].H - cells[2].b));
    v1 = (cells[0].v1 + cells[3].v1) + (cells[1].v1 + cells[2].v1);
    v2 = (cells[0].v2 + cells[3].v2) + (cells[1].v2 + cells[2].v2);
  } else {
    h = 0.0;
    v1 = 0.0;
    v2 = 0.0;
    for (const ModCell& c : cells) {
      h += c.H - c.b;
      v1 += c.v1;
      v2 += c.v2;
    }
  }
  const double inv = 1.0 / static_cast<double>(cells.size());
  s.hbar = std::max(h * inv, 0.0);
  s.v1bar = v1 * inv;
  s.v2bar = v2 * inv;
  s.cbar = std::sqrt(g * s.hbar);
  return s;
}

bool transonic_detect(std::span<const ModCell> cells, double g) {
  bool sub = false, super = false;
  for (const ModCell& c : cells) {
    const double h = c.H - c.b;
    if (h <= 0.0) continue;
    const double speed = std::hypot(c.v1, c.v2);
    const double cs = std::sqrt(g * h);
    if (speed > cs)
      super = true;
    else if (speed < cs)
      sub = true;
  }
  return sub && super;
}

Circle build_cone(double xk, double yk, double v1, double v2, double c,
                  double tau) {
  return {xk + tau * v1, yk + tau * v2, tau * c};
}

Circle entropy_fix_cone(double xk, double yk, std::span<const ModCell> cells,
                        double tau, double g) {
  auto cone_of = [&](const ModCell& c) {
    const double h = std::max(c.H - c.b, 0.0);
    return build_cone(xk, yk, c.v1, c.v2, std::sqrt(g * h), tau);
  };
  if (cells.size() == 4) {
    // diagonal pairs first: stencil order is SW, SE, NW, NE
    const Circle d1 = merge_circles(cone_of(cells[0]), cone_of(cells[3]));
    const Circle d2 = merge_circles(cone_of(cells[1]), cone_of(cells[2]));
    return merge_circles(d1, d2);
  }
  Circle m = cone_of(cells[0]);
  for (std::size_t k = 1; k < cells.size(); ++k)
    m = merge_circles(m, cone_of(cells[k]));
  return m;
}

ArcCellData arc_cell_data(const CartesianGrid& g, const EvoDataGrid& cells,
                          int ci, int cj, double Hbar, int nwet, int order) {
  (void)g;
  const CellEvoData& cd = cells.at(ci, cj);
  ArcCellData d;
  // dry land rising above the local wet surface is flattened to it; all
  // other cells keep their values (dry recoveries already have zero slopes)
  if (!cd.wet && nwet > 0 && cd.bc > Hbar) {
    d.H = {Hbar, 0.0, 0.0, 0.0};
    d.v1 = {};
    d.v2 = {};
    d.b = {Hbar, 0.0, 0.0, 0.0};
    return d;
  }
  if (order >= 2) {
    d.H = cd.H;
    d.v1 = cd.v1;
    d.v2 = cd.v2;
    d.dH = cd.dH;
    d.dv1 = cd.dv1;
    d.dv2 = cd.dv2;
  } else {
    d.H = {cd.Hc, 0.0, 0.0, 0.0};
    d.v1 = {cd.v1c, 0.0, 0.0, 0.0};
    d.v2 = {cd.v2c, 0.0, 0.0, 0.0};
  }
  d.b = cd.b;  // reconstructed bottom slopes feed both operators
  return d;
}

PointEnv prepare_point(const CartesianGrid& g, const EvoDataGrid& cells,
                       const CornerData& corners, PointKind kind, int i, int j,
                       const EvoParams& p) {
  PointEnv e;
  e.base_i = i;
  e.base_j = j;
  switch (kind) {
    case PointKind::corner:
      e.x_shift = 0.0;
      e.y_shift = 0.0;
      e.nst = 4;
      e.stencil = corner_stencil(i, j);
      e.bP = corners.b(i, j);
      break;
    case PointKind::vmid:
      e.x_shift = 0.0;
      e.y_shift = 0.5;
      e.nst = 2;
      e.stencil = {{{i - 1, j}, {i, j}, {0, 0}, {0, 0}}};
      e.bP = 0.5 * (corners.b(i, j) + corners.b(i, j + 1));
      break;
    case PointKind::hmid:
      e.x_shift = 0.5;
      e.y_shift = 0.0;
      e.nst = 2;
      e.stencil = {{{i, j - 1}, {i, j}, {0, 0}, {0, 0}}};
      e.bP = 0.5 * (corners.b(i, j) + corners.b(i + 1, j));
      break;
  }
  StencilCell sc[4];
  for (int k = 0; k < e.nst; ++k) {
    const CellEvoData& cd = cells.at(e.stencil[k][0], e.stencil[k][1]);
    sc[k] = {cd.Hc, cd.bc, cd.v1c, cd.v2c, cd.hc};
  }
  e.nwet = dry_stencil_modify({sc, static_cast<std::size_t>(e.nst)}, e.Hbar,
                              {e.mod.data(), static_cast<std::size_t>(e.nst)});
  if (e.nwet == 0) return e;
  const std::span<const ModCell> mod{e.mod.data(),
                                     static_cast<std::size_t>(e.nst)};
  e.avg = average_state(mod, p.g);
  if (p.entropy_fix && transonic_detect(mod, p.g))
    e.cone = entropy_fix_cone(0.0, 0.0, mod, p.tau, p.g);
  else
    e.cone =
        build_cone(0.0, 0.0, e.avg.v1bar, e.avg.v2bar, e.avg.cbar, p.tau);
  return e;
}

EvolvedValue integrate_point(const CartesianGrid& g, const EvoDataGrid& cells,
                             const PointEnv& env, const EvoParams& p) {
  if (env.nwet == 0) return {0.0, 0.0, 0.0, env.bP};

  const double cbar = env.avg.cbar;
  const double gc = p.g / cbar;  // finite: the stencil holds a wet cell
  const double cg = cbar / p.g;
  const double vb1 = env.avg.v1bar, vb2 = env.avg.v2bar;

  ArcList arcs;
  const int na = arc_decompose(env.cone, g.dx, env.x_shift, env.y_shift, arcs);
  const double qx = env.cone.cx, qy = env.cone.cy, rho = env.cone.r;

  // arcs revisit few distinct cells; cache their data views
  constexpr int kMaxCells = 16;
  std::array<std::array<int, 2>, kMaxCells> ckey;
  std::array<ArcCellData, kMaxCells> cval;
  int ncached = 0;
  auto data_of = [&](int di, int dj) -> const ArcCellData& {
    for (int k = 0; k < ncached; ++k)
      if (ckey[k][0] == di && ckey[k][1] == dj) return cval[k];
    const int ci = std::clamp(env.base_i + di, -1, g.nx);
    const int cj = std::clamp(env.base_j + dj, -1, g.ny);
    const int k = std::min(ncached, kMaxCells - 1);
    ckey[k] = {di, dj};
    cval[k] = arc_cell_data(g, cells, ci, cj, env.Hbar, env.nwet, p.order);
    if (ncached < kMaxCells) ++ncached;
    return cval[k];
  };
  // local offset of the center of cell (di, dj) from the quadrature point
  auto center_x = [&](int di) { return (di + 0.5 - env.x_shift) * g.dx; };
  auto center_y = [&](int dj) { return (dj + 0.5 - env.y_shift) * g.dx; };

  double hI = 0.0, v1I = 0.0, v2I = 0.0;

  for (int a = 0; a < na; ++a) {
    const Arc& arc = arcs[a];
    const ArcCellData& D = data_of(arc.di, arc.dj);
    const TrigInt I = TrigInt::over(arc.a, arc.b);
    const double tm = 0.5 * (arc.a + arc.b);
    const double sgc = (std::cos(tm) >= 0.0) ? 1.0 : -1.0;
    const double sgs = (std::sin(tm) >= 0.0) ? 1.0 : -1.0;
    const double X0 = qx - center_x(arc.di);
    const double Y0 = qy - center_y(arc.dj);

    // w(Q(theta)) = A + B cos + C sin + D sin cos per variable
    auto angular = [&](const Bilin& w, double* o) {
      o[0] = w.c0 + w.cx * X0 + w.cy * Y0 + w.cxy * X0 * Y0;
      o[1] = rho * (w.cx + w.cxy * Y0);
      o[2] = rho * (w.cy + w.cxy * X0);
      o[3] = w.cxy * rho * rho;
    };
    double AH[4], A1[4], A2[4];
    angular(D.H, AH);
    angular(D.v1, A1);
    angular(D.v2, A2);

    const double intH =
        AH[0] * I.i00 + AH[1] * I.i10 + AH[2] * I.i01 + AH[3] * I.i11;
    const double intHc =
        AH[0] * I.i10 + AH[1] * I.i20 + AH[2] * I.i11 + AH[3] * I.i21;
    const double intHs =
        AH[0] * I.i01 + AH[1] * I.i11 + AH[2] * I.i02 + AH[3] * I.i12;
    const double intV1 =
        A1[0] * I.i00 + A1[1] * I.i10 + A1[2] * I.i01 + A1[3] * I.i11;
    const double intV2 =
        A2[0] * I.i00 + A2[1] * I.i10 + A2[2] * I.i01 + A2[3] * I.i11;
    const double intV1c =
        A1[0] * I.i10 + A1[1] * I.i20 + A1[2] * I.i11 + A1[3] * I.i21;
    const double intV2s =
        A2[0] * I.i01 + A2[1] * I.i11 + A2[2] * I.i02 + A2[3] * I.i12;
    const double intV1sc =
        A1[0] * I.i11 + A1[1] * I.i21 + A1[2] * I.i12 + A1[3] * I.i22;
    const double intV2sc =
        A2[0] * I.i11 + A2[1] * I.i21 + A2[2] * I.i12 + A2[3] * I.i22;

    // bottom slopes at Q(theta)
    const double bxA = D.b.cx + D.b.cxy * Y0, bxS = D.b.cxy * rho;
    const double byA = D.b.cy + D.b.cxy * X0, byC = D.b.cxy * rho;
    const double slope = (p.tau / kTwoPi) * (vb1 * (bxA * I.i00 + bxS * I.i01) +
                                             vb2 * (byA * I.i00 + byC * I.i10));

    if (p.order >= 2) {
      const double intV1m = A1[0] * (3.0 * I.i20 - I.i00) +
                            A1[1] * (3.0 * I.i30 - I.i10) +
                            A1[2] * (3.0 * I.i21 - I.i01) +
                            A1[3] * (3.0 * I.i31 - I.i11);
      const double intV2m = A2[0] * (3.0 * I.i02 - I.i00) +
                            A2[1] * (3.0 * I.i12 - I.i10) +
                            A2[2] * (3.0 * I.i03 - I.i01) +
                            A2[3] * (3.0 * I.i13 - I.i11);
      hI += 0.25 * intH - (cg / M_PI) * (intV1c + intV2s) + slope +
            (1.0 / kTwoPi) * (D.dH - cg * (D.dv1 * sgc + D.dv2 * sgs)) * I.i00;
      v1I += -(gc / M_PI) * intHc + 0.25 * (intV1m + 3.0 * intV2sc) +
             (1.0 / kTwoPi) * (-gc * D.dH * sgc * I.i00 +
                               D.dv1 * (I.i20 + 0.5 * I.i00) + D.dv2 * I.i11);
      v2I += -(gc / M_PI) * intHs + 0.25 * (3.0 * intV1sc + intV2m) +
             (1.0 / kTwoPi) * (-gc * D.dH * sgs * I.i00 + D.dv1 * I.i11 +
                               D.dv2 * (I.i02 + 0.5 * I.i00));
    } else {
      const double intV1ch = A1[0] * (I.i20 + 0.5 * I.i00) +
                             A1[1] * (I.i30 + 0.5 * I.i10) +
                             A1[2] * (I.i21 + 0.5 * I.i01) +
                             A1[3] * (I.i31 + 0.5 * I.i11);
      const double intV2sh = A2[0] * (I.i02 + 0.5 * I.i00) +
                             A2[1] * (I.i12 + 0.5 * I.i10) +
                             A2[2] * (I.i03 + 0.5 * I.i01) +
                             A2[3] * (I.i13 + 0.5 * I.i11);
      hI += (1.0 / kTwoPi) * (intH - cg * (sgc * intV1 + sgs * intV2)) + slope;
      v1I += (1.0 / kTwoPi) * (-gc * sgc * intH + intV1ch + intV2sc);
      v2I += (1.0 / kTwoPi) * (-gc * sgs * intH + intV1sc + intV2sh);
    }
  }

  double hP, v1P, v2P;
  if (p.order >= 2) {
    // center value: average the containing cells (two or four when the
    // transported point sits exactly on a grid line); among wet cells the
    // recovery is continuous so the tie is invisible there
    auto span_local = [&](double q, double shift) {
      const double u = q / g.dx + shift;
      const double f = std::floor(u);
      const int c = static_cast<int>(f);
      std::array<int, 2> r{c, c};
      if (u == f) r[0] = c - 1;
      return r;
    };
    const auto xs = span_local(qx, env.x_shift);
    const auto ys = span_local(qy, env.y_shift);
    double HQ0 = 0.0, v1Q0 = 0.0, v2Q0 = 0.0;
    int nq = 0;
    for (int dj = ys[0]; dj <= ys[1]; ++dj)
      for (int di = xs[0]; di <= xs[1]; ++di) {
        const ArcCellData& Q = data_of(di, dj);
        HQ0 += Q.H.at(qx - center_x(di), qy - center_y(dj));
        v1Q0 += Q.v1.at(qx - center_x(di), qy - center_y(dj));
        v2Q0 += Q.v2.at(qx - center_x(di), qy - center_y(dj));
        ++nq;
      }
    HQ0 /= nq;
    v1Q0 /= nq;
    v2Q0 /= nq;
    hP = (1.0 - 0.5 * M_PI) * HQ0 + hI - env.bP;
    v1P = (1.0 - 0.25 * M_PI) * v1Q0 + v1I;
    v2P = (1.0 - 0.25 * M_PI) * v2Q0 + v2I;
  } else {
    hP = hI - env.bP;
    v1P = v1I;
    v2P = v2I;
  }

  if (hP < 0.0) return {0.0, 0.0, 0.0, env.bP};
  return {hP, v1P, v2P, hP + env.bP};
}

void evolve_all(const CartesianGrid& g, const EvoDataGrid& cells,
                const CornerData& corners, const EvoParams& p, bool parallel,
                EvolvedFields& out) {
  parallel_for(g.ny + 1, parallel, [&](int j) {
    for (int i = 0; i <= g.nx; ++i) {
      const EvolvedValue e =
          evolve_point(g, cells, corners, PointKind::corner, i, j, p);
      out.h_c(i, j) = e.h;
      out.v1_c(i, j) = e.v1;
      out.v2_c(i, j) = e.v2;
      out.H_c(i, j) = e.H;
    }
  });
  parallel_for(g.ny, parallel, [&](int j) {
    for (int i = 0; i <= g.nx; ++i) {
      const EvolvedValue e =
          evolve_point(g, cells, corners, PointKind::vmid, i, j, p);
      out.h_v(i, j) = e.h;
      out.v1_v(i, j) = e.v1;
      out.v2_v(i, j) = e.v2;
      out.H_v(i, j) = e.H;
    }
  });
  parallel_for(g.ny + 1, parallel, [&](int j) {
    for (int i = 0; i < g.nx; ++i) {
      const EvolvedValue e =
          evolve_point(g, cells, corners, PointKind::hmid, i, j, p);
      out.h_h(i, j) = e.h;
      out.v1_h(i, j) = e.v1;
      out.v2_h(i, j) = e.v2;
      out.H_h(i, j) = e.H;
    }
  });
}

}  // namespace fveg
