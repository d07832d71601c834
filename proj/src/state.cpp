#include "fveg/state.hpp"

#include <algorithm>
#include <cmath>

#include "fveg/exec.hpp"

namespace fveg {

Bathymetry make_bathymetry(const CartesianGrid& g, const Field& b_cell,
                           double gravity) {
  Bathymetry b;
  b.b_cell = b_cell;
  b.gravity = gravity;
  b.b_corner = Field(g.nx + 1, g.ny + 1, 2);
  for (int j = -2; j <= g.ny + 2; ++j)
    for (int i = -2; i <= g.nx + 2; ++i) {
      double s = 0.0;
      for (const auto& c : corner_stencil(i, j)) s += b_cell(c[0], c[1]);
      b.b_corner(i, j) = 0.25 * s;
    }
  b.b_mid_v = Field(g.nx + 1, g.ny, 0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      b.b_mid_v(i, j) = 0.5 * (b.b_corner(i, j) + b.b_corner(i, j + 1));
  b.b_mid_h = Field(g.nx, g.ny + 1, 0);
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      b.b_mid_h(i, j) = 0.5 * (b.b_corner(i, j) + b.b_corner(i + 1, j));
  return b;
}

DryParams DryParams::make(const CartesianGrid& g, double eps_h) {
  DryParams d;
  d.eps_h = eps_h;
  d.l_ref = std::max(g.nx - 1, g.ny - 1) * g.dx;
  // single-cell grids have a degenerate center set; fall back to dx
  if (d.l_ref <= 0.0) d.l_ref = g.dx;
  d.eps_v = g.dx / d.l_ref;
  return d;
}

namespace {
// 3-point Gauss nodes and weights on [-1/2, 1/2]
constexpr double kGaussNode = 0.3872983346207417;  // sqrt(3/5)/2
constexpr std::array<double, 3> kGx{-kGaussNode, 0.0, kGaussNode};
constexpr std::array<double, 3> kGw{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
}  // namespace

Field cell_average_init(const CartesianGrid& g, const ScalarFn& f,
                        bool with_ghosts) {
  Field out(g.nx, g.ny, g.ghost);
  const int ext = with_ghosts ? g.ghost : 0;
  for (int j = -ext; j < g.ny + ext; ++j)
    for (int i = -ext; i < g.nx + ext; ++i) {
      const double xc = g.cell_center_x(i);
      const double yc = g.cell_center_y(j);
      double s = 0.0;
      for (int q = 0; q < 3; ++q)
        for (int p = 0; p < 3; ++p)
          s += kGw[p] * kGw[q] * f(xc + kGx[p] * g.dx, yc + kGx[q] * g.dx);
      out(i, j) = s;
    }
  return out;
}

double reference_speed(const ConservedState& u, const CartesianGrid& g,
                       const DryParams& dry) {
  return parallel_max(g.ny, false, 0.0, [&](int j) {
    double m = 0.0;
    for (int i = 0; i < g.nx; ++i) {
      const double h = u.h(i, j);
      if (h > dry.eps_v) {
        const double s = std::hypot(u.hv1(i, j), u.hv2(i, j)) / h;
        if (s > m) m = s;
      }
    }
    return m;
  });
}

std::array<double, 2> desingularize_velocity(std::array<double, 2> v,
                                             std::array<double, 2> hv,
                                             double v_ref) {
  const double mag = std::hypot(v[0], v[1]);
  if (mag == 0.0) return {0.0, 0.0};
  const double limited = v_ref * (2.0 - v_ref / mag);
  const double dmag = std::hypot(hv[0], hv[1]);
  if (dmag == 0.0) return {0.0, 0.0};
  return {limited * hv[0] / dmag, limited * hv[1] / dmag};
}

double characteristic_speed_max(const ConservedState& u,
                                const CartesianGrid& g, double eps_h,
                                double gravity, bool with_ghosts) {
  const int ext = with_ghosts ? g.ghost : 0;
  return parallel_max(g.ny + 2 * ext, false, 0.0, [&](int r) {
    const int j = r - ext;
    double m = 0.0;
    for (int i = -ext; i < g.nx + ext; ++i) {
      const double h = u.h(i, j);
      if (h < eps_h) continue;
      const double s = std::hypot(u.hv1(i, j), u.hv2(i, j)) / h +
                       2.0 * std::sqrt(gravity * h);
      if (s > m) m = s;
    }
    return m;
  });
}

void conserved_to_primitive(const ConservedState& u, const Bathymetry& bathy,
                            const CartesianGrid& g, const DryParams& dry,
                            double v_ref, double char_bound, bool parallel,
                            PrimitiveState& w) {
  const int gh = g.ghost;
  const int rows = g.ny + 2 * gh;
  parallel_for(rows, parallel, [&](int r) {
    const int j = r - gh;
    for (int i = -gh; i < g.nx + gh; ++i) {
      const double h = u.h(i, j);
      const double b = bathy.b_cell(i, j);
      if (h < dry.eps_h) {
        w.h(i, j) = 0.0;
        w.v1(i, j) = 0.0;
        w.v2(i, j) = 0.0;
        w.H(i, j) = b;
        continue;
      }
      double vx = u.hv1(i, j) / h;
      double vy = u.hv2(i, j) / h;
      if (h < dry.eps_v && std::hypot(vx, vy) > v_ref) {
        const auto lim =
            desingularize_velocity({vx, vy}, {u.hv1(i, j), u.hv2(i, j)}, v_ref);
        vx = lim[0];
        vy = lim[1];
      }
      // no signal can outrun the running characteristic bound |v| + 2c
      if (char_bound >= 0.0) {
        const double mag = std::hypot(vx, vy);
        const double cap =
            std::max(char_bound - 2.0 * std::sqrt(bathy.gravity * h), 0.0);
        if (mag > cap) {
          const double s = (mag > 0.0) ? cap / mag : 0.0;
          vx *= s;
          vy *= s;
        }
      }
      w.h(i, j) = h;
      w.v1(i, j) = vx;
      w.v2(i, j) = vy;
      w.H(i, j) = h + b;
    }
  });
}

void zero_dry_cells(ConservedState& u, const CartesianGrid& g,
                    const DryParams& dry, bool parallel) {
  parallel_for(g.ny, parallel, [&](int j) {
    for (int i = 0; i < g.nx; ++i) {
      if (u.h(i, j) < dry.eps_h) {
        u.h(i, j) = 0.0;
        u.hv1(i, j) = 0.0;
        u.hv2(i, j) = 0.0;
      }
    }
  });
}

void reset_limited_discharge(ConservedState& u, const PrimitiveState& w,
                             const CartesianGrid& g, const DryParams& dry,
                             bool parallel) {
  parallel_for(g.ny, parallel, [&](int j) {
    for (int i = 0; i < g.nx; ++i) {
      const double h = u.h(i, j);
      if (h < dry.eps_h) continue;
      // a limiter touched this cell iff the primitive velocity is not the
      // plain division
      if (w.v1(i, j) != u.hv1(i, j) / h || w.v2(i, j) != u.hv2(i, j) / h) {
        u.hv1(i, j) = h * w.v1(i, j);
        u.hv2(i, j) = h * w.v2(i, j);
      }
    }
  });
}

std::array<double, 3> eigenvalues(double h, std::array<double, 2> v,
                                  std::array<double, 2> xi, double g) {
  const double un = v[0] * xi[0] + v[1] * xi[1];
  const double c = std::sqrt(g * std::max(h, 0.0));
  return {un - c, un, un + c};
}

}  // namespace fveg
