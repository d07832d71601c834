#include "fveg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fveg/exec.hpp"

namespace fveg {

namespace {
// slack over the tracked characteristic bound; reconstruction overshoots
// stay inside it while a runaway (factors per step) cannot
constexpr double kCharMargin = 1.25;
}  // namespace

double draining_time(double h, double dx, double outflow_sum, double dt) {
  if (outflow_sum <= 0.0) return dt;
  return dx * h / outflow_sum;
}

double edge_time_step(double mass_flux, double drain_minus_side,
                      double drain_plus_side, double dt) {
  if (mass_flux > 0.0) return std::min(dt, drain_minus_side);
  if (mass_flux < 0.0) return std::min(dt, drain_plus_side);
  return dt;
}

std::array<double, 3> advective_edge_flux(const std::array<EvolvedValue, 3>& q,
                                          int axis) {
  std::array<double, 3> f{0.0, 0.0, 0.0};
  for (int j = 0; j < 3; ++j) {
    const double vn = (axis == 0) ? q[j].v1 : q[j].v2;
    const double m = kEdgeWeights[j] * q[j].h * vn;
    f[0] += m;
    f[1] += m * q[j].v1;
    f[2] += m * q[j].v2;
  }
  return f;
}

std::array<double, 3> cell_source(const std::array<EvolvedValue, 3>& left,
                                  const std::array<EvolvedValue, 3>& right,
                                  const std::array<EvolvedValue, 3>& bottom,
                                  const std::array<EvolvedValue, 3>& top,
                                  double g) {
  double sx = 0.0, sy = 0.0;
  for (int j = 0; j < 3; ++j) {
    sx += kEdgeWeights[j] * 0.5 * (right[j].h + left[j].h) *
          (right[j].H - left[j].H);
    sy += kEdgeWeights[j] * 0.5 * (top[j].h + bottom[j].h) *
          (top[j].H - bottom[j].H);
  }
  return {0.0, g * sx, g * sy};
}

double fv_update(ConservedState& u, const CartesianGrid& g,
                 const EdgeFluxes& fluxes, const CellTerms& terms, double dt,
                 double h_max, bool parallel) {
  const double inv_dx = 1.0 / g.dx;
  const double tol = -1e-12 * std::max(h_max, 1e-300);
  const double min_h_update = parallel_min(
      g.ny, parallel, std::numeric_limits<double>::max(), [&](int j) {
        double row_min = std::numeric_limits<double>::max();
        for (int i = 0; i < g.nx; ++i) {
          const double dtw = fluxes.dt_v(i, j), dte = fluxes.dt_v(i + 1, j);
          const double dts = fluxes.dt_h(i, j), dtn = fluxes.dt_h(i, j + 1);
          const double dh =
              dte * fluxes.fv[0](i + 1, j) - dtw * fluxes.fv[0](i, j) +
              dtn * fluxes.fh[0](i, j + 1) - dts * fluxes.fh[0](i, j);
          const double dq1 =
              dte * fluxes.fv[1](i + 1, j) - dtw * fluxes.fv[1](i, j) +
              dtn * fluxes.fh[1](i, j + 1) - dts * fluxes.fh[1](i, j) +
              dt * terms.src_x(i, j);
          const double dq2 =
              dte * fluxes.fv[2](i + 1, j) - dtw * fluxes.fv[2](i, j) +
              dtn * fluxes.fh[2](i, j + 1) - dts * fluxes.fh[2](i, j) +
              dt * terms.src_y(i, j);
          const double hn = u.h(i, j) - inv_dx * dh;
          u.h(i, j) = hn;
          u.hv1(i, j) -= inv_dx * dq1;
          u.hv2(i, j) -= inv_dx * dq2;
          if (hn < row_min) row_min = hn;
        }
        return row_min;
      });
  if (min_h_update < tol) {
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        if (u.h(i, j) < tol) {
          std::ostringstream os;
          os << "fv_update: negative water height " << u.h(i, j)
             << " in cell (" << i << ", " << j << ") at t=" << u.time;
          throw SolverError(os.str());
        }
  }
  return min_h_update;
}

Solver::Solver(CartesianGrid grid, Bathymetry bathymetry,
               BoundarySet boundaries, SchemeParams params)
    : grid_(grid),
      bathy_(std::move(bathymetry)),
      bc_(std::move(boundaries)),
      params_(params),
      dry_(DryParams::make(grid, params.eps_h)),
      u_(grid),
      w_(grid),
      corners_(grid),
      cells_(grid),
      evolved_(grid),
      fluxes_(grid),
      terms_(grid) {
  // topography can raise |v| + 2c along characteristics at rate g |grad b|
  double m = 0.0;
  for (int j = -1; j <= grid_.ny; ++j)
    for (int i = -1; i <= grid_.nx; ++i) {
      m = std::max(m, std::abs(bathy_.b_cell(i + 1, j) - bathy_.b_cell(i, j)));
      m = std::max(m, std::abs(bathy_.b_cell(i, j + 1) - bathy_.b_cell(i, j)));
    }
  bslope_max_ = m / grid_.dx;
}

void Solver::set_state(ConservedState u) {
  u_ = std::move(u);
  zero_dry_cells(u_, grid_, dry_, params_.parallel);
  char_bound_ = -1.0;
}

void Solver::prepare() {
  fill_ghost_cells(u_, grid_, bathy_.b_cell, bc_, u_.time, bathy_.gravity);
  h_max_ = parallel_max(grid_.ny, params_.parallel, 0.0, [&](int j) {
    double m = 0.0;
    for (int i = 0; i < grid_.nx; ++i) m = std::max(m, u_.h(i, j));
    return m;
  });
  const double v_ref = reference_speed(u_, grid_, dry_);
  if (char_bound_ < 0.0) {
    // the running characteristic bound starts from the initial data
    char_bound_ = characteristic_speed_max(u_, grid_, dry_.eps_h,
                                           bathy_.gravity, true);
  } else if (bc_.any(BoundaryKind::inflow)) {
    // boundary forcing may legitimately raise it; scan the ghost frame only
    double gmax = 0.0;
    for (int j = -grid_.ghost; j < grid_.ny + grid_.ghost; ++j)
      for (int i = -grid_.ghost; i < grid_.nx + grid_.ghost; ++i) {
        if (grid_.in_interior_cell_range(i, j)) continue;
        const double h = u_.h(i, j);
        if (h < dry_.eps_h) continue;
        const double rp = std::hypot(u_.hv1(i, j), u_.hv2(i, j)) / h +
                          2.0 * std::sqrt(bathy_.gravity * h);
        gmax = std::max(gmax, rp);
      }
    char_bound_ = std::max(char_bound_, gmax);
  }
  conserved_to_primitive(u_, bathy_, grid_, dry_, v_ref,
                         kCharMargin * char_bound_, params_.parallel, w_);
  reset_limited_discharge(u_, w_, grid_, dry_, params_.parallel);
}

double Solver::cfl_dt() {
  prepare();
  const double amax =
      parallel_max(grid_.ny, params_.parallel, 0.0, [&](int j) {
        double m = 0.0;
        for (int i = 0; i < grid_.nx; ++i) {
          if (w_.h(i, j) <= 0.0) continue;
          const double c = std::sqrt(bathy_.gravity * w_.h(i, j));
          const double s =
              std::max(std::abs(w_.v1(i, j)), std::abs(w_.v2(i, j))) + c;
          if (s > m) m = s;
        }
        return m;
      });
  if (amax <= 0.0) return params_.dt_all_dry;
  return params_.mu * grid_.dx / amax;
}

StepStats Solver::step(double dt) {
  if (!(dt > 0.0)) throw SolverError("step: nonpositive dt");
  StepStats stats;
  stats.dt = dt;

  prepare();
  corner_pass(grid_, w_, bathy_, params_.parallel, corners_);
  build_evolution_data(grid_, w_, bathy_, corners_, params_.parallel, cells_);

  EvoParams ep;
  ep.tau = 0.5 * dt;
  ep.g = bathy_.gravity;
  ep.order = params_.order;
  ep.entropy_fix = params_.entropy_fix;
  evolve_all(grid_, cells_, corners_, ep, params_.parallel, evolved_);

  // split advective fluxes, Simpson over the three edge points
  parallel_for(grid_.ny, params_.parallel, [&](int j) {
    for (int i = 0; i <= grid_.nx; ++i) {
      const std::array<EvolvedValue, 3> q{
          EvolvedValue{evolved_.h_c(i, j), evolved_.v1_c(i, j),
                       evolved_.v2_c(i, j), evolved_.H_c(i, j)},
          EvolvedValue{evolved_.h_v(i, j), evolved_.v1_v(i, j),
                       evolved_.v2_v(i, j), evolved_.H_v(i, j)},
          EvolvedValue{evolved_.h_c(i, j + 1), evolved_.v1_c(i, j + 1),
                       evolved_.v2_c(i, j + 1), evolved_.H_c(i, j + 1)}};
      const auto f = advective_edge_flux(q, 0);
      fluxes_.fv[0](i, j) = f[0];
      fluxes_.fv[1](i, j) = f[1];
      fluxes_.fv[2](i, j) = f[2];
    }
  });
  parallel_for(grid_.ny + 1, params_.parallel, [&](int j) {
    for (int i = 0; i < grid_.nx; ++i) {
      const std::array<EvolvedValue, 3> q{
          EvolvedValue{evolved_.h_c(i, j), evolved_.v1_c(i, j),
                       evolved_.v2_c(i, j), evolved_.H_c(i, j)},
          EvolvedValue{evolved_.h_h(i, j), evolved_.v1_h(i, j),
                       evolved_.v2_h(i, j), evolved_.H_h(i, j)},
          EvolvedValue{evolved_.h_c(i + 1, j), evolved_.v1_c(i + 1, j),
                       evolved_.v2_c(i + 1, j), evolved_.H_c(i + 1, j)}};
      const auto f = advective_edge_flux(q, 1);
      fluxes_.fh[0](i, j) = f[0];
      fluxes_.fh[1](i, j) = f[1];
      fluxes_.fh[2](i, j) = f[2];
    }
  });

  // draining times
  parallel_for(grid_.ny, params_.parallel, [&](int j) {
    for (int i = 0; i < grid_.nx; ++i) {
      const double out = std::max(fluxes_.fv[0](i + 1, j), 0.0) +
                         std::max(-fluxes_.fv[0](i, j), 0.0) +
                         std::max(fluxes_.fh[0](i, j + 1), 0.0) +
                         std::max(-fluxes_.fh[0](i, j), 0.0);
      terms_.drain(i, j) = draining_time(u_.h(i, j), grid_.dx, out, dt);
    }
  });

  // cut-off time step per edge; ghost neighbours never limit
  parallel_for(grid_.ny, params_.parallel, [&](int j) {
    for (int i = 0; i <= grid_.nx; ++i) {
      const double dm = (i > 0) ? terms_.drain(i - 1, j) : dt;
      const double dp = (i < grid_.nx) ? terms_.drain(i, j) : dt;
      fluxes_.dt_v(i, j) = edge_time_step(fluxes_.fv[0](i, j), dm, dp, dt);
    }
  });
  parallel_for(grid_.ny + 1, params_.parallel, [&](int j) {
    for (int i = 0; i < grid_.nx; ++i) {
      const double dm = (j > 0) ? terms_.drain(i, j - 1) : dt;
      const double dp = (j < grid_.ny) ? terms_.drain(i, j) : dt;
      fluxes_.dt_h(i, j) = edge_time_step(fluxes_.fh[0](i, j), dm, dp, dt);
    }
  });

  // gravity driven source
  parallel_for(grid_.ny, params_.parallel, [&](int j) {
    for (int i = 0; i < grid_.nx; ++i) {
      const std::array<EvolvedValue, 3> l{
          EvolvedValue{evolved_.h_c(i, j), 0, 0, evolved_.H_c(i, j)},
          EvolvedValue{evolved_.h_v(i, j), 0, 0, evolved_.H_v(i, j)},
          EvolvedValue{evolved_.h_c(i, j + 1), 0, 0, evolved_.H_c(i, j + 1)}};
      const std::array<EvolvedValue, 3> r{
          EvolvedValue{evolved_.h_c(i + 1, j), 0, 0, evolved_.H_c(i + 1, j)},
          EvolvedValue{evolved_.h_v(i + 1, j), 0, 0, evolved_.H_v(i + 1, j)},
          EvolvedValue{evolved_.h_c(i + 1, j + 1), 0, 0,
                       evolved_.H_c(i + 1, j + 1)}};
      const std::array<EvolvedValue, 3> bo{
          EvolvedValue{evolved_.h_c(i, j), 0, 0, evolved_.H_c(i, j)},
          EvolvedValue{evolved_.h_h(i, j), 0, 0, evolved_.H_h(i, j)},
          EvolvedValue{evolved_.h_c(i + 1, j), 0, 0, evolved_.H_c(i + 1, j)}};
      const std::array<EvolvedValue, 3> to{
          EvolvedValue{evolved_.h_c(i, j + 1), 0, 0, evolved_.H_c(i, j + 1)},
          EvolvedValue{evolved_.h_h(i, j + 1), 0, 0, evolved_.H_h(i, j + 1)},
          EvolvedValue{evolved_.h_c(i + 1, j + 1), 0, 0,
                       evolved_.H_c(i + 1, j + 1)}};
      const auto s = cell_source(l, r, bo, to, bathy_.gravity);
      terms_.src_x(i, j) = s[1];
      terms_.src_y(i, j) = s[2];
    }
  });

  stats.min_h_update =
      fv_update(u_, grid_, fluxes_, terms_, dt, h_max_, params_.parallel);

  zero_dry_cells(u_, grid_, dry_, params_.parallel);
  stats.min_h = parallel_min(grid_.ny, params_.parallel,
                             std::numeric_limits<double>::max(), [&](int j) {
                               double m = std::numeric_limits<double>::max();
                               for (int i = 0; i < grid_.nx; ++i)
                                 m = std::min(m, u_.h(i, j));
                               return m;
                             });

  // advance the characteristic bound: it follows the field downward and
  // grows only at the topographic rate
  const double rp_new = characteristic_speed_max(u_, grid_, dry_.eps_h,
                                                 bathy_.gravity, false);
  char_bound_ = std::min(char_bound_, rp_new) +
                bathy_.gravity * bslope_max_ * dt;

  int cut = 0;
  for (int j = 0; j < grid_.ny; ++j) {
    for (int i = 0; i <= grid_.nx; ++i)
      if (fluxes_.dt_v(i, j) < dt) ++cut;
  }
  for (int j = 0; j <= grid_.ny; ++j) {
    for (int i = 0; i < grid_.nx; ++i)
      if (fluxes_.dt_h(i, j) < dt) ++cut;
  }
  stats.cut_edges = cut;

  u_.time += dt;
  return stats;
}

StepStats Solver::advance(double dt_cap) {
  double dt = cfl_dt();
  if (dt_cap > 0.0) dt = std::min(dt, dt_cap);
  if (dt < params_.dt_min) {
    std::ostringstream os;
    os << "advance: time step " << dt << " fell below the minimum "
       << params_.dt_min << " at t=" << u_.time;
    throw SolverError(os.str());
  }
  return step(dt);
}

double Solver::total_volume() const {
  double s = 0.0;
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i < grid_.nx; ++i) s += u_.h(i, j);
  return s * grid_.cell_area();
}

}  // namespace fveg
