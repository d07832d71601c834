#include "fveg/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace fveg {

namespace {
constexpr double kDefaultG = 9.81;
constexpr double kThackerG = 10.0;  // reproduces the reported periods

double sech(double x) { return 1.0 / std::cosh(x); }
}  // namespace

Scenario circular_dam_break(double gravity) {
  Scenario s;
  s.name = "circular-dam-break";
  s.lo = {0.0, 0.0};
  s.hi = {100.0, 100.0};
  s.default_nx = s.default_ny = 100;
  s.gravity = gravity > 0.0 ? gravity : kDefaultG;
  s.end_time = 1.75;
  s.snapshot_times = {1.75};
  s.bottom = [](double, double) { return 0.0; };
  // basin of radius 60 about the domain centre, clipped to the domain
  s.surface0 = [](double x, double y) {
    return (std::hypot(x - 50.0, y - 50.0) <= 60.0) ? 10.0 : 0.0;
  };
  s.velocity0 = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  return s;
}

Scenario sloping_shore(double gravity) {
  Scenario s;
  s.name = "sloping-shore";
  s.lo = {0.0, 0.0};
  s.hi = {80.0, 2.0};
  s.default_nx = 2000;
  s.default_ny = 50;
  s.gravity = gravity > 0.0 ? gravity : kDefaultG;
  s.end_time = 80.0;
  s.snapshot_times = {0.0, 9.0, 17.0, 23.0, 28.0, 80.0};
  const double D = 1.0, delta = 0.019;
  const double gamma = std::sqrt(3.0 * delta / (4.0 * D));
  const double xa =
      std::sqrt(4.0 * D / (3.0 * delta)) * std::acosh(std::sqrt(20.0));
  auto b = [xa](double x, double) {
    return (x < 2.0 * xa) ? 0.0 : (x - 2.0 * xa) / 19.85;
  };
  auto f = [=](double x) { return D + delta * sech(gamma * (x - xa)) *
                                            sech(gamma * (x - xa)); };
  s.bottom = b;
  s.surface0 = [=](double x, double y) { return std::max(f(x), b(x, y)); };
  // solitary-wave closure: v = sqrt(g/D) * (H - D) toward the shore
  const double gref = s.gravity;
  s.velocity0 = [=](double x, double y) {
    const double H = std::max(f(x), b(x, y));
    return std::array<double, 2>{std::sqrt(gref / D) * (H - D), 0.0};
  };
  s.boundaries.west = BoundaryKind::open;
  s.boundaries.east = BoundaryKind::open;
  s.boundaries.south = BoundaryKind::periodic;
  s.boundaries.north = BoundaryKind::periodic;
  return s;
}

Scenario double_rarefaction(double gravity) {
  Scenario s;
  s.name = "double-rarefaction";
  s.lo = {0.0, 0.0};
  s.hi = {25.0, 0.5};
  s.default_nx = 300;
  s.default_ny = 6;
  s.gravity = gravity > 0.0 ? gravity : kDefaultG;
  s.end_time = 0.65;
  s.snapshot_times = {0.05, 0.25, 0.45, 0.65};
  s.bottom = [](double x, double) {
    return (x > 25.0 / 3.0 && x < 12.5) ? 1.0 : 0.0;
  };
  s.surface0 = [](double, double) { return 10.0; };
  s.velocity0 = [b = s.bottom](double x, double y) {
    const double q = (x > 50.0 / 3.0) ? 350.0 : -350.0;
    return std::array<double, 2>{q / (10.0 - b(x, y)), 0.0};
  };
  s.boundaries.west = BoundaryKind::open;
  s.boundaries.east = BoundaryKind::open;
  s.boundaries.south = BoundaryKind::periodic;
  s.boundaries.north = BoundaryKind::periodic;
  return s;
}

double thacker_bottom(double x, double y) {
  const double h0 = 0.1, a = 1.0;
  const double r2 = x * x + y * y;
  return -h0 * (1.0 - r2 / (a * a));
}

double thacker_curved_surface(double x, double y, double t, double g) {
  const double h0 = 0.1, a = 1.0, r0 = 0.8;
  const double A = (a * a - r0 * r0) / (a * a + r0 * r0);
  const double omega = std::sqrt(8.0 * g * h0 / (a * a));
  const double r2 = x * x + y * y;
  const double den = 1.0 - A * std::cos(omega * t);
  const double rt = std::sqrt(1.0 - A * A);
  return h0 * (-1.0 + rt / den -
               r2 / (a * a) * (1.0 - (1.0 - A * A) / (den * den)));
}

double thacker_planar_surface(double x, double y, double t, double g) {
  const double h0 = 0.1, a = 1.0, eta = 0.5;
  const double omega = std::sqrt(2.0 * g * h0 / (a * a));
  return eta * h0 / (a * a) *
         (-eta + 2.0 * (x * std::cos(omega * t) + y * std::sin(omega * t)));
}

double thacker_curved_period(double g) {
  return 2.0 * M_PI / std::sqrt(8.0 * g * 0.1);
}

double thacker_planar_period(double g) {
  return 2.0 * M_PI / std::sqrt(2.0 * g * 0.1);
}

Scenario thacker_curved(double gravity) {
  Scenario s;
  s.name = "thacker-curved";
  s.lo = {-2.0, -2.0};
  s.hi = {2.0, 2.0};
  s.default_nx = s.default_ny = 100;
  s.gravity = gravity > 0.0 ? gravity : kThackerG;
  s.end_time = thacker_curved_period(s.gravity);
  s.snapshot_times = {s.end_time, 3.0 * s.end_time};
  s.bottom = [](double x, double y) { return thacker_bottom(x, y); };
  const double g = s.gravity;
  s.surface0 = [g](double x, double y) {
    return thacker_curved_surface(x, y, 0.0, g);
  };
  s.velocity0 = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  s.exact_h = [g](double x, double y, double t) {
    return std::max(thacker_curved_surface(x, y, t, g) - thacker_bottom(x, y),
                    0.0);
  };
  return s;
}

Scenario thacker_planar(double gravity) {
  Scenario s;
  s.name = "thacker-planar";
  s.lo = {-2.0, -2.0};
  s.hi = {2.0, 2.0};
  s.default_nx = s.default_ny = 100;
  s.gravity = gravity > 0.0 ? gravity : kThackerG;
  s.end_time = thacker_planar_period(s.gravity);
  s.snapshot_times = {s.end_time, 3.0 * s.end_time};
  s.bottom = [](double x, double y) { return thacker_bottom(x, y); };
  const double g = s.gravity;
  const double eta = 0.5;
  const double omega = std::sqrt(2.0 * g * 0.1);
  s.surface0 = [g](double x, double y) {
    return thacker_planar_surface(x, y, 0.0, g);
  };
  s.velocity0 = [=](double x, double y) {
    // rigid rotation, nonzero only where there is water
    const double h =
        thacker_planar_surface(x, y, 0.0, g) - thacker_bottom(x, y);
    if (h <= 0.0) return std::array<double, 2>{0.0, 0.0};
    return std::array<double, 2>{0.0, eta * omega};
  };
  s.exact_h = [g](double x, double y, double t) {
    return std::max(thacker_planar_surface(x, y, t, g) - thacker_bottom(x, y),
                    0.0);
  };
  return s;
}

Scenario conical_island(double gravity) {
  Scenario s;
  s.name = "conical-island";
  s.lo = {0.0, 0.0};
  s.hi = {25.0, 30.0};
  s.default_nx = 125;
  s.default_ny = 150;
  s.gravity = gravity > 0.0 ? gravity : kDefaultG;
  s.end_time = 40.0;
  s.snapshot_times = {7.9, 9.1, 10.7, 12.1, 13.7, 40.0};
  s.bottom = [](double x, double y) {
    const double r = std::hypot(x - 12.5, y - 15.0);
    if (r <= 1.1) return 0.625;
    if (r <= 3.6) return (3.6 - r) / 4.0;
    return 0.0;
  };
  const double H0 = 0.32;
  s.reference_surface = H0;
  s.surface0 = [=](double, double) { return H0; };
  s.velocity0 = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  const double L = 15.0, alpha = 0.1;
  const double xi = std::sqrt(3.0 * alpha * (1.0 + alpha) * L * L /
                              (4.0 * H0 * H0));
  const double g = s.gravity;
  s.boundaries.west = BoundaryKind::inflow;
  s.boundaries.inflow.reference_surface = H0;
  s.boundaries.inflow.surface = [=](double t) {
    const double a = sech(xi * std::sqrt(g * H0 / L) * (t - 3.5));
    return H0 + alpha * H0 * a * a;
  };
  s.gages = {{6.36, 14.25}, {8.9, 15.0}, {9.9, 15.0}, {12.5, 12.42},
             {15.1, 15.0}};
  return s;
}

Scenario dam_break_1d(double h_left, double h_right, double gravity) {
  Scenario s;
  s.name = "dam-break-1d";
  s.lo = {0.0, 0.0};
  s.hi = {50.0, 0.5};
  s.default_nx = 500;
  s.default_ny = 5;
  s.gravity = gravity > 0.0 ? gravity : kDefaultG;
  s.end_time = 2.0;
  s.snapshot_times = {2.0};
  s.bottom = [](double, double) { return 0.0; };
  s.surface0 = [=](double x, double) { return (x < 25.0) ? h_left : h_right; };
  s.velocity0 = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  s.boundaries.west = BoundaryKind::open;
  s.boundaries.east = BoundaryKind::open;
  s.boundaries.south = BoundaryKind::periodic;
  s.boundaries.north = BoundaryKind::periodic;
  return s;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{
      "circular-dam-break", "sloping-shore",  "double-rarefaction",
      "thacker-curved",     "thacker-planar", "conical-island",
      "dam-break-1d"};
  return names;
}

Scenario make_scenario(const std::string& name, double gravity) {
  if (name == "circular-dam-break") return circular_dam_break(gravity);
  if (name == "sloping-shore") return sloping_shore(gravity);
  if (name == "double-rarefaction") return double_rarefaction(gravity);
  if (name == "thacker-curved") return thacker_curved(gravity);
  if (name == "thacker-planar") return thacker_planar(gravity);
  if (name == "conical-island") return conical_island(gravity);
  if (name == "dam-break-1d") return dam_break_1d(1.0, 0.1, gravity);
  std::string msg = "unknown scenario '" + name + "', valid:";
  for (const auto& n : scenario_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

Bathymetry make_scenario_bathymetry(const Scenario& s,
                                    const CartesianGrid& g) {
  const Field b = cell_average_init(g, s.bottom, /*with_ghosts=*/true);
  return make_bathymetry(g, b, s.gravity);
}

ConservedState initial_state(const Scenario& s, const CartesianGrid& g,
                             const Bathymetry& bathy) {
  const Field H = cell_average_init(g, s.surface0);
  const Field vx = cell_average_init(
      g, [&](double x, double y) { return s.velocity0(x, y)[0]; });
  const Field vy = cell_average_init(
      g, [&](double x, double y) { return s.velocity0(x, y)[1]; });
  ConservedState u(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double h = std::max(H(i, j) - bathy.b_cell(i, j), 0.0);
      u.h(i, j) = h;
      u.hv1(i, j) = h * vx(i, j);
      u.hv2(i, j) = h * vy(i, j);
    }
  return u;
}

DamBreakExact DamBreakExact::make(double h_left, double h_right, double g) {
  DamBreakExact d;
  d.h_l = h_left;
  d.h_r = h_right;
  d.g = g;
  d.c_l = std::sqrt(g * h_left);
  if (h_right > 0.0) {
    // middle depth from rarefaction + shock matching, by bisection
    auto f = [&](double hm) {
      const double cm = std::sqrt(g * hm);
      const double v_rar = 2.0 * (d.c_l - cm);
      const double v_shk =
          (hm - h_right) *
          std::sqrt(0.5 * g * (hm + h_right) / (hm * h_right));
      return v_rar - v_shk;
    };
    double a = h_right, b = h_left;
    for (int it = 0; it < 200; ++it) {
      const double m = 0.5 * (a + b);
      (f(m) > 0.0 ? a : b) = m;
    }
    d.h_m = 0.5 * (a + b);
    d.c_m = std::sqrt(g * d.h_m);
    d.v_m = 2.0 * (d.c_l - d.c_m);
    d.shock_speed = d.h_m * d.v_m / (d.h_m - h_right);
  }
  return d;
}

std::array<double, 2> DamBreakExact::eval(double xi) const {
  if (xi <= -c_l) return {h_l, 0.0};
  if (h_r == 0.0) {
    if (xi >= 2.0 * c_l) return {0.0, 0.0};
    const double c = (2.0 * c_l - xi) / 3.0;
    return {c * c / g, 2.0 / 3.0 * (xi + c_l)};
  }
  const double xi_m = v_m - c_m;
  if (xi < xi_m) {
    const double c = (2.0 * c_l - xi) / 3.0;
    return {c * c / g, 2.0 / 3.0 * (xi + c_l)};
  }
  if (xi < shock_speed) return {h_m, v_m};
  return {h_r, 0.0};
}

std::array<double, 2> ritter_exact(double x, double t, double x0, double h_l,
                                   double g) {
  const DamBreakExact d = DamBreakExact::make(h_l, 0.0, g);
  if (t <= 0.0) return {(x < x0) ? h_l : 0.0, 0.0};
  return d.eval((x - x0) / t);
}

namespace {
constexpr double kGaussNode = 0.3872983346207417;  // sqrt(3/5)/2
constexpr std::array<double, 3> kGx{-kGaussNode, 0.0, kGaussNode};
constexpr std::array<double, 3> kGw{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
}  // namespace

ErrorNorms error_norms(const Field& h, const CartesianGrid& g,
                       const std::function<double(double, double)>& exact) {
  ErrorNorms e;
  double s1 = 0.0, s2 = 0.0, smax = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double xc = g.cell_center_x(i);
      const double yc = g.cell_center_y(j);
      double avg = 0.0;
      for (int q = 0; q < 3; ++q)
        for (int p = 0; p < 3; ++p)
          avg += kGw[p] * kGw[q] *
                 exact(xc + kGx[p] * g.dx, yc + kGx[q] * g.dx);
      const double d = std::abs(h(i, j) - avg);
      smax = std::max(smax, d);
      s1 += d;
      s2 += d * d;
    }
  e.linf = smax;
  e.l1 = s1 * g.cell_area();
  e.l2 = std::sqrt(s2 * g.cell_area());
  return e;
}

std::vector<double> eoc(const std::vector<double>& errors) {
  std::vector<double> r;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k)
    r.push_back(std::log2(errors[k] / errors[k + 1]));
  return r;
}

}  // namespace fveg
