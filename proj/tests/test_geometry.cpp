#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fveg/geometry.hpp"

using namespace fveg;

TEST_CASE("merge circles") {
  // formula case: centers (0,0) r=1 and (3,0) r=1
  Circle m = merge_circles({0, 0, 1}, {3, 0, 1});
  CHECK(m.cx == doctest::Approx(1.5));
  CHECK(m.cy == doctest::Approx(0.0));
  CHECK(m.r == doctest::Approx(2.5));

  // containment: keep the bigger circle
  m = merge_circles({0, 0, 1}, {0.5, 0, 0.2});
  CHECK(m.cx == doctest::Approx(0.0));
  CHECK(m.r == doctest::Approx(1.0));

  // identical circles
  m = merge_circles({1, 2, 0.5}, {1, 2, 0.5});
  CHECK(m.cx == doctest::Approx(1.0));
  CHECK(m.cy == doctest::Approx(2.0));
  CHECK(m.r == doctest::Approx(0.5));

  // coincident centers, different radii
  m = merge_circles({1, 1, 0.1}, {1, 1, 0.7});
  CHECK(m.r == doctest::Approx(0.7));
}

TEST_CASE("merged circle comprehends both inputs") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pos(-2.0, 2.0);
  std::uniform_real_distribution<double> rad(0.0, 1.5);
  for (int k = 0; k < 500; ++k) {
    const Circle a{pos(rng), pos(rng), rad(rng)};
    const Circle b{pos(rng), pos(rng), rad(rng)};
    const Circle m = merge_circles(a, b);
    const double da = std::hypot(a.cx - m.cx, a.cy - m.cy);
    const double db = std::hypot(b.cx - m.cx, b.cy - m.cy);
    CHECK(da + a.r <= m.r + 1e-12);
    CHECK(db + b.r <= m.r + 1e-12);
  }
}

TEST_CASE("arc decomposition around a corner") {
  // small circle centered on a corner (local frame): four quarter arcs,
  // one per stencil cell
  ArcList arcs;
  const int n = arc_decompose({0.0, 0.0, 0.3}, 1.0, 0.0, 0.0, arcs);
  REQUIRE(n == 4);
  double len = 0.0;
  for (int k = 0; k < n; ++k) {
    CHECK(arcs[k].b - arcs[k].a == doctest::Approx(M_PI / 2).epsilon(1e-12));
    len += arcs[k].b - arcs[k].a;
  }
  CHECK(len == doctest::Approx(2 * M_PI));
  CHECK(arcs[0].di == 0);  // first quadrant
  CHECK(arcs[0].dj == 0);
  CHECK(arcs[1].di == -1);
  CHECK(arcs[1].dj == 0);
  CHECK(arcs[2].di == -1);
  CHECK(arcs[2].dj == -1);
  CHECK(arcs[3].di == 0);
  CHECK(arcs[3].dj == -1);
}

TEST_CASE("circle inside one cell keeps the cardinal splits only") {
  ArcList arcs;
  const int n = arc_decompose({0.5, 0.5, 0.2}, 1.0, 0.0, 0.0, arcs);
  REQUIRE(n == 4);  // cardinal angles only
  for (int k = 0; k < n; ++k) {
    CHECK(arcs[k].di == 0);
    CHECK(arcs[k].dj == 0);
  }
}

TEST_CASE("edge midpoint circle splits into two halves") {
  // vertical-edge midpoint frame: horizontal lines shifted by half a cell
  ArcList arcs;
  const int n = arc_decompose({0.0, 0.0, 0.3}, 1.0, 0.0, 0.5, arcs);
  double left = 0.0, right = 0.0;
  for (int k = 0; k < n; ++k) {
    if (arcs[k].di == -1)
      left += arcs[k].b - arcs[k].a;
    else if (arcs[k].di == 0)
      right += arcs[k].b - arcs[k].a;
    CHECK(arcs[k].dj == 0);
  }
  CHECK(left == doctest::Approx(M_PI));
  CHECK(right == doctest::Approx(M_PI));
}

TEST_CASE("zero radius gives one degenerate arc") {
  ArcList arcs;
  const int n = arc_decompose({-0.7, 0.7, 0.0}, 1.0, 0.0, 0.0, arcs);
  REQUIRE(n == 1);
  CHECK(arcs[0].a == 0.0);
  CHECK(arcs[0].b == doctest::Approx(2 * M_PI));
  CHECK(arcs[0].di == -1);
  CHECK(arcs[0].dj == 0);
}

TEST_CASE("arc partition and midpoint-cell consistency on random circles") {
  const double dx = 1.0;
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> pos(-1.0, 1.0);
  std::uniform_real_distribution<double> rad(0.0, 1.8);
  for (int trial = 0; trial < 300; ++trial) {
    const Circle c{pos(rng), pos(rng), rad(rng)};
    const double xs = (trial % 2) ? 0.5 : 0.0;
    const double ys = (trial % 3 == 0) ? 0.5 : 0.0;
    ArcList arcs;
    const int n = arc_decompose(c, dx, xs, ys, arcs);
    double len = 0.0;
    for (int k = 0; k < n; ++k) {
      CHECK(arcs[k].b >= arcs[k].a);
      len += arcs[k].b - arcs[k].a;
      if (k > 0) CHECK(arcs[k].a == doctest::Approx(arcs[k - 1].b));
      // the angular midpoint lies in (or on the border of) its cell
      const double tm = 0.5 * (arcs[k].a + arcs[k].b);
      const double px = c.cx + c.r * std::cos(tm);
      const double py = c.cy + c.r * std::sin(tm);
      CHECK(px >= (arcs[k].di - xs) * dx - 1e-9);
      CHECK(px <= (arcs[k].di + 1 - xs) * dx + 1e-9);
      CHECK(py >= (arcs[k].dj - ys) * dx - 1e-9);
      CHECK(py <= (arcs[k].dj + 1 - ys) * dx + 1e-9);
    }
    CHECK(len == doctest::Approx(2 * M_PI).epsilon(1e-12));
  }
}

TEST_CASE("mirrored circles decompose into mirrored arcs") {
  // local-frame geometry: negating the center reflects the arc set exactly
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pos(-0.4, 0.4);
  std::uniform_real_distribution<double> rad(0.05, 0.6);
  for (int trial = 0; trial < 100; ++trial) {
    const Circle c{pos(rng), pos(rng), rad(rng)};
    const Circle m{-c.cx, c.cy, c.r};
    ArcList a, b;
    const int na = arc_decompose(c, 1.0, 0.0, 0.0, a);
    const int nb = arc_decompose(m, 1.0, 0.0, 0.0, b);
    CHECK(na == nb);
    // total arc length per cell column is mirrored
    double right_a = 0.0, right_b = 0.0;
    for (int k = 0; k < na; ++k)
      if (a[k].di == 0) right_a += a[k].b - a[k].a;
    for (int k = 0; k < nb; ++k)
      if (b[k].di == -1) right_b += b[k].b - b[k].a;
    CHECK(right_a == doctest::Approx(right_b).epsilon(1e-13));
  }
}

TEST_CASE("trig antiderivative table against panel quadrature") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
  const int panels = 20000;
  auto quad = [&](int p, int q, double a, double b) {
    double s = 0.0;
    const double h = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
      const double t = a + (k + 0.5) * h;
      s += std::pow(std::cos(t), p) * std::pow(std::sin(t), q);
    }
    return s * h;
  };
  for (int trial = 0; trial < 25; ++trial) {
    double a = ang(rng), b = ang(rng);
    if (a > b) std::swap(a, b);
    const TrigInt I = TrigInt::over(a, b);
    const double vals[] = {I.i00, I.i10, I.i01, I.i20, I.i11, I.i02, I.i30,
                           I.i21, I.i12, I.i03, I.i31, I.i22, I.i13};
    const int ps[] = {0, 1, 0, 2, 1, 0, 3, 2, 1, 0, 3, 2, 1};
    const int qs[] = {0, 0, 1, 0, 1, 2, 0, 1, 2, 3, 1, 2, 3};
    for (int k = 0; k < 13; ++k) {
      CHECK(vals[k] == doctest::Approx(quad(ps[k], qs[k], a, b))
                           .epsilon(5e-8));
    }
  }
}
