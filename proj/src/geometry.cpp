#include "fveg/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fveg {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

bool Circle::contains(const Circle& o) const {
  const double d = std::hypot(o.cx - cx, o.cy - cy);
  return d + o.r <= r;
}

Circle merge_circles(const Circle& a, const Circle& b) {
  const double d = std::hypot(b.cx - a.cx, b.cy - a.cy);
  if (d == 0.0) return a.r >= b.r ? a : b;
  if (d + b.r <= a.r) return a;
  if (d + a.r <= b.r) return b;
  Circle m;
  m.r = 0.5 * (a.r + b.r + d);
  const double s = (m.r - a.r) / d;
  m.cx = a.cx + s * (b.cx - a.cx);
  m.cy = a.cy + s * (b.cy - a.cy);
  return m;
}

int arc_decompose(const Circle& c, double dx, double x_shift, double y_shift,
                  ArcList& out) {
  // the cell offset of a local coordinate; points on a line go lower
  auto cell_off = [&](double p, double shift) {
    const double u = p / dx + shift;
    double f = std::floor(u);
    if (f == u) f -= 1.0;
    return static_cast<int>(f);
  };
  if (c.r <= 0.0) {
    out[0] = {0.0, kTwoPi, cell_off(c.cx, x_shift), cell_off(c.cy, y_shift)};
    return 1;
  }

  std::array<double, kMaxArcs> cut{};
  int n = 0;
  auto push = [&](double t) {
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t -= kTwoPi;
    if (n < kMaxArcs) cut[n++] = t;
  };
  push(0.0);
  push(0.5 * M_PI);
  push(M_PI);
  push(1.5 * M_PI);

  // vertical grid lines at (m + x_shift) dx crossing the circle
  const int ilo =
      static_cast<int>(std::ceil((c.cx - c.r) / dx - x_shift));
  const int ihi =
      static_cast<int>(std::floor((c.cx + c.r) / dx - x_shift));
  for (int m = ilo; m <= ihi; ++m) {
    const double u = ((m + x_shift) * dx - c.cx) / c.r;
    if (u <= -1.0 || u >= 1.0) continue;  // tangent lines do not split
    const double t = std::acos(u);
    push(t);
    push(kTwoPi - t);
  }
  // horizontal grid lines at (m + y_shift) dx
  const int jlo =
      static_cast<int>(std::ceil((c.cy - c.r) / dx - y_shift));
  const int jhi =
      static_cast<int>(std::floor((c.cy + c.r) / dx - y_shift));
  for (int m = jlo; m <= jhi; ++m) {
    const double u = ((m + y_shift) * dx - c.cy) / c.r;
    if (u <= -1.0 || u >= 1.0) continue;
    const double t = std::asin(u);
    push(t);
    push(M_PI - t);
  }

  std::sort(cut.begin(), cut.begin() + n);
  // collapse duplicate cut angles so the arcs partition [0, 2*pi) exactly
  int m = 1;
  for (int k = 1; k < n; ++k)
    if (cut[k] - cut[m - 1] > 1e-14) cut[m++] = cut[k];
  n = m;

  int count = 0;
  for (int k = 0; k < n; ++k) {
    const double a = cut[k];
    const double b = (k + 1 < n) ? cut[k + 1] : kTwoPi;
    const double tm = 0.5 * (a + b);
    const double px = c.cx + c.r * std::cos(tm);
    const double py = c.cy + c.r * std::sin(tm);
    out[count++] = {a, b, cell_off(px, x_shift), cell_off(py, y_shift)};
  }
  return count;
}

TrigPrim TrigPrim::at(double t) {
  const double s = std::sin(t);
  const double co = std::cos(t);
  const double s2 = s * s, c2 = co * co;
  const double s3 = s2 * s, c3 = c2 * co;
  TrigPrim p;
  p.i00 = t;
  p.i10 = s;
  p.i01 = -co;
  p.i20 = 0.5 * t + 0.5 * s * co;
  p.i11 = 0.5 * s2;
  p.i02 = 0.5 * t - 0.5 * s * co;
  p.i30 = s - s3 / 3.0;
  p.i21 = -c3 / 3.0;
  p.i12 = s3 / 3.0;
  p.i03 = -co + c3 / 3.0;
  p.i31 = -0.25 * c2 * c2;
  p.i22 = 0.125 * t - 0.125 * s * co * (c2 - s2);
  p.i13 = 0.25 * s2 * s2;
  return p;
}

TrigInt TrigInt::over(double a, double b) {
  const TrigPrim pa = TrigPrim::at(a);
  const TrigPrim pb = TrigPrim::at(b);
  TrigInt r;
  r.i00 = pb.i00 - pa.i00;
  r.i10 = pb.i10 - pa.i10;
  r.i01 = pb.i01 - pa.i01;
  r.i20 = pb.i20 - pa.i20;
  r.i11 = pb.i11 - pa.i11;
  r.i02 = pb.i02 - pa.i02;
  r.i30 = pb.i30 - pa.i30;
  r.i21 = pb.i21 - pa.i21;
  r.i12 = pb.i12 - pa.i12;
  r.i03 = pb.i03 - pa.i03;
  r.i31 = pb.i31 - pa.i31;
  r.i22 = pb.i22 - pa.i22;
  r.i13 = pb.i13 - pa.i13;
  return r;
}

}  // namespace fveg
