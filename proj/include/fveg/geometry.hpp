#pragma once

#include <array>
#include <cstddef>

#include "fveg/grid.hpp"

namespace fveg {

/// Footprint of a bicharacteristic cone at the old time level: a circle of
/// radius tau*c around the transported point Q0 = x + tau*v.
struct Circle {
  double cx = 0.0, cy = 0.0, r = 0.0;

  bool contains(const Circle& o) const;
};

/// Smallest circle containing both inputs. If one contains the other the
/// bigger circle is returned; coincident centers keep the larger radius.
Circle merge_circles(const Circle& a, const Circle& b);

/// One arc of the footprint circle assigned to the cell holding its angular
/// midpoint. Angles satisfy 0 <= a < b <= 2*pi. Cell indices are offsets
/// from the quadrature point's base cell.
struct Arc {
  double a = 0.0, b = 0.0;
  int di = 0, dj = 0;
};

inline constexpr int kMaxArcs = 64;
using ArcList = std::array<Arc, kMaxArcs>;

/// Splits the circle at its intersections with the grid lines it crosses and
/// additionally at the four cardinal angles (so that sgn(cos), sgn(sin) are
/// constant per arc). Everything is computed in coordinates local to the
/// quadrature point: vertical grid lines sit at (m + x_shift) dx and
/// horizontal ones at (m + y_shift) dx, integer m, with shifts of 0.5 for
/// the edge-midpoint point kinds. A zero-radius circle yields one arc
/// [0, 2*pi) assigned to the cell holding the center. Returns the count.
int arc_decompose(const Circle& c, double dx, double x_shift, double y_shift,
                  ArcList& out);

/// Antiderivatives of cos^p(t) sin^q(t) for p+q <= 4 (the (4,0)/(0,4) pair is
/// not needed by the evolution operators). Evaluate at both arc endpoints and
/// subtract.
struct TrigPrim {
  double i00, i10, i01, i20, i11, i02;
  double i30, i21, i12, i03;
  double i31, i22, i13;

  static TrigPrim at(double theta);
};

/// Definite integrals of the monomial table over [a, b].
struct TrigInt {
  double i00, i10, i01, i20, i11, i02;
  double i30, i21, i12, i03;
  double i31, i22, i13;

  static TrigInt over(double a, double b);
};

}  // namespace fveg
