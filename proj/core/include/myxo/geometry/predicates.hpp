#pragma once

#include "myxo/geometry/point_set.hpp"

namespace myxo::geom {

/// Sign of the orientation determinant: +1 when (a,b,c) turn counterclockwise,
/// -1 clockwise, 0 exactly collinear. Evaluated with a floating-point filter
/// and an exact rational fallback, so the sign is always correct.
int orient2d(const Point& a, const Point& b, const Point& c);

/// Sign of the incircle determinant for a counterclockwise triangle (a,b,c):
/// +1 when d lies strictly inside the circumcircle, -1 strictly outside,
/// 0 exactly on it. Exact, like orient2d.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

} // namespace myxo::geom
