#pragma once

#include <cmath>

namespace hetsim {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Axis-aligned rectangle [x0, x1) x [y0, y1); the field's far edges are closed.
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  Point center() const { return {(x0 + x1) / 2.0, (y0 + y1) / 2.0}; }
  /// Radius of the circle through all four corners, centered on the rectangle.
  double circumradius() const { return std::hypot(width(), height()) / 2.0; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

}  // namespace hetsim
