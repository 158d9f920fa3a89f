#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace chebbv {

/// Closed interval [a, b] with a < b.
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw std::invalid_argument("Interval: endpoints must be finite");
    if (!(a < b))
      throw std::invalid_argument("Interval: need a < b, got [" + std::to_string(a_) + ", " +
                                  std::to_string(b_) + "]");
  }

  double width() const { return b - a; }
  double half_width() const { return 0.5 * (b - a); }
  double midpoint() const { return 0.5 * (a + b); }
  bool contains(double x) const { return x >= a && x <= b; }

  friend bool operator==(const Interval& lhs, const Interval& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b;
  }
};

}  // namespace chebbv
