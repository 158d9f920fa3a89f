#include "chebbv/cheb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebbv {

namespace {

constexpr double kEndpointSlack = 1e-12;

// Clamp a reference coordinate to [-1, 1], tolerating rounding up to
// kEndpointSlack beyond the endpoints.
double clamp_unit(double t, const char* who) {
  if (t >= -1.0 && t <= 1.0) return t;
  if (t > 1.0 && t - 1.0 <= kEndpointSlack) return 1.0;
  if (t < -1.0 && -1.0 - t <= kEndpointSlack) return -1.0;
  throw std::domain_error(std::string(who) + ": argument " + std::to_string(t) +
                          " outside [-1, 1]");
}

}  // namespace

std::vector<double> chebyshev_points(int n) {
  if (n < 1) throw std::invalid_argument("chebyshev_points: need n >= 1");
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l)
    pts[static_cast<std::size_t>(l - 1)] =
        std::cos((2.0 * l - 1.0) * std::numbers::pi / (2.0 * n));
  return pts;
}

double eval_basis(int j, double t) {
  if (j < 0) throw std::invalid_argument("eval_basis: need j >= 0");
  t = clamp_unit(t, "eval_basis");
  return std::cos(j * std::acos(t));
}

double map_interval(const Interval& iv, double t) {
  t = clamp_unit(t, "map_interval");
  if (t == -1.0) return iv.a;
  if (t == 1.0) return iv.b;
  return iv.a + iv.half_width() * (t + 1.0);
}

double map_reference(const Interval& iv, double x) {
  const double t = (2.0 * x - iv.a - iv.b) / iv.width();
  if (t >= -1.0 && t <= 1.0) return t;
  if (t > 1.0 && t - 1.0 <= kEndpointSlack) return 1.0;
  if (t < -1.0 && -1.0 - t <= kEndpointSlack) return -1.0;
  throw std::domain_error("map_reference: argument " + std::to_string(x) + " outside [" +
                          std::to_string(iv.a) + ", " + std::to_string(iv.b) + "]");
}

ChebSeries::ChebSeries(Interval iv, std::vector<double> c) : interval(iv), coeffs(std::move(c)) {
  if (coeffs.empty()) throw std::invalid_argument("ChebSeries: need at least one coefficient");
  for (double v : coeffs)
    if (!std::isfinite(v)) throw std::invalid_argument("ChebSeries: coefficients must be finite");
}

double ChebSeries::operator()(double x) const { return eval_series(*this, x); }

double eval_series(const ChebSeries& s, double x) {
  const double t = map_reference(s.interval, x);
  const double t2 = 2.0 * t;
  double b1 = 0.0, b2 = 0.0;
  for (int j = s.degree(); j >= 1; --j) {
    const double tmp = b1;
    b1 = t2 * b1 - b2 + s.coeffs[static_cast<std::size_t>(j)];
    b2 = tmp;
  }
  return t * b1 - b2 + 0.5 * s.coeffs[0];
}

}  // namespace chebbv
