#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace chebbv {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 60;
  std::size_t max_intervals = 200000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
};

/// Adaptive bisection with a fixed 15-point Gauss-Kronrod kernel. Nodes are
/// strictly interior, and bisection toward an endpoint refines geometrically
/// (up to max_depth), which absorbs integrable endpoint behavior.
/// Throws ConvergenceError when the interval budget is exhausted or the error
/// estimate indicates a non-convergent (divergent) integral, and EvalError on
/// non-finite integrand values.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {});

/// Same, with a priori splits at the given interior points.
QuadratureResult integrate_split(const std::function<double(double)>& f, double a, double b,
                                 std::vector<double> splits, const QuadratureOptions& opt = {});

}  // namespace chebbv
