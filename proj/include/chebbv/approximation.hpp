#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebbv/bounds.hpp"
#include "chebbv/cheb.hpp"
#include "chebbv/funcspec.hpp"

namespace chebbv {

enum class TheoremSelector { majidian, xiang, both };

/// Degree-d truncated series with n-point quadrature coefficients, 0 <= d < 2n.
ChebSeries build_approximation(const FunctionSpec& f, int d, int n);

/// Adaptive-quadrature measurement of ||f - series||_1 over [a,b], split at
/// the breakpoints of f.
double l1_error(const FunctionSpec& f, const ChebSeries& series, double tol = 1e-10);

/// One (d, n) experiment: the series, its measured L1 error, and the
/// certified bounds attached to it.
struct ApproximationRun {
  int d;
  int n;
  ChebSeries series;
  std::optional<double> measured_l1;
  std::vector<BoundResult> bounds;
};

ApproximationRun run_approximation(const FunctionSpec& f, int k, int d, int n,
                                   TheoremSelector sel = TheoremSelector::both,
                                   double tol = 1e-10);

struct ComparisonRow {
  int d;
  int n;
  std::optional<double> measured_l1;
  std::optional<double> bound_majidian;
  std::optional<double> bound_xiang;
  std::string error;  // nonempty when this pair was inadmissible or failed
};

/// One row per (d, n) pair. A failing pair records its error and the sweep
/// continues; partial results are first-class.
std::vector<ComparisonRow> comparison_table(const FunctionSpec& f, int k,
                                            const std::vector<std::pair<int, int>>& dn_pairs,
                                            TheoremSelector sel = TheoremSelector::both,
                                            double tol = 1e-10);

}  // namespace chebbv
