#pragma once

#include <vector>

#include "chebbv/funcspec.hpp"
#include "chebbv/interval.hpp"

namespace chebbv {

/// Chebyshev coefficients c_0..c_J of a function on its interval. Either the
/// n-point quadrature approximation c_{j,n} (n_quadrature = n > 0) or
/// stabilized reference values (n_quadrature = 0, with `tolerance` recording
/// the final doubling delta actually achieved).
struct CoefficientTable {
  Interval interval;
  int n_quadrature = 0;
  std::vector<double> values;
  double tolerance = 0.0;

  int max_index() const { return static_cast<int>(values.size()) - 1; }
  double at(int j) const;  // range-checked
};

/// c_{k,n} = (2/n) sum_{l=1}^n f(G(t_l)) T_k(t_l) at the roots t_l of T_n,
/// for k = 0..k_max with k_max < 2n. Sums use compensated accumulation.
CoefficientTable quadrature_coefficients(const FunctionSpec& f, int n, int k_max);

/// Reference coefficients c_j, j = 0..j_max: the quadrature rule with n
/// doubling from max(64, 2 j_max) until the largest coefficient change is at
/// most tol.
CoefficientTable reference_coefficients(const FunctionSpec& f, int j_max, double tol = 1e-10,
                                        int max_doublings = 20);

/// Reference coefficients c^(r)_j of the r-th derivative of f, r <= declared k.
CoefficientTable derivative_coefficients(const FunctionSpec& f, int r, int j_max,
                                         double tol = 1e-10);

/// sum_{j=1}^{terms} (-1)^j (c_{2jn-k} + c_{2jn+k}) over a reference table;
/// equals c_{k,n} - c_k up to the tail beyond `terms`.
double aliasing_residual(const CoefficientTable& reference, int k, int n, int terms);

}  // namespace chebbv
