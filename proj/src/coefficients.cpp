#include "chebbv/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "chebbv/accum.hpp"
#include "chebbv/cheb.hpp"
#include "chebbv/errors.hpp"

namespace chebbv {

double CoefficientTable::at(int j) const {
  if (j < 0 || j > max_index())
    throw std::out_of_range("CoefficientTable: index " + std::to_string(j) +
                            " outside [0, " + std::to_string(max_index()) + "]");
  return values[static_cast<std::size_t>(j)];
}

CoefficientTable quadrature_coefficients(const FunctionSpec& f, int n, int k_max) {
  if (n < 1) throw std::invalid_argument("quadrature_coefficients: need n >= 1");
  if (k_max < 0) throw std::invalid_argument("quadrature_coefficients: need k_max >= 0");
  if (k_max >= 2 * n)
    throw std::out_of_range("quadrature_coefficients: k_max = " + std::to_string(k_max) +
                            " must stay below 2n = " + std::to_string(2 * n));

  const Interval iv = f.interval();
  const std::vector<double> nodes = chebyshev_points(n);
  std::vector<CompensatedSum> acc(static_cast<std::size_t>(k_max) + 1);
  for (int l = 0; l < n; ++l) {
    const double t = nodes[static_cast<std::size_t>(l)];
    const double x = map_interval(iv, t);
    double fx;
    try {
      fx = f.evaluate_at(x);
    } catch (const EvalError& err) {
      throw EvalError(std::string(err.what()) + " (quadrature node l = " + std::to_string(l + 1) +
                      ", x = " + std::to_string(x) + ")");
    }
    acc[0].add(fx);
    if (k_max >= 1) acc[1].add(fx * t);
    double t_prev = 1.0, t_cur = t;
    for (int k = 2; k <= k_max; ++k) {
      const double t_next = 2.0 * t * t_cur - t_prev;
      acc[static_cast<std::size_t>(k)].add(fx * t_next);
      t_prev = t_cur;
      t_cur = t_next;
    }
  }

  std::vector<double> values(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k)
    values[static_cast<std::size_t>(k)] = 2.0 * acc[static_cast<std::size_t>(k)].value() / n;
  return CoefficientTable{iv, n, std::move(values), 0.0};
}

CoefficientTable reference_coefficients(const FunctionSpec& f, int j_max, double tol,
                                        int max_doublings) {
  if (j_max < 0) throw std::invalid_argument("reference_coefficients: need j_max >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("reference_coefficients: need tol > 0");
  if (max_doublings < 1)
    throw std::invalid_argument("reference_coefficients: need max_doublings >= 1");

  int n = std::max(64, 2 * j_max);
  std::vector<double> prev = quadrature_coefficients(f, n, j_max).values;
  double delta = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < max_doublings; ++iter) {
    n *= 2;
    std::vector<double> cur = quadrature_coefficients(f, n, j_max).values;
    delta = 0.0;
    for (std::size_t j = 0; j < cur.size(); ++j)
      delta = std::max(delta, std::abs(cur[j] - prev[j]));
    if (delta <= tol)
      return CoefficientTable{f.interval(), 0, std::move(cur), delta};
    prev = std::move(cur);
  }
  throw ConvergenceError("reference_coefficients: no stabilization to tol = " +
                             std::to_string(tol) + " after " + std::to_string(max_doublings) +
                             " doublings (last delta = " + std::to_string(delta) + ")",
                         delta);
}

CoefficientTable derivative_coefficients(const FunctionSpec& f, int r, int j_max, double tol) {
  if (r < 0) throw std::invalid_argument("derivative_coefficients: need r >= 0");
  if (r > f.smoothness())
    throw std::invalid_argument(
        "derivative_coefficients: order " + std::to_string(r) +
        " exceeds the declared smoothness class k = " + std::to_string(f.smoothness()) +
        "; the order-(k+1) weak derivative is not integrated directly");
  const DerivativeResult d = f.derivative(r);
  return reference_coefficients(d.spec, j_max, tol);
}

double aliasing_residual(const CoefficientTable& reference, int k, int n, int terms) {
  if (n < 1) throw std::invalid_argument("aliasing_residual: need n >= 1");
  if (terms < 1) throw std::invalid_argument("aliasing_residual: need terms >= 1");
  if (k < 0 || k >= 2 * n)
    throw std::out_of_range("aliasing_residual: need 0 <= k < 2n, got k = " + std::to_string(k) +
                            ", n = " + std::to_string(n));
  const int needed = 2 * terms * n + k;
  if (needed > reference.max_index())
    throw std::out_of_range("aliasing_residual: table reaches index " +
                            std::to_string(reference.max_index()) + " but term " +
                            std::to_string(terms) + " needs c_" + std::to_string(needed));
  double sum = 0.0;
  for (int j = 1; j <= terms; ++j) {
    const double pair = reference.at(2 * j * n - k) + reference.at(2 * j * n + k);
    sum += (j % 2 == 1) ? -pair : pair;
  }
  return sum;
}

}  // namespace chebbv
