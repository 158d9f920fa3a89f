#pragma once

#include <vector>

#include "chebbv/interval.hpp"

namespace chebbv {

/// Roots of T_n: t_l = cos((2l-1)pi/(2n)) for l = 1..n, strictly decreasing,
/// all in (-1, 1).
std::vector<double> chebyshev_points(int n);

/// T_j(t) = cos(j arccos t). Arguments within 1e-12 of +-1 are clamped to the
/// endpoint; anything further outside [-1, 1] is a domain error.
double eval_basis(int j, double t);

/// Affine bijection [-1,1] -> [a,b]: t |-> a + (b-a)/2 (t+1).
double map_interval(const Interval& iv, double t);

/// Inverse bijection [a,b] -> [-1,1].
double map_reference(const Interval& iv, double x);

/// Truncated Chebyshev series under the primed-sum convention: coefficients
/// are stored unhalved and the 1/2 weight on c_0 is applied at evaluation.
struct ChebSeries {
  Interval interval;
  std::vector<double> coeffs;  // c_0 .. c_d

  ChebSeries(Interval iv, std::vector<double> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double x) const;
};

/// Clenshaw evaluation of c_0/2 + sum_{j=1}^d c_j T_j(G^{-1}(x)) at x in [a,b].
double eval_series(const ChebSeries& s, double x);

}  // namespace chebbv
