#pragma once

#include "chebbv/coefficients.hpp"
#include "chebbv/interval.hpp"
#include "chebbv/variation.hpp"

namespace chebbv {

enum class BoundTheorem {
  decay_smooth,   // coefficient decay from the weighted variation of f^(k)
  decay_bv,       // coefficient decay from the total variation of f^(k)
  deriv_coeff,    // first-order bound on |c_j^(k)|
  err_majidian,   // L1 truncation bound built on decay_smooth
  err_xiang,      // L1 truncation bound built on decay_bv
};

/// Inputs shared by every bound: the interval, the regularity order k, and
/// the variation value V_k. `variation_kind` tags which functional produced
/// V_k; each bound insists on the matching kind so the two families cannot be
/// cross-wired.
struct BoundParams {
  Interval interval;
  int k;
  double variation;
  VariationKind variation_kind;

  BoundParams(Interval iv, int k_, double variation_, VariationKind kind);
};

enum class BoundCase { none, degree_below_n, degree_at_least_n };

struct BoundResult {
  double value;
  BoundTheorem theorem;
  int k;
  int j = -1;                               // decay / derivative-coefficient bounds
  int d = -1, n = -1, l = -1;               // truncation-error bounds
  BoundCase bound_case = BoundCase::none;   // d = n-l vs d = n+l
  int parity_s = -1;                        // s with k = 2s or k = 2s+1
};

/// |c_j| bound for j >= k+1 from V_k = cheb-weighted variation:
///   k = 2s:   h^(2s+1) 2V_k / (pi prod_{i=-s}^{s} (j+2i))
///   k = 2s+1: h^(2s+2) 2V_k / (pi prod_{i=-s}^{s+1} (j+2i-1))
/// with h the interval half-width.
BoundResult decay_bound_smooth(const BoundParams& p, int j);

/// |c_j| bound for j >= k+1 from V_k = total variation:
///   (2V_k/pi) ((b-a)/4)^k sum_{i=0}^{k} C(k,i) / ((j+i)(j+i-1)...(j+i-k)).
BoundResult decay_bound_bv(const BoundParams& p, int j);

/// |c_j^(k)| <= 2 V_k / (j pi) for j >= 1, V_k = total variation of f^(k).
BoundResult derivative_coeff_bound(const BoundParams& p, int j);

/// Rebuild c_j from order-p derivative coefficients:
///   ((b-a)/4)^p sum_{i=0}^{p} C(p,i) (-1)^i (j+2i-p)
///       / ((j+i)(j+i-1)...(j+i-p)) * c^(p)_{j+2i-p},
/// valid for j >= p+1 (j = p hits a zero denominator at i = 0).
double reconstruct_coefficient(int p_order, int j, const CoefficientTable& deriv_table,
                               const Interval& iv);

/// L1 bound on ||f - C_{d,n}[f]||_1 from the weighted-variation decay family;
/// requires n-1 >= k >= 1 and k <= d <= 2n-k-1.
BoundResult error_bound_majidian(const BoundParams& p, int d, int n);

/// L1 bound on ||f - C_{d,n}[f]||_1 from the total-variation decay family;
/// requires n >= k >= 1 and k <= d <= 2n-k-1.
BoundResult error_bound_xiang(const BoundParams& p, int d, int n);

}  // namespace chebbv
