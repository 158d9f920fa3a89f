#pragma once

#include <vector>

#include "chebbv/funcspec.hpp"

namespace chebbv {

enum class VariationKind { cheb_weighted, total_variation };

struct JumpContribution {
  double x;             // breakpoint
  double contribution;  // nonnegative share of the total
};

/// Decomposition of a variation functional of f^(k): the integral over the
/// smooth parts of f^(k+1) plus one term per breakpoint jump of f^(k).
struct VariationReport {
  VariationKind kind;
  int k;
  double smooth_part;
  std::vector<JumpContribution> jump_parts;
  double total;
};

/// V_k in the Chebyshev-weighted sense:
///   int_0^pi |f^(k+1)(G(cos theta))| dtheta
/// split at the theta-images of the breakpoints, plus
///   2 |J_i| / ((b-a) sqrt(1 - t_i^2))
/// per breakpoint jump J_i of f^(k), where t_i is the breakpoint in reference
/// coordinates.
VariationReport cheb_weighted_variation(const FunctionSpec& f, int k, double tol = 1e-10);

/// V_k as the plain total variation of f^(k):
///   int_a^b |f^(k+1)(x)| dx  (split at the breakpoints)  +  sum |J_i|.
VariationReport total_variation(const FunctionSpec& f, int k, double tol = 1e-10);

}  // namespace chebbv
