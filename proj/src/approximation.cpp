#include "chebbv/approximation.hpp"

#include <cmath>
#include <stdexcept>

#include "chebbv/coefficients.hpp"
#include "chebbv/errors.hpp"
#include "chebbv/quadrature.hpp"

namespace chebbv {

ChebSeries build_approximation(const FunctionSpec& f, int d, int n) {
  if (d < 0 || d >= 2 * n)
    throw std::invalid_argument("build_approximation: need 0 <= d < 2n, got d = " +
                                std::to_string(d) + ", n = " + std::to_string(n));
  CoefficientTable table = quadrature_coefficients(f, n, d);
  return ChebSeries(f.interval(), std::move(table.values));
}

double l1_error(const FunctionSpec& f, const ChebSeries& series, double tol) {
  if (!(series.interval == f.interval()))
    throw std::invalid_argument("l1_error: series interval differs from the function domain");
  const auto integrand = [&](double x) { return std::abs(f.evaluate_at(x) - series(x)); };
  QuadratureOptions opt;
  opt.abs_tol = tol;
  return integrate_split(integrand, f.interval().a, f.interval().b, f.breakpoints(), opt).value;
}

namespace {

ApproximationRun run_with_params(const FunctionSpec& f, int d, int n, TheoremSelector sel,
                                 const BoundParams* weighted, const BoundParams* total,
                                 double tol) {
  ApproximationRun run{d, n, build_approximation(f, d, n), std::nullopt, {}};
  run.measured_l1 = l1_error(f, run.series, tol);
  if (sel != TheoremSelector::xiang) run.bounds.push_back(error_bound_majidian(*weighted, d, n));
  if (sel != TheoremSelector::majidian) run.bounds.push_back(error_bound_xiang(*total, d, n));
  return run;
}

}  // namespace

ApproximationRun run_approximation(const FunctionSpec& f, int k, int d, int n,
                                   TheoremSelector sel, double tol) {
  std::optional<BoundParams> weighted, total;
  if (sel != TheoremSelector::xiang)
    weighted.emplace(f.interval(), k, cheb_weighted_variation(f, k, tol).total,
                     VariationKind::cheb_weighted);
  if (sel != TheoremSelector::majidian)
    total.emplace(f.interval(), k, total_variation(f, k, tol).total,
                  VariationKind::total_variation);
  return run_with_params(f, d, n, sel, weighted ? &*weighted : nullptr,
                         total ? &*total : nullptr, tol);
}

std::vector<ComparisonRow> comparison_table(const FunctionSpec& f, int k,
                                            const std::vector<std::pair<int, int>>& dn_pairs,
                                            TheoremSelector sel, double tol) {
  std::optional<BoundParams> weighted, total;
  if (sel != TheoremSelector::xiang)
    weighted.emplace(f.interval(), k, cheb_weighted_variation(f, k, tol).total,
                     VariationKind::cheb_weighted);
  if (sel != TheoremSelector::majidian)
    total.emplace(f.interval(), k, total_variation(f, k, tol).total,
                  VariationKind::total_variation);

  std::vector<ComparisonRow> rows;
  rows.reserve(dn_pairs.size());
  for (const auto& [d, n] : dn_pairs) {
    ComparisonRow row{d, n, std::nullopt, std::nullopt, std::nullopt, {}};
    try {
      ApproximationRun run = run_with_params(f, d, n, sel, weighted ? &*weighted : nullptr,
                                             total ? &*total : nullptr, tol);
      row.measured_l1 = run.measured_l1;
      for (const BoundResult& b : run.bounds) {
        if (b.theorem == BoundTheorem::err_majidian) row.bound_majidian = b.value;
        if (b.theorem == BoundTheorem::err_xiang) row.bound_xiang = b.value;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace chebbv
