#include "chebbv/variation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chebbv/cheb.hpp"
#include "chebbv/errors.hpp"
#include "chebbv/quadrature.hpp"

namespace chebbv {

namespace {

void validate_report(VariationReport& r) {
  double jumps = 0.0;
  for (const JumpContribution& j : r.jump_parts) {
    if (!(j.contribution >= 0.0) || !std::isfinite(j.contribution))
      throw std::runtime_error("variation: non-finite jump contribution at breakpoint " +
                               std::to_string(j.x));
    jumps += j.contribution;
  }
  if (!(r.smooth_part >= 0.0) || !std::isfinite(r.smooth_part))
    throw std::runtime_error("variation: non-finite smooth part");
  r.total = r.smooth_part + jumps;
}

}  // namespace

VariationReport cheb_weighted_variation(const FunctionSpec& f, int k, double tol) {
  if (k < 0) throw std::invalid_argument("cheb_weighted_variation: need k >= 0");
  const DerivativeResult d = f.derivative(k + 1);
  const Interval iv = f.interval();

  std::vector<double> theta_splits;
  for (double x : f.breakpoints()) theta_splits.push_back(std::acos(map_reference(iv, x)));

  const auto integrand = [&](double theta) {
    const double x = map_interval(iv, std::cos(theta));
    return std::abs(d.spec.evaluate_at(x));
  };
  QuadratureOptions opt;
  opt.abs_tol = tol;
  const QuadratureResult q =
      integrate_split(integrand, 0.0, std::numbers::pi, theta_splits, opt);

  VariationReport report{VariationKind::cheb_weighted, k, q.value, {}, 0.0};
  for (const JumpEntry& j : d.jumps) {
    const double t = map_reference(iv, j.x);
    const double s = std::sqrt(1.0 - t * t);
    if (!(s > 0.0))
      throw std::domain_error("cheb_weighted_variation: jump at interval endpoint x = " +
                              std::to_string(j.x) + " gives infinite weighted variation");
    report.jump_parts.push_back(JumpContribution{j.x, 2.0 * std::abs(j.jump) / (iv.width() * s)});
  }
  validate_report(report);
  return report;
}

VariationReport total_variation(const FunctionSpec& f, int k, double tol) {
  if (k < 0) throw std::invalid_argument("total_variation: need k >= 0");
  const DerivativeResult d = f.derivative(k + 1);
  const Interval iv = f.interval();

  const auto integrand = [&](double x) { return std::abs(d.spec.evaluate_at(x)); };
  QuadratureOptions opt;
  opt.abs_tol = tol;
  const QuadratureResult q = integrate_split(integrand, iv.a, iv.b, f.breakpoints(), opt);

  VariationReport report{VariationKind::total_variation, k, q.value, {}, 0.0};
  for (const JumpEntry& j : d.jumps)
    report.jump_parts.push_back(JumpContribution{j.x, std::abs(j.jump)});
  validate_report(report);
  return report;
}

}  // namespace chebbv
