#include "chebbv/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebbv {

namespace {

constexpr double kPi = std::numbers::pi;

double pow_int(double base, int m) {
  double result = 1.0, p = base;
  for (unsigned u = static_cast<unsigned>(m); u != 0; u >>= 1) {
    if (u & 1u) result *= p;
    p *= p;
  }
  return result;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_kind(const BoundParams& p, VariationKind kind, const char* who) {
  if (p.variation_kind != kind)
    throw std::invalid_argument(
        std::string(who) + ": V_k must come from " +
        (kind == VariationKind::cheb_weighted ? "cheb_weighted_variation" : "total_variation"));
}

// 1 / prod_{i=-s}^{s-alpha} (eta + 2i + beta), evaluated left to right.
double pi_factor(int eta, int s, int alpha, int beta) {
  double prod = 1.0;
  for (int i = -s; i <= s - alpha; ++i) prod *= (eta + 2 * i + beta);
  return 1.0 / prod;
}

void check_finite_positive(double value, const char* who) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw std::runtime_error(std::string(who) + ": bound evaluated to a non-positive or "
                                                "non-finite value");
}

}  // namespace

BoundParams::BoundParams(Interval iv, int k_, double variation_, VariationKind kind)
    : interval(iv), k(k_), variation(variation_), variation_kind(kind) {
  if (k < 0) throw std::invalid_argument("BoundParams: need k >= 0");
  if (!(variation > 0.0) || !std::isfinite(variation))
    throw std::invalid_argument("BoundParams: need a finite positive variation value");
}

BoundResult decay_bound_smooth(const BoundParams& p, int j) {
  require_kind(p, VariationKind::cheb_weighted, "decay_bound_smooth");
  if (j < p.k + 1)
    throw std::invalid_argument("decay_bound_smooth: need j >= k+1, got j = " + std::to_string(j) +
                                ", k = " + std::to_string(p.k));
  const double h = p.interval.half_width();
  const int s = p.k / 2;
  double value;
  if (p.k % 2 == 0) {
    double prod = 1.0;
    for (int i = -s; i <= s; ++i) prod *= (j + 2 * i);
    value = pow_int(h, 2 * s + 1) * 2.0 * p.variation / (kPi * prod);
  } else {
    double prod = 1.0;
    for (int i = -s; i <= s + 1; ++i) prod *= (j + 2 * i - 1);
    value = pow_int(h, 2 * s + 2) * 2.0 * p.variation / (kPi * prod);
  }
  check_finite_positive(value, "decay_bound_smooth");
  BoundResult r{value, BoundTheorem::decay_smooth, p.k};
  r.j = j;
  r.parity_s = s;
  return r;
}

BoundResult decay_bound_bv(const BoundParams& p, int j) {
  require_kind(p, VariationKind::total_variation, "decay_bound_bv");
  if (j < p.k + 1)
    throw std::invalid_argument("decay_bound_bv: need j >= k+1, got j = " + std::to_string(j) +
                                ", k = " + std::to_string(p.k));
  double sum = 0.0;
  for (int i = 0; i <= p.k; ++i) {
    double prod = 1.0;
    for (int m = 0; m <= p.k; ++m) prod *= (j + i - m);
    sum += binomial(p.k, i) / prod;
  }
  const double value = (2.0 * p.variation / kPi) * pow_int(p.interval.width() / 4.0, p.k) * sum;
  check_finite_positive(value, "decay_bound_bv");
  BoundResult r{value, BoundTheorem::decay_bv, p.k};
  r.j = j;
  return r;
}

BoundResult derivative_coeff_bound(const BoundParams& p, int j) {
  require_kind(p, VariationKind::total_variation, "derivative_coeff_bound");
  if (j < 1) throw std::invalid_argument("derivative_coeff_bound: need j >= 1");
  const double value = 2.0 * p.variation / (j * kPi);
  check_finite_positive(value, "derivative_coeff_bound");
  BoundResult r{value, BoundTheorem::deriv_coeff, p.k};
  r.j = j;
  return r;
}

double reconstruct_coefficient(int p_order, int j, const CoefficientTable& deriv_table,
                               const Interval& iv) {
  if (p_order < 1) throw std::invalid_argument("reconstruct_coefficient: need p >= 1");
  if (j < p_order + 1)
    throw std::invalid_argument("reconstruct_coefficient: need j >= p+1 (j = p makes the i = 0 "
                                "denominator vanish), got j = " +
                                std::to_string(j) + ", p = " + std::to_string(p_order));
  double sum = 0.0;
  for (int i = 0; i <= p_order; ++i) {
    double prod = 1.0;
    for (int m = 0; m <= p_order; ++m) prod *= (j + i - m);
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    sum += binomial(p_order, i) * sign * (j + 2 * i - p_order) / prod *
           deriv_table.at(j + 2 * i - p_order);
  }
  return pow_int(iv.width() / 4.0, p_order) * sum;
}

BoundResult error_bound_majidian(const BoundParams& p, int d, int n) {
  require_kind(p, VariationKind::cheb_weighted, "error_bound_majidian");
  if (p.k < 1) throw std::invalid_argument("error_bound_majidian: requires k >= 1");
  if (n - 1 < p.k)
    throw std::invalid_argument("error_bound_majidian: requires n-1 >= k, got n = " +
                                std::to_string(n) + ", k = " + std::to_string(p.k));
  if (d < p.k)
    throw std::invalid_argument("error_bound_majidian: requires d >= k, got d = " +
                                std::to_string(d));
  if (d > 2 * n - p.k - 1)
    throw std::invalid_argument("error_bound_majidian: requires d <= 2n-k-1, got d = " +
                                std::to_string(d) + ", 2n-k-1 = " + std::to_string(2 * n - p.k - 1));

  const double h = p.interval.half_width();
  const int s = p.k / 2;
  BoundResult r{0.0, BoundTheorem::err_majidian, p.k};
  r.d = d;
  r.n = n;
  r.parity_s = s;

  double body, prefactor;
  int eta;
  if (d < n) {
    r.l = n - d;
    r.bound_case = BoundCase::degree_below_n;
    eta = n - r.l;
    prefactor = 4.0;
    body = (p.k % 2 == 0) ? pi_factor(eta, s, 1, 1) + pi_factor(eta, s, 1, 2)
                          : pi_factor(eta, s, 0, 0) + pi_factor(eta, s, 0, 1);
  } else {
    r.l = d - n;
    r.bound_case = BoundCase::degree_at_least_n;
    eta = n - r.l;
    prefactor = 6.0;
    body = (p.k % 2 == 0) ? pi_factor(eta, s, 1, 0) + pi_factor(eta, s, 1, 1)
                          : pi_factor(eta, s, 0, -1) + pi_factor(eta, s, 0, 0);
  }
  r.value = pow_int(h, p.k + 2) * prefactor * p.variation / (p.k * kPi) * body;
  check_finite_positive(r.value, "error_bound_majidian");
  return r;
}

BoundResult error_bound_xiang(const BoundParams& p, int d, int n) {
  require_kind(p, VariationKind::total_variation, "error_bound_xiang");
  if (p.k < 1) throw std::invalid_argument("error_bound_xiang: requires k >= 1");
  if (n < p.k)
    throw std::invalid_argument("error_bound_xiang: requires n >= k, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(p.k));
  if (d < p.k)
    throw std::invalid_argument("error_bound_xiang: requires d >= k, got d = " + std::to_string(d));
  if (d > 2 * n - p.k - 1)
    throw std::invalid_argument("error_bound_xiang: requires d <= 2n-k-1, got d = " +
                                std::to_string(d) + ", 2n-k-1 = " + std::to_string(2 * n - p.k - 1));

  BoundResult r{0.0, BoundTheorem::err_xiang, p.k};
  r.d = d;
  r.n = n;

  double sum = 0.0, prefactor;
  if (d < n) {
    r.l = n - d;
    r.bound_case = BoundCase::degree_below_n;
    const int eta = n - r.l;
    prefactor = 4.0;
    for (int j = 0; j <= p.k; ++j) {
      double prod = 1.0;
      for (int m = 0; m <= p.k - 1; ++m) prod *= (eta + j - m);
      sum += binomial(p.k, j) / prod;
    }
  } else {
    r.l = d - n;
    r.bound_case = BoundCase::degree_at_least_n;
    const int eta = n - r.l;
    prefactor = 6.0;
    for (int j = 0; j <= p.k; ++j) {
      double prod = 1.0;
      for (int m = 1; m <= p.k; ++m) prod *= (eta + j - m);
      sum += binomial(p.k, j) / prod;
    }
  }
  r.value = prefactor * p.variation * pow_int(p.interval.width(), p.k + 1) /
            (pow_int(4.0, p.k) * p.k * kPi) * sum;
  check_finite_positive(r.value, "error_bound_xiang");
  return r;
}

}  // namespace chebbv
