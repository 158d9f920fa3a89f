#include "chebbv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stack>
#include <stdexcept>

#include "chebbv/accum.hpp"
#include "chebbv/errors.hpp"

namespace chebbv {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double k15;
  double g7;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
  }
  return Panel{resk * h, resg * h};
}

struct Segment {
  double a, b;
  int depth;
};

// Core loop over one contiguous segment; `total_width` scales the per-panel
// error budget so nested calls share one global tolerance.
QuadratureResult integrate_segment(const std::function<double(double)>& f, double a, double b,
                                   double total_width, const QuadratureOptions& opt,
                                   std::size_t& processed) {
  CompensatedSum value;
  double err_sum = 0.0;
  std::stack<Segment> work;
  work.push(Segment{a, b, 0});
  while (!work.empty()) {
    const Segment seg = work.top();
    work.pop();
    if (++processed > opt.max_intervals)
      throw ConvergenceError("integrate: exceeded the subdivision budget of " +
                                 std::to_string(opt.max_intervals) + " panels",
                             err_sum);
    const Panel p = evaluate_panel(f, seg.a, seg.b);
    if (!std::isfinite(p.k15))
      throw EvalError("integrate: non-finite integrand value in [" + std::to_string(seg.a) +
                      ", " + std::to_string(seg.b) + "]");
    const double err = std::abs(p.k15 - p.g7);
    const double budget = opt.abs_tol * (seg.b - seg.a) / total_width;
    if (err <= budget || seg.depth >= opt.max_depth) {
      value.add(p.k15);
      err_sum += err;
    } else {
      const double mid = 0.5 * (seg.a + seg.b);
      work.push(Segment{seg.a, mid, seg.depth + 1});
      work.push(Segment{mid, seg.b, seg.depth + 1});
    }
  }
  return QuadratureResult{value.value(), err_sum, processed};
}

void check_converged(const QuadratureResult& r, const QuadratureOptions& opt) {
  const double threshold = std::max(1000.0 * opt.abs_tol, 1e-9 * std::abs(r.value));
  if (!std::isfinite(r.value) || r.error_estimate > threshold)
    throw ConvergenceError("integrate: error estimate " + std::to_string(r.error_estimate) +
                               " did not meet the tolerance; the integral may be divergent",
                           r.error_estimate);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt) {
  if (!(a < b)) throw std::invalid_argument("integrate: need a < b");
  if (!(opt.abs_tol > 0.0)) throw std::invalid_argument("integrate: need abs_tol > 0");
  std::size_t processed = 0;
  QuadratureResult r = integrate_segment(f, a, b, b - a, opt, processed);
  check_converged(r, opt);
  return r;
}

QuadratureResult integrate_split(const std::function<double(double)>& f, double a, double b,
                                 std::vector<double> splits, const QuadratureOptions& opt) {
  if (!(a < b)) throw std::invalid_argument("integrate_split: need a < b");
  if (!(opt.abs_tol > 0.0)) throw std::invalid_argument("integrate_split: need abs_tol > 0");
  std::erase_if(splits, [&](double s) { return !(s > a && s < b); });
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

  std::vector<double> edges;
  edges.reserve(splits.size() + 2);
  edges.push_back(a);
  edges.insert(edges.end(), splits.begin(), splits.end());
  edges.push_back(b);

  std::size_t processed = 0;
  CompensatedSum value;
  double err_sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    QuadratureResult part = integrate_segment(f, edges[i], edges[i + 1], b - a, opt, processed);
    value.add(part.value);
    err_sum += part.error_estimate;
  }
  QuadratureResult r{value.value(), err_sum, processed};
  check_converged(r, opt);
  return r;
}

}  // namespace chebbv
