// Acceptance suite: runs every headline requirement end to end and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "chebbv/approximation.hpp"
#include "chebbv/bounds.hpp"
#include "chebbv/builtin.hpp"
#include "chebbv/coefficients.hpp"
#include "chebbv/funcspec.hpp"
#include "chebbv/variation.hpp"

using namespace chebbv;

namespace {

struct Failure {
  std::string msg;
};

void check(bool cond, const std::string& msg) {
  if (!cond) throw Failure{msg};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double ulp(double x) { return std::nextafter(std::abs(x), 1e300) - std::abs(x); }

constexpr double kV1Weighted = 4.6275987284684357;  // 1 + 2 pi / sqrt(3)
constexpr double kV1Total = 2.7777777777777778;     // 25/9

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CHEBBV_CLI_PATH) + " " + args + " 2>/dev/null";
  CmdResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  check(pipe != nullptr, "popen failed");
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::vector<std::vector<double>> csv_rows(const std::string& text, const std::string& header) {
  std::istringstream in(text);
  std::string line;
  check(static_cast<bool>(std::getline(in, line)), "empty CSV");
  check(line == header, "CSV header mismatch: got '" + line + "'");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(std::strtod(field.c_str(), nullptr));
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

int main() {
  int failures = 0;
  const auto run = [&](int id, const char* name, double time_limit_s,
                       const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      detail = body();
    } catch (const Failure& f) {
      pass = false;
      detail = f.msg;
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pass && time_limit_s > 0.0 && secs > time_limit_s) {
      pass = false;
      detail = "runtime " + fmt(secs) + " s exceeded the " + fmt(time_limit_s) + " s limit";
    }
    std::printf("[%2d] %s  %-52s %7.3f s  %s\n", id, pass ? "PASS" : "FAIL", name, secs,
                detail.c_str());
    if (!pass) ++failures;
  };

  const FunctionSpec g = builtin_example("example51");

  run(1, "weighted variation V_1 = 1 + 2pi/sqrt(3)", 1.0, [&] {
    const VariationReport r = cheb_weighted_variation(g, 1, 1e-12);
    const double diff = std::abs(r.total - kV1Weighted);
    check(diff <= 1e-6, "V_1 = " + fmt(r.total) + ", off by " + fmt(diff));
    return "V_1 = " + fmt(r.total) + " (|diff| = " + fmt(diff) + " <= 1e-6)";
  });

  run(2, "total variation of g' = 25/9", 1.0, [&] {
    const VariationReport r = total_variation(g, 1, 1e-12);
    const double diff = std::abs(r.total - kV1Total);
    check(diff <= 1e-6, "Var = " + fmt(r.total) + ", off by " + fmt(diff));
    return "Var = " + fmt(r.total) + " (|diff| = " + fmt(diff) + " <= 1e-6)";
  });

  run(3, "decay-bound chain |c_j| <= BV bound < smooth bound", 10.0, [&] {
    const CoefficientTable ref = reference_coefficients(g, 30, 1e-10);
    const BoundParams pw(g.interval(), 1, cheb_weighted_variation(g, 1, 1e-12).total,
                         VariationKind::cheb_weighted);
    const BoundParams pt(g.interval(), 1, total_variation(g, 1, 1e-12).total,
                         VariationKind::total_variation);
    for (int j = 2; j <= 30; ++j) {
      const double cj = std::abs(ref.at(j));
      const double b34 = decay_bound_bv(pt, j).value;
      const double b31 = decay_bound_smooth(pw, j).value;
      check(cj <= b34, "j = " + std::to_string(j) + ": |c_j| = " + fmt(cj) + " > " + fmt(b34));
      check(b34 < b31, "j = " + std::to_string(j) + ": BV bound " + fmt(b34) +
                           " not strictly below smooth bound " + fmt(b31));
    }
    return std::string("chain holds for j = 2..30, outer inequality strict");
  });

  run(4, "error-bound family at n=200: fixed ratio, monotone", 1.0, [&] {
    const BoundParams pw(g.interval(), 1, cheb_weighted_variation(g, 1, 1e-12).total,
                         VariationKind::cheb_weighted);
    const BoundParams pt(g.interval(), 1, total_variation(g, 1, 1e-12).total,
                         VariationKind::total_variation);
    const double expected = (25.0 / 9.0) / (1.0 + 2.0 * std::acos(-1.0) / std::sqrt(3.0));
    double prev41 = 0.0, prev43 = 0.0, worst = 0.0;
    for (int l = 2; l <= 128; l *= 2) {
      const double b41 = error_bound_majidian(pw, 200 - l, 200).value;
      const double b43 = error_bound_xiang(pt, 200 - l, 200).value;
      const double dev = std::abs(b43 / b41 - expected);
      worst = std::max(worst, dev);
      check(dev <= 1e-12,
            "l = " + std::to_string(l) + ": ratio deviates by " + fmt(dev) + " > 1e-12");
      if (l > 2) {
        check(prev41 < b41 && prev43 < b43,
              "bounds must shrink as l shrinks (violated between l = " + std::to_string(l / 2) +
                  " and " + std::to_string(l) + ")");
      }
      prev41 = b41;
      prev43 = b43;
    }
    return "ratio = (25/9)/(1+2pi/sqrt3) to " + fmt(worst) + "; both bounds shrink with l";
  });

  run(5, "two-case identity T_{n-l-1,n} = (2/3) T_{n+l,n}", 1.0, [&] {
    const BoundParams pw(g.interval(), 1, cheb_weighted_variation(g, 1, 1e-12).total,
                         VariationKind::cheb_weighted);
    for (int l : {0, 1, 2, 5, 50}) {
      const double lhs = error_bound_majidian(pw, 200 - l - 1, 200).value;
      const double rhs = error_bound_majidian(pw, 200 + l, 200).value;
      const double diff = std::abs(lhs - 2.0 / 3.0 * rhs);
      check(diff <= 4.0 * ulp(lhs),
            "l = " + std::to_string(l) + ": |lhs - (2/3) rhs| = " + fmt(diff) + " > 4 ulp");
    }
    return std::string("identity holds to 4 ulp at l = 0, 1, 2, 5, 50");
  });

  run(6, "measured L1 error below both certified bounds", 30.0, [&] {
    const BoundParams pw(g.interval(), 1, cheb_weighted_variation(g, 1, 1e-12).total,
                         VariationKind::cheb_weighted);
    const BoundParams pt(g.interval(), 1, total_variation(g, 1, 1e-12).total,
                         VariationKind::total_variation);
    std::string detail;
    for (const auto& [d, n] :
         std::vector<std::pair<int, int>>{{198, 200}, {150, 200}, {30, 50}, {9, 10}}) {
      const ChebSeries s = build_approximation(g, d, n);
      const double measured = l1_error(g, s, 1e-8);
      const double b41 = error_bound_majidian(pw, d, n).value;
      const double b43 = error_bound_xiang(pt, d, n).value;
      check(measured <= b43, "(d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                                 "): measured " + fmt(measured) + " > " + fmt(b43));
      check(measured <= b41, "(d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                                 "): measured " + fmt(measured) + " > " + fmt(b41));
      if (!detail.empty()) detail += ", ";
      detail += "(" + std::to_string(d) + "," + std::to_string(n) + "): " + fmt(measured) +
                " <= " + fmt(b43);
    }
    return detail;
  });

  run(7, "aliasing identity: exact T_10 case and worked example", 10.0, [&] {
    const FunctionSpec t10 =
        FunctionSpec::parse("on [-1,1]: 2*(t*(16*t^4-20*t^2+5))^2-1; k=5");
    const CoefficientTable ref10 = reference_coefficients(t10, 21, 1e-12);
    const double c05 = quadrature_coefficients(t10, 5, 0).at(0);
    const double diff10 = c05 - ref10.at(0);
    check(std::abs(diff10 + 2.0) <= 1e-12,
          "c_{0,5} - c_0 = " + fmt(diff10) + ", expected -2 within 1e-12");
    check(std::abs(aliasing_residual(ref10, 0, 5, 1) + 2.0) <= 1e-12,
          "one-term residual for T_10 is not -2");

    const CoefficientTable refg = reference_coefficients(g, 125, 1e-10);
    const double measured = quadrature_coefficients(g, 20, 5).at(5) - refg.at(5);
    const double residual = aliasing_residual(refg, 5, 20, 3);
    const double mismatch = std::abs(measured - residual);
    check(mismatch <= 1e-6, "three-term residual off by " + fmt(mismatch) + " > 1e-6");
    return "T_10 case exact; worked-example residual off by " + fmt(mismatch) + " <= 1e-6";
  });

  run(8, "quadrature exactness: T_3 pattern at n = 10", 1.0, [&] {
    const FunctionSpec t3 = FunctionSpec::parse("on [-1,1]: 4*t^3-3*t; k=5");
    const CoefficientTable c = quadrature_coefficients(t3, 10, 16);
    double worst = 0.0;
    for (int k = 0; k <= 16; ++k) {
      const double expected = (k == 3) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(c.at(k) - expected));
    }
    check(worst <= 1e-12, "largest deviation " + fmt(worst) + " > 1e-12");
    return "largest deviation from the exact pattern: " + fmt(worst);
  });

  run(9, "integration-by-parts recurrence and reconstruction", 10.0, [&] {
    const FunctionSpec f = FunctionSpec::parse("on [0,2]: exp(t); k=8");
    const CoefficientTable c = reference_coefficients(f, 11, 1e-12);
    const CoefficientTable c1 = derivative_coefficients(f, 1, 11, 1e-12);
    double worst_ibp = 0.0;
    for (int j = 1; j <= 10; ++j)
      worst_ibp = std::max(
          worst_ibp, std::abs(c.at(j) - 2.0 / (4.0 * j) * (c1.at(j - 1) - c1.at(j + 1))));
    check(worst_ibp <= 1e-8, "recurrence residual " + fmt(worst_ibp) + " > 1e-8");

    const CoefficientTable refg = reference_coefficients(g, 10, 1e-10);
    const CoefficientTable g1 = derivative_coefficients(g, 1, 11, 1e-7);
    double worst_rec = 0.0;
    for (int j = 2; j <= 10; ++j)
      worst_rec = std::max(
          worst_rec, std::abs(reconstruct_coefficient(1, j, g1, g.interval()) - refg.at(j)));
    check(worst_rec <= 1e-6, "reconstruction off by " + fmt(worst_rec) + " > 1e-6");
    return "recurrence residual " + fmt(worst_ibp) + "; reconstruction off by " + fmt(worst_rec);
  });

  run(10, "figure1 CSV output carries the certified orderings", 15.0, [&] {
    const CmdResult pa = run_cli("figure1 --panel a");
    check(pa.status == 0, "panel a exited with status " + std::to_string(pa.status));
    const auto rows_a = csv_rows(pa.out, "j,abs_cj_reference,bound_thm31,bound_thm34");
    check(rows_a.size() == 29, "panel a: expected 29 rows, got " + std::to_string(rows_a.size()));
    for (const auto& row : rows_a) {
      check(row.size() == 4, "panel a: malformed row");
      check(row[1] <= row[3] && row[3] < row[2],
            "panel a: ordering violated at j = " + fmt(row[0]));
    }

    const CmdResult pb = run_cli("figure1 --panel b");
    check(pb.status == 0, "panel b exited with status " + std::to_string(pb.status));
    const auto rows_b = csv_rows(pb.out, "l,d,bound_thm41,bound_thm43");
    check(rows_b.size() == 7, "panel b: expected 7 rows, got " + std::to_string(rows_b.size()));
    const double expected = (25.0 / 9.0) / (1.0 + 2.0 * std::acos(-1.0) / std::sqrt(3.0));
    double prev41 = 0.0, prev43 = 0.0;
    for (std::size_t i = 0; i < rows_b.size(); ++i) {
      const auto& row = rows_b[i];
      check(row.size() == 4, "panel b: malformed row");
      check(std::abs(row[3] / row[2] - expected) <= 1e-12,
            "panel b: ratio deviates at l = " + fmt(row[0]));
      if (i > 0)
        check(row[2] > prev41 && row[3] > prev43, "panel b: bounds not shrinking with l");
      prev41 = row[2];
      prev43 = row[3];
    }
    return std::string("panel a: 29 rows ordered; panel b: 7 rows, fixed ratio, monotone");
  });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
