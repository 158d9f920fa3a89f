#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chebbv/approximation.hpp"
#include "chebbv/bounds.hpp"
#include "chebbv/builtin.hpp"
#include "chebbv/cheb.hpp"
#include "chebbv/coefficients.hpp"
#include "chebbv/errors.hpp"
#include "chebbv/funcspec.hpp"
#include "chebbv/variation.hpp"

namespace {

using namespace chebbv;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Function selection shared by most subcommands.
struct FunctionOpts {
  std::string example;
  std::string text;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* ex = cmd->add_option("--example", example, "Built-in function name (e.g. example51)");
    auto* fn = cmd->add_option("--function", text, "Function description text");
    auto* ff = cmd->add_option("--function-file", file, "File containing a function description");
    ex->excludes(fn)->excludes(ff);
    fn->excludes(ff);
  }

  FunctionSpec resolve() const {
    if (!text.empty()) return FunctionSpec::parse(text);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open function file '" + file + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      return FunctionSpec::parse(ss.str());
    }
    return builtin_example(example.empty() ? "example51" : example);
  }
};

struct OutputOpt {
  std::string path = "-";

  void attach(CLI::App* cmd) {
    cmd->add_option("--output,-o", path, "Output path for the CSV ('-' = stdout)");
  }

  // The CSV is assembled in full first, so a failure never leaves a partial
  // file or a truncated stream behind.
  template <typename Fn>
  void write(Fn&& fn) const {
    std::ostringstream buffer;
    fn(buffer);
    if (path == "-") {
      std::cout << buffer.str();
      std::cout.flush();
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << buffer.str();
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
  }
};

TheoremSelector parse_selector(const std::string& s) {
  if (s == "majidian") return TheoremSelector::majidian;
  if (s == "xiang") return TheoremSelector::xiang;
  if (s == "both") return TheoremSelector::both;
  throw std::invalid_argument("theorem selector must be majidian, xiang or both");
}

int effective_k(const FunctionSpec& f, int k_flag) {
  return k_flag >= 0 ? k_flag : f.smoothness();
}

void run_coeffs(const FunctionOpts& fo, const OutputOpt& oo, const std::string& mode, int n,
                int j_max, double tol) {
  const FunctionSpec f = fo.resolve();
  CoefficientTable table = [&] {
    if (mode == "reference") return reference_coefficients(f, j_max, tol);
    if (mode == "quadrature") {
      if (n < 1) throw std::invalid_argument("quadrature mode requires --n >= 1");
      return quadrature_coefficients(f, n, j_max);
    }
    throw std::invalid_argument("--mode must be reference or quadrature");
  }();
  oo.write([&](std::ostream& out) {
    out << (table.n_quadrature > 0 ? "j,c_j_n\n" : "j,c_j\n");
    for (int j = 0; j <= table.max_index(); ++j)
      out << j << ',' << fmt17(table.at(j)) << '\n';
  });
}

void run_variation(const FunctionOpts& fo, const OutputOpt& oo, int k_flag,
                   const std::string& kind, double tol) {
  const FunctionSpec f = fo.resolve();
  const int k = effective_k(f, k_flag);
  std::vector<VariationReport> reports;
  if (kind == "weighted" || kind == "both") reports.push_back(cheb_weighted_variation(f, k, tol));
  if (kind == "total" || kind == "both") reports.push_back(total_variation(f, k, tol));
  if (reports.empty())
    throw std::invalid_argument("--kind must be weighted, total or both");
  oo.write([&](std::ostream& out) {
    out << "kind,k,smooth_part,jump_total,total\n";
    for (const VariationReport& r : reports) {
      double jump_total = 0.0;
      for (const JumpContribution& j : r.jump_parts) jump_total += j.contribution;
      out << (r.kind == VariationKind::cheb_weighted ? "cheb_weighted" : "total_variation") << ','
          << r.k << ',' << fmt17(r.smooth_part) << ',' << fmt17(jump_total) << ','
          << fmt17(r.total) << '\n';
    }
  });
}

void run_decay(const FunctionOpts& fo, const OutputOpt& oo, int k_flag, const std::string& theorem,
               int j_from, int j_to, double tol) {
  const FunctionSpec f = fo.resolve();
  const int k = effective_k(f, k_flag);
  const TheoremSelector sel = parse_selector(theorem);
  if (j_from > j_to) throw std::invalid_argument("--j-from must not exceed --j-to");

  std::optional<BoundParams> weighted, total;
  if (sel != TheoremSelector::xiang)
    weighted.emplace(f.interval(), k, cheb_weighted_variation(f, k, tol).total,
                     VariationKind::cheb_weighted);
  if (sel != TheoremSelector::majidian)
    total.emplace(f.interval(), k, total_variation(f, k, tol).total,
                  VariationKind::total_variation);

  oo.write([&](std::ostream& out) {
    out << "j";
    if (weighted) out << ",bound_thm31";
    if (total) out << ",bound_thm34";
    out << '\n';
    for (int j = j_from; j <= j_to; ++j) {
      out << j;
      if (weighted) out << ',' << fmt17(decay_bound_smooth(*weighted, j).value);
      if (total) out << ',' << fmt17(decay_bound_bv(*total, j).value);
      out << '\n';
    }
  });
}

std::vector<int> default_l_list() { return {2, 4, 8, 16, 32, 64, 128}; }

void run_errbound(const FunctionOpts& fo, const OutputOpt& oo, int k_flag,
                  const std::string& theorem, int n, std::vector<int> d_list,
                  const std::vector<int>& l_list, double tol) {
  const FunctionSpec f = fo.resolve();
  const int k = effective_k(f, k_flag);
  const TheoremSelector sel = parse_selector(theorem);
  if (d_list.empty()) {
    const std::vector<int>& ls = l_list.empty() ? default_l_list() : l_list;
    for (int l : ls) d_list.push_back(n - l);
  } else if (!l_list.empty()) {
    throw std::invalid_argument("give either --d or --l, not both");
  }

  std::optional<BoundParams> weighted, total;
  if (sel != TheoremSelector::xiang)
    weighted.emplace(f.interval(), k, cheb_weighted_variation(f, k, tol).total,
                     VariationKind::cheb_weighted);
  if (sel != TheoremSelector::majidian)
    total.emplace(f.interval(), k, total_variation(f, k, tol).total,
                  VariationKind::total_variation);

  oo.write([&](std::ostream& out) {
    out << "l,d,n";
    if (weighted) out << ",bound_thm41";
    if (total) out << ",bound_thm43";
    out << '\n';
    for (int d : d_list) {
      out << std::abs(n - d) << ',' << d << ',' << n;
      if (weighted) out << ',' << fmt17(error_bound_majidian(*weighted, d, n).value);
      if (total) out << ',' << fmt17(error_bound_xiang(*total, d, n).value);
      out << '\n';
    }
  });
}

void run_approx(const FunctionOpts& fo, const OutputOpt& oo, int k_flag,
                const std::string& theorem, int n, const std::vector<int>& d_list, double tol) {
  const FunctionSpec f = fo.resolve();
  const int k = effective_k(f, k_flag);
  const TheoremSelector sel = parse_selector(theorem);
  if (d_list.empty()) throw std::invalid_argument("approx requires at least one --d value");
  std::vector<std::pair<int, int>> pairs;
  for (int d : d_list) pairs.emplace_back(d, n);
  const std::vector<ComparisonRow> rows = comparison_table(f, k, pairs, sel, tol);
  oo.write([&](std::ostream& out) {
    out << "d,n,measured_l1,bound_thm41,bound_thm43,error\n";
    for (const ComparisonRow& r : rows) {
      out << r.d << ',' << r.n << ',';
      if (r.measured_l1) out << fmt17(*r.measured_l1);
      out << ',';
      if (r.bound_majidian) out << fmt17(*r.bound_majidian);
      out << ',';
      if (r.bound_xiang) out << fmt17(*r.bound_xiang);
      out << ',';
      if (!r.error.empty()) {
        std::string quoted = r.error;
        for (std::size_t pos = 0; (pos = quoted.find('"', pos)) != std::string::npos; pos += 2)
          quoted.replace(pos, 1, "\"\"");
        out << '"' << quoted << '"';
      }
      out << '\n';
    }
  });
}

void run_figure1(const OutputOpt& oo, const std::string& panel, int n, int j_from, int j_to,
                 const std::vector<int>& l_list) {
  const FunctionSpec g = builtin_example("example51");
  const int k = 1;
  // Tight tolerance so the bound columns are limited by the formulas, not by
  // the variation quadrature.
  const double vtol = 1e-12;
  const BoundParams weighted(g.interval(), k, cheb_weighted_variation(g, k, vtol).total,
                             VariationKind::cheb_weighted);
  const BoundParams total(g.interval(), k, total_variation(g, k, vtol).total,
                          VariationKind::total_variation);

  if (panel == "a") {
    const CoefficientTable ref = reference_coefficients(g, j_to, 1e-10);
    oo.write([&](std::ostream& out) {
      out << "j,abs_cj_reference,bound_thm31,bound_thm34\n";
      for (int j = j_from; j <= j_to; ++j)
        out << j << ',' << fmt17(std::abs(ref.at(j))) << ','
            << fmt17(decay_bound_smooth(weighted, j).value) << ','
            << fmt17(decay_bound_bv(total, j).value) << '\n';
    });
  } else if (panel == "b") {
    const std::vector<int>& ls = l_list.empty() ? default_l_list() : l_list;
    oo.write([&](std::ostream& out) {
      out << "l,d,bound_thm41,bound_thm43\n";
      for (int l : ls) {
        const int d = n - l;
        out << l << ',' << d << ',' << fmt17(error_bound_majidian(weighted, d, n).value) << ','
            << fmt17(error_bound_xiang(total, d, n).value) << '\n';
      }
    });
  } else {
    throw std::invalid_argument("--panel must be a or b");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chebbv: truncated Chebyshev series approximation of piecewise-smooth functions of\n"
      "bounded variation on [a,b], with Gauss-Chebyshev coefficient computation and\n"
      "certified coefficient-decay and L1 truncation-error bounds.\n\n"
      "Function grammar (whitespace-insensitive):\n"
      "  on [a,b]: piece [a,x1): <expr>; piece [x1,b]: <expr>; k=<int>\n"
      "  on [a,b]: <expr>; k=<int>\n"
      "Expressions: numbers, pi, e, variable t (or x), + - * / ^<int>, unary minus,\n"
      "sin cos exp log sqrt abs. k declares that f, ..., f^(k-1) are absolutely\n"
      "continuous; f^(k) may jump at the declared breakpoints.\n"};
  app.require_subcommand(1);

  FunctionOpts fo_coeffs, fo_variation, fo_decay, fo_errbound, fo_approx;
  OutputOpt oo_coeffs, oo_variation, oo_decay, oo_errbound, oo_approx, oo_figure;

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "Chebyshev coefficients (CSV: j,c_j)");
  std::string coeffs_mode = "reference";
  int coeffs_n = 0, coeffs_jmax = 64;
  double coeffs_tol = 1e-10;
  fo_coeffs.attach(coeffs);
  oo_coeffs.attach(coeffs);
  coeffs->add_option("--mode", coeffs_mode, "reference (stabilized) or quadrature (fixed n)");
  coeffs->add_option("--n", coeffs_n, "Quadrature point count (quadrature mode)");
  coeffs->add_option("--j-max", coeffs_jmax, "Highest coefficient index (default 64)");
  coeffs->add_option("--tol", coeffs_tol, "Stabilization tolerance (default 1e-10)");

  // variation
  auto* variation =
      app.add_subcommand("variation", "Variation functionals V_k (CSV: kind,k,...,total)");
  int variation_k = -1;
  std::string variation_kind = "both";
  double variation_tol = 1e-10;
  fo_variation.attach(variation);
  oo_variation.attach(variation);
  variation->add_option("--k", variation_k, "Regularity order (default: declared k)");
  variation->add_option("--kind", variation_kind, "weighted, total or both (default both)");
  variation->add_option("--tol", variation_tol, "Quadrature tolerance (default 1e-10)");

  // decay
  auto* decay = app.add_subcommand("decay", "Coefficient decay bounds (CSV: j,bound...)");
  int decay_k = -1, decay_from = 2, decay_to = 30;
  std::string decay_theorem = "both";
  double decay_tol = 1e-10;
  fo_decay.attach(decay);
  oo_decay.attach(decay);
  decay->add_option("--k", decay_k, "Regularity order (default: declared k)");
  decay->add_option("--theorem", decay_theorem, "majidian, xiang or both (default both)");
  decay->add_option("--j-from", decay_from, "First index (default 2)");
  decay->add_option("--j-to", decay_to, "Last index (default 30)");
  decay->add_option("--tol", decay_tol, "Variation quadrature tolerance (default 1e-10)");

  // errbound
  auto* errbound =
      app.add_subcommand("errbound", "L1 truncation-error bounds (CSV: l,d,n,bound...)");
  int errbound_k = -1, errbound_n = 200;
  std::string errbound_theorem = "both";
  std::vector<int> errbound_d, errbound_l;
  double errbound_tol = 1e-10;
  fo_errbound.attach(errbound);
  oo_errbound.attach(errbound);
  errbound->add_option("--k", errbound_k, "Regularity order (default: declared k)");
  errbound->add_option("--theorem", errbound_theorem, "majidian, xiang or both (default both)");
  errbound->add_option("--n", errbound_n, "Quadrature point count (default 200)");
  errbound->add_option("--d", errbound_d, "Truncation degrees");
  errbound->add_option("--l", errbound_l, "Offsets l giving d = n-l (default 2,4,...,128)");
  errbound->add_option("--tol", errbound_tol, "Variation quadrature tolerance (default 1e-10)");

  // approx
  auto* approx = app.add_subcommand(
      "approx", "Build C_{d,n}, measure the L1 error, attach bounds (CSV per (d,n))");
  int approx_k = -1, approx_n = 200;
  std::string approx_theorem = "both";
  std::vector<int> approx_d;
  double approx_tol = 1e-10;
  fo_approx.attach(approx);
  oo_approx.attach(approx);
  approx->add_option("--k", approx_k, "Regularity order (default: declared k)");
  approx->add_option("--theorem", approx_theorem, "majidian, xiang or both (default both)");
  approx->add_option("--n", approx_n, "Quadrature point count (default 200)");
  approx->add_option("--d", approx_d, "Truncation degrees")->required();
  approx->add_option("--tol", approx_tol, "Measurement quadrature tolerance (default 1e-10)");

  // figure1
  auto* figure1 = app.add_subcommand(
      "figure1", "Worked-example figure data for g(t)=|t|/(t+2) on [-1,1] (k=1)");
  std::string figure_panel;
  int figure_n = 200, figure_from = 2, figure_to = 30;
  std::vector<int> figure_l;
  oo_figure.attach(figure1);
  figure1->add_option("--panel", figure_panel, "a: decay bounds vs |c_j|; b: error bounds")
      ->required();
  figure1->add_option("--n", figure_n, "Quadrature point count for panel b (default 200)");
  figure1->add_option("--j-from", figure_from, "Panel a first index (default 2)");
  figure1->add_option("--j-to", figure_to, "Panel a last index (default 30)");
  figure1->add_option("--l", figure_l, "Panel b offsets (default 2,4,...,128)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coeffs->parsed())
      run_coeffs(fo_coeffs, oo_coeffs, coeffs_mode, coeffs_n, coeffs_jmax, coeffs_tol);
    else if (variation->parsed())
      run_variation(fo_variation, oo_variation, variation_k, variation_kind, variation_tol);
    else if (decay->parsed())
      run_decay(fo_decay, oo_decay, decay_k, decay_theorem, decay_from, decay_to, decay_tol);
    else if (errbound->parsed())
      run_errbound(fo_errbound, oo_errbound, errbound_k, errbound_theorem, errbound_n, errbound_d,
                   errbound_l, errbound_tol);
    else if (approx->parsed())
      run_approx(fo_approx, oo_approx, approx_k, approx_theorem, approx_n, approx_d, approx_tol);
    else if (figure1->parsed())
      run_figure1(oo_figure, figure_panel, figure_n, figure_from, figure_to, figure_l);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
