#pragma once

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "chebbv/funcspec.hpp"

namespace testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234u);
  return gen;
}

// Monomial coefficients of T_k via the three-term recurrence (exact integers
// up to k ~ 50, well within double range for the degrees used in tests).
inline std::vector<double> cheb_monomial_coeffs(int k) {
  std::vector<double> prev{1.0};       // T_0
  if (k == 0) return prev;
  std::vector<double> cur{0.0, 1.0};   // T_1
  for (int m = 2; m <= k; ++m) {
    std::vector<double> next(static_cast<std::size_t>(m) + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Text form "c0+c1*t+c2*t^2+..." of a monomial-coefficient polynomial.
inline std::string poly_text(const std::vector<double>& mono) {
  std::string out;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", mono[i]);
    if (i == 0) {
      out += buf;
    } else {
      out += "+(";
      out += buf;
      out += ")*t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

inline chebbv::FunctionSpec spec_from(const std::string& text) {
  return chebbv::FunctionSpec::parse(text);
}

// Numerically stable composite forms of higher-degree first-kind polynomials.
inline const char* kT10Text = "2*(t*(16*t^4-20*t^2+5))^2-1";
inline const char* kT17Text =
    "2*(2*(2*(2*t^2-1)^2-1)^2-1)*((t*(4*t^2-3))*(4*(t*(4*t^2-3))^2-3))-t";

}  // namespace testutil
