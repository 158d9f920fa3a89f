#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chebbv/expr.hpp"
#include "chebbv/interval.hpp"

namespace chebbv {

/// Piece selector when evaluating exactly at a breakpoint. `automatic`
/// resolves to the right-hand piece.
enum class Side { left, right, automatic };

/// One piece of a piecewise definition: `expr` is evaluable and symbolically
/// differentiable on the closure of [lo, hi].
struct Piece {
  double lo;
  double hi;
  ExprPtr expr;
};

struct JumpEntry {
  double x;     // breakpoint
  double jump;  // right value - left value
};

class FunctionSpec;

/// Piecewise symbolic derivative of order r, together with the jump table of
/// the order-(r-1) derivative at the breakpoints (the Dirac weights carried
/// by order r). The table is populated only for r = k+1; for r <= k the
/// declared absolute continuity makes every jump zero, which is audited
/// numerically and reported through `warnings` when violated.
struct DerivativeResult;

/// A piecewise function on [a,b] with declared interior breakpoints and a
/// declared smoothness class k: f, ..., f^(k-1) absolutely continuous, while
/// f^(k) may jump at the breakpoints.
class FunctionSpec {
public:
  /// Grammar (whitespace-insensitive):
  ///   on [a,b]: piece [a,x1): <expr>; piece [x1,b]: <expr>; k=<int>
  /// with the single-piece shorthand
  ///   on [a,b]: <expr>; k=<int>
  /// Pieces must partition [a,b] exactly; breakpoints are inferred from the
  /// piece boundaries. abs(...) is rewritten away per piece when its argument
  /// keeps one sign there.
  static FunctionSpec parse(std::string_view text);

  const Interval& interval() const { return interval_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  int smoothness() const { return smoothness_; }

  double evaluate_at(double x, Side side = Side::automatic) const;
  double operator()(double x) const { return evaluate_at(x); }

  /// Order-r symbolic derivative, 0 <= r <= k+1.
  DerivativeResult derivative(int r) const;

  /// Canonical text form; parse(print()) evaluates identically.
  std::string print() const;

private:
  FunctionSpec(Interval iv, std::vector<Piece> pieces, int k);

  Interval interval_;
  std::vector<Piece> pieces_;
  std::vector<double> breakpoints_;
  int smoothness_;
};

struct DerivativeResult {
  FunctionSpec spec;
  std::vector<JumpEntry> jumps;
  std::vector<std::string> warnings;
};

}  // namespace chebbv
