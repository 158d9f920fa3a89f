#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace chebbv {

enum class MathFunc { sin, cos, exp, log, sqrt, abs };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over one free variable. Powers carry an integer
/// exponent; fractional powers must be spelled via sqrt or exp/log.
struct Expr {
  enum class Kind { constant, variable, add, sub, mul, div, pow, neg, call };

  Kind kind;
  double value = 0.0;             // constant
  int exponent = 1;               // pow
  MathFunc func = MathFunc::sin;  // call
  ExprPtr lhs;                    // left operand, or the sole operand
  ExprPtr rhs;                    // right operand
};

// Node factories. Constant subtrees are folded where that cannot change the
// fault behavior of evaluation.
ExprPtr make_constant(double v);
ExprPtr make_variable();
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, int exponent);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_call(MathFunc f, ExprPtr a);

/// Evaluate with the free variable bound to t. Throws EvalError on division
/// by zero, log of a nonpositive value, or sqrt of a negative value.
double eval_expr(const Expr& e, double t);

/// Symbolic derivative. abs nodes are not differentiable; callers are
/// expected to have rewritten them piecewise first.
ExprPtr diff_expr(const ExprPtr& e);

bool contains_abs(const Expr& e);

/// Text form that parses back to an identically-evaluating tree.
std::string expr_to_string(const Expr& e);

/// Parse a standalone expression in the function grammar.
ExprPtr parse_expression(std::string_view text);

}  // namespace chebbv
