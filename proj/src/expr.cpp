#include "chebbv/expr.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "chebbv/errors.hpp"
#include "lexer.hpp"

namespace chebbv {

namespace {

using Kind = Expr::Kind;

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

bool is_const(const ExprPtr& e, double v) {
  return e->kind == Kind::constant && e->value == v;
}

// x^m by squaring; m < 0 inverts, with a zero-base fault.
double pow_int(double base, int m) {
  if (m < 0) {
    if (base == 0.0) throw EvalError("division by zero (zero raised to a negative power)");
    return 1.0 / pow_int(base, -m);
  }
  double result = 1.0, p = base;
  for (unsigned u = static_cast<unsigned>(m); u != 0; u >>= 1) {
    if (u & 1u) result *= p;
    p *= p;
  }
  return result;
}

const char* func_name(MathFunc f) {
  switch (f) {
    case MathFunc::sin: return "sin";
    case MathFunc::cos: return "cos";
    case MathFunc::exp: return "exp";
    case MathFunc::log: return "log";
    case MathFunc::sqrt: return "sqrt";
    case MathFunc::abs: return "abs";
  }
  return "?";
}

}  // namespace

ExprPtr make_constant(double v) {
  Expr e;
  e.kind = Kind::constant;
  e.value = v;
  return node(std::move(e));
}

ExprPtr make_variable() {
  Expr e;
  e.kind = Kind::variable;
  return node(std::move(e));
}

ExprPtr make_add(ExprPtr a, ExprPtr b) {
  if (a->kind == Kind::constant && b->kind == Kind::constant)
    return make_constant(a->value + b->value);
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  Expr e;
  e.kind = Kind::add;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return node(std::move(e));
}

ExprPtr make_sub(ExprPtr a, ExprPtr b) {
  if (a->kind == Kind::constant && b->kind == Kind::constant)
    return make_constant(a->value - b->value);
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return make_neg(std::move(b));
  Expr e;
  e.kind = Kind::sub;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return node(std::move(e));
}

ExprPtr make_mul(ExprPtr a, ExprPtr b) {
  if (a->kind == Kind::constant && b->kind == Kind::constant)
    return make_constant(a->value * b->value);
  if (is_const(a, 0.0) || is_const(b, 0.0)) return make_constant(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  Expr e;
  e.kind = Kind::mul;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return node(std::move(e));
}

ExprPtr make_div(ExprPtr a, ExprPtr b) {
  if (b->kind == Kind::constant && b->value != 0.0) {
    if (a->kind == Kind::constant) return make_constant(a->value / b->value);
    if (b->value == 1.0) return a;
  }
  if (is_const(a, 0.0)) return make_constant(0.0);
  Expr e;
  e.kind = Kind::div;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return node(std::move(e));
}

ExprPtr make_pow(ExprPtr base, int exponent) {
  if (exponent == 0) return make_constant(1.0);
  if (exponent == 1) return base;
  if (base->kind == Kind::constant && !(base->value == 0.0 && exponent < 0))
    return make_constant(pow_int(base->value, exponent));
  Expr e;
  e.kind = Kind::pow;
  e.exponent = exponent;
  e.lhs = std::move(base);
  return node(std::move(e));
}

ExprPtr make_neg(ExprPtr a) {
  if (a->kind == Kind::constant) return make_constant(-a->value);
  if (a->kind == Kind::neg) return a->lhs;
  Expr e;
  e.kind = Kind::neg;
  e.lhs = std::move(a);
  return node(std::move(e));
}

ExprPtr make_call(MathFunc f, ExprPtr a) {
  if (a->kind == Kind::constant) {
    try {
      Expr probe;
      probe.kind = Kind::call;
      probe.func = f;
      probe.lhs = a;
      return make_constant(eval_expr(probe, 0.0));
    } catch (const EvalError&) {
      // keep the node so the fault surfaces at evaluation time
    }
  }
  Expr e;
  e.kind = Kind::call;
  e.func = f;
  e.lhs = std::move(a);
  return node(std::move(e));
}

double eval_expr(const Expr& e, double t) {
  switch (e.kind) {
    case Kind::constant: return e.value;
    case Kind::variable: return t;
    case Kind::add: return eval_expr(*e.lhs, t) + eval_expr(*e.rhs, t);
    case Kind::sub: return eval_expr(*e.lhs, t) - eval_expr(*e.rhs, t);
    case Kind::mul: return eval_expr(*e.lhs, t) * eval_expr(*e.rhs, t);
    case Kind::div: {
      const double den = eval_expr(*e.rhs, t);
      if (den == 0.0) throw EvalError("division by zero at t = " + std::to_string(t));
      return eval_expr(*e.lhs, t) / den;
    }
    case Kind::pow: return pow_int(eval_expr(*e.lhs, t), e.exponent);
    case Kind::neg: return -eval_expr(*e.lhs, t);
    case Kind::call: {
      const double u = eval_expr(*e.lhs, t);
      switch (e.func) {
        case MathFunc::sin: return std::sin(u);
        case MathFunc::cos: return std::cos(u);
        case MathFunc::exp: return std::exp(u);
        case MathFunc::log:
          if (u <= 0.0) throw EvalError("log of nonpositive value at t = " + std::to_string(t));
          return std::log(u);
        case MathFunc::sqrt:
          if (u < 0.0) throw EvalError("sqrt of negative value at t = " + std::to_string(t));
          return std::sqrt(u);
        case MathFunc::abs: return std::abs(u);
      }
      throw EvalError("unknown function");
    }
  }
  throw EvalError("malformed expression node");
}

ExprPtr diff_expr(const ExprPtr& e) {
  switch (e->kind) {
    case Kind::constant: return make_constant(0.0);
    case Kind::variable: return make_constant(1.0);
    case Kind::add: return make_add(diff_expr(e->lhs), diff_expr(e->rhs));
    case Kind::sub: return make_sub(diff_expr(e->lhs), diff_expr(e->rhs));
    case Kind::mul:
      return make_add(make_mul(diff_expr(e->lhs), e->rhs), make_mul(e->lhs, diff_expr(e->rhs)));
    case Kind::div:
      return make_div(
          make_sub(make_mul(diff_expr(e->lhs), e->rhs), make_mul(e->lhs, diff_expr(e->rhs))),
          make_pow(e->rhs, 2));
    case Kind::pow:
      return make_mul(make_mul(make_constant(e->exponent), make_pow(e->lhs, e->exponent - 1)),
                      diff_expr(e->lhs));
    case Kind::neg: return make_neg(diff_expr(e->lhs));
    case Kind::call: {
      const ExprPtr du = e->func == MathFunc::abs ? nullptr : diff_expr(e->lhs);
      switch (e->func) {
        case MathFunc::sin: return make_mul(make_call(MathFunc::cos, e->lhs), du);
        case MathFunc::cos: return make_neg(make_mul(make_call(MathFunc::sin, e->lhs), du));
        case MathFunc::exp: return make_mul(make_call(MathFunc::exp, e->lhs), du);
        case MathFunc::log: return make_div(du, e->lhs);
        case MathFunc::sqrt:
          return make_div(du, make_mul(make_constant(2.0), make_call(MathFunc::sqrt, e->lhs)));
        case MathFunc::abs:
          throw std::runtime_error(
              "cannot differentiate abs(...) whose argument changes sign inside a piece; "
              "declare a breakpoint at each sign change of the argument");
      }
      throw std::runtime_error("unknown function in derivative");
    }
  }
  throw std::runtime_error("malformed expression node in derivative");
}

bool contains_abs(const Expr& e) {
  if (e.kind == Expr::Kind::call && e.func == MathFunc::abs) return true;
  if (e.lhs && contains_abs(*e.lhs)) return true;
  if (e.rhs && contains_abs(*e.rhs)) return true;
  return false;
}

namespace {

// Precedence levels for printing: additive 1, multiplicative 2, unary 3,
// power 4, atoms 5.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Kind::add:
    case Kind::sub: return 1;
    case Kind::mul:
    case Kind::div: return 2;
    case Kind::neg: return 3;
    case Kind::pow: return 4;
    case Kind::constant: return e.value < 0.0 ? 3 : 5;
    default: return 5;
  }
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_node(const Expr& e, int min_prec, std::string& out) {
  const int prec = precedence(e);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case Kind::constant: out += format_number(e.value); break;
    case Kind::variable: out += 't'; break;
    case Kind::add:
      print_node(*e.lhs, 1, out);
      out += '+';
      print_node(*e.rhs, 2, out);
      break;
    case Kind::sub:
      print_node(*e.lhs, 1, out);
      out += '-';
      print_node(*e.rhs, 2, out);
      break;
    case Kind::mul:
      print_node(*e.lhs, 2, out);
      out += '*';
      print_node(*e.rhs, 3, out);
      break;
    case Kind::div:
      print_node(*e.lhs, 2, out);
      out += '/';
      print_node(*e.rhs, 3, out);
      break;
    case Kind::neg:
      out += '-';
      print_node(*e.lhs, 3, out);
      break;
    case Kind::pow:
      print_node(*e.lhs, 5, out);
      out += '^';
      if (e.exponent < 0) {
        out += '(';
        out += std::to_string(e.exponent);
        out += ')';
      } else {
        out += std::to_string(e.exponent);
      }
      break;
    case Kind::call:
      out += func_name(e.func);
      out += '(';
      print_node(*e.lhs, 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string expr_to_string(const Expr& e) {
  std::string out;
  print_node(e, 0, out);
  return out;
}

namespace detail {

namespace {

ExprPtr parse_factor(Lexer& lex);

ExprPtr parse_term(Lexer& lex) {
  ExprPtr left = parse_factor(lex);
  while (lex.peek().kind == TokenKind::star || lex.peek().kind == TokenKind::slash) {
    const bool mul = lex.next().kind == TokenKind::star;
    ExprPtr right = parse_factor(lex);
    left = mul ? make_mul(std::move(left), std::move(right))
               : make_div(std::move(left), std::move(right));
  }
  return left;
}

ExprPtr parse_sum(Lexer& lex) {
  ExprPtr left = parse_term(lex);
  while (lex.peek().kind == TokenKind::plus || lex.peek().kind == TokenKind::minus) {
    const bool add = lex.next().kind == TokenKind::plus;
    ExprPtr right = parse_term(lex);
    left = add ? make_add(std::move(left), std::move(right))
               : make_sub(std::move(left), std::move(right));
  }
  return left;
}

int parse_integer_exponent(Lexer& lex) {
  bool negative = false;
  bool parenthesized = false;
  if (lex.peek().kind == TokenKind::lparen) {
    lex.next();
    parenthesized = true;
  }
  if (lex.peek().kind == TokenKind::minus) {
    lex.next();
    negative = true;
  } else if (lex.peek().kind == TokenKind::plus) {
    lex.next();
  }
  const Token num = lex.expect(TokenKind::number, "an integer exponent");
  const double v = num.number;
  if (v != std::floor(v) || std::abs(v) > 1e6)
    throw ParseError("power requires an integer exponent, got '" + num.text + "'", num.pos);
  if (parenthesized) lex.expect(TokenKind::rparen, "')' after exponent");
  const int mag = static_cast<int>(v);
  return negative ? -mag : mag;
}

ExprPtr parse_atom(Lexer& lex) {
  const Token t = lex.peek();
  switch (t.kind) {
    case TokenKind::number:
      lex.next();
      return make_constant(t.number);
    case TokenKind::lparen: {
      lex.next();
      ExprPtr inner = parse_sum(lex);
      lex.expect(TokenKind::rparen, "')'");
      return inner;
    }
    case TokenKind::identifier: {
      lex.next();
      if (t.text == "t" || t.text == "x") return make_variable();
      if (t.text == "pi") return make_constant(std::numbers::pi);
      if (t.text == "e") return make_constant(std::numbers::e);
      MathFunc f;
      if (t.text == "sin") f = MathFunc::sin;
      else if (t.text == "cos") f = MathFunc::cos;
      else if (t.text == "exp") f = MathFunc::exp;
      else if (t.text == "log") f = MathFunc::log;
      else if (t.text == "sqrt") f = MathFunc::sqrt;
      else if (t.text == "abs") f = MathFunc::abs;
      else
        throw ParseError("unknown identifier '" + t.text + "'", t.pos);
      lex.expect(TokenKind::lparen, "'(' after function name");
      ExprPtr arg = parse_sum(lex);
      lex.expect(TokenKind::rparen, "')'");
      return make_call(f, std::move(arg));
    }
    default:
      throw ParseError("expected a number, variable, function call or '(', found '" +
                           Lexer::describe(t) + "'",
                       t.pos);
  }
}

ExprPtr parse_factor(Lexer& lex) {
  if (lex.peek().kind == TokenKind::minus) {
    lex.next();
    return make_neg(parse_factor(lex));
  }
  if (lex.peek().kind == TokenKind::plus) {
    lex.next();
    return parse_factor(lex);
  }
  ExprPtr base = parse_atom(lex);
  if (lex.peek().kind == TokenKind::caret) {
    lex.next();
    return make_pow(std::move(base), parse_integer_exponent(lex));
  }
  return base;
}

}  // namespace

ExprPtr parse_expression_tokens(Lexer& lex) { return parse_sum(lex); }

}  // namespace detail

ExprPtr parse_expression(std::string_view text) {
  detail::Lexer lex(text);
  ExprPtr e = detail::parse_expression_tokens(lex);
  if (lex.peek().kind != detail::TokenKind::end)
    throw ParseError("unexpected trailing input '" + detail::Lexer::describe(lex.peek()) + "'",
                     lex.peek().pos);
  return e;
}

}  // namespace chebbv
