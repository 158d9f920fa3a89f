#include "chebbv/funcspec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "chebbv/errors.hpp"
#include "lexer.hpp"

namespace chebbv {

namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

double parse_signed_number(Lexer& lex, const char* what) {
  bool negative = false;
  if (lex.peek().kind == TokenKind::minus) {
    lex.next();
    negative = true;
  } else if (lex.peek().kind == TokenKind::plus) {
    lex.next();
  }
  const Token t = lex.expect(TokenKind::number, what);
  return negative ? -t.number : t.number;
}

struct RawPiece {
  double lo;
  double hi;
  ExprPtr expr;
  std::size_t pos;  // for error reporting
};

// `piece [lo,hi): expr` – both bracket styles are accepted on either side;
// which piece governs a shared boundary is chosen at evaluation time.
RawPiece parse_piece(Lexer& lex) {
  RawPiece p;
  p.pos = lex.peek().pos;
  if (lex.peek().kind == TokenKind::lbracket || lex.peek().kind == TokenKind::lparen)
    lex.next();
  else
    throw ParseError("expected '[' or '(' opening a piece interval", lex.peek().pos);
  p.lo = parse_signed_number(lex, "piece left boundary");
  lex.expect(TokenKind::comma, "','");
  p.hi = parse_signed_number(lex, "piece right boundary");
  if (lex.peek().kind == TokenKind::rbracket || lex.peek().kind == TokenKind::rparen)
    lex.next();
  else
    throw ParseError("expected ']' or ')' closing a piece interval", lex.peek().pos);
  lex.expect(TokenKind::colon, "':'");
  p.expr = detail::parse_expression_tokens(lex);
  return p;
}

// Replace abs(u) with u or -u on a piece where u keeps one sign; an argument
// that changes sign inside the piece is left as-is and rejected if the piece
// is ever differentiated.
ExprPtr rewrite_abs(const ExprPtr& e, double lo, double hi) {
  ExprPtr lhs = e->lhs ? rewrite_abs(e->lhs, lo, hi) : nullptr;
  ExprPtr rhs = e->rhs ? rewrite_abs(e->rhs, lo, hi) : nullptr;

  ExprPtr rebuilt;
  if (lhs == e->lhs && rhs == e->rhs) {
    rebuilt = e;
  } else {
    switch (e->kind) {
      case Expr::Kind::add: rebuilt = make_add(lhs, rhs); break;
      case Expr::Kind::sub: rebuilt = make_sub(lhs, rhs); break;
      case Expr::Kind::mul: rebuilt = make_mul(lhs, rhs); break;
      case Expr::Kind::div: rebuilt = make_div(lhs, rhs); break;
      case Expr::Kind::pow: rebuilt = make_pow(lhs, e->exponent); break;
      case Expr::Kind::neg: rebuilt = make_neg(lhs); break;
      case Expr::Kind::call: rebuilt = make_call(e->func, lhs); break;
      default: rebuilt = e; break;
    }
  }

  if (rebuilt->kind != Expr::Kind::call || rebuilt->func != MathFunc::abs) return rebuilt;

  const ExprPtr& arg = rebuilt->lhs;
  constexpr int kSamples = 41;
  bool pos = false, neg = false;
  for (int i = 0; i < kSamples; ++i) {
    const double x = lo + (i + 0.5) * (hi - lo) / kSamples;
    double v;
    try {
      v = eval_expr(*arg, x);
    } catch (const EvalError&) {
      return rebuilt;  // undecidable here; the fault will surface on evaluation
    }
    if (v > 0.0) pos = true;
    if (v < 0.0) neg = true;
  }
  if (pos && neg) return rebuilt;
  return neg ? make_neg(arg) : arg;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

FunctionSpec::FunctionSpec(Interval iv, std::vector<Piece> pieces, int k)
    : interval_(iv), pieces_(std::move(pieces)), smoothness_(k) {
  for (std::size_t i = 1; i < pieces_.size(); ++i) breakpoints_.push_back(pieces_[i].lo);
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
  Lexer lex(text);

  Token kw = lex.expect(TokenKind::identifier, "'on'");
  if (kw.text != "on") throw ParseError("expected 'on', found '" + kw.text + "'", kw.pos);
  lex.expect(TokenKind::lbracket, "'['");
  const double a = parse_signed_number(lex, "interval left endpoint");
  lex.expect(TokenKind::comma, "','");
  const double b = parse_signed_number(lex, "interval right endpoint");
  const std::size_t iv_pos = lex.peek().pos;
  lex.expect(TokenKind::rbracket, "']'");
  lex.expect(TokenKind::colon, "':'");
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw ParseError("interval endpoints must be finite and increasing", iv_pos);
  const Interval iv(a, b);

  std::vector<RawPiece> raw;
  if (lex.peek().kind == TokenKind::identifier && lex.peek().text == "piece") {
    for (;;) {
      lex.next();  // 'piece'
      raw.push_back(parse_piece(lex));
      lex.expect(TokenKind::semicolon, "';'");
      if (lex.peek().kind == TokenKind::identifier && lex.peek().text == "piece") continue;
      break;
    }
  } else {
    RawPiece p;
    p.pos = lex.peek().pos;
    p.lo = a;
    p.hi = b;
    p.expr = detail::parse_expression_tokens(lex);
    raw.push_back(std::move(p));
    lex.expect(TokenKind::semicolon, "';'");
  }

  Token kkw = lex.expect(TokenKind::identifier, "'k'");
  if (kkw.text != "k") throw ParseError("expected 'k=<int>', found '" + kkw.text + "'", kkw.pos);
  lex.expect(TokenKind::equal, "'='");
  const Token kval = lex.expect(TokenKind::number, "a nonnegative integer for k");
  if (kval.number != std::floor(kval.number) || kval.number < 0.0 || kval.number > 1e6)
    throw ParseError("smoothness class k must be a nonnegative integer", kval.pos);
  const int k = static_cast<int>(kval.number);
  if (lex.peek().kind == TokenKind::semicolon) lex.next();
  if (lex.peek().kind != TokenKind::end)
    throw ParseError("unexpected trailing input '" + Lexer::describe(lex.peek()) + "'",
                     lex.peek().pos);

  // The pieces must tile [a,b] exactly, in order.
  if (raw.front().lo != a)
    throw ParseError("first piece must start at the interval left endpoint " + format_number(a),
                     raw.front().pos);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i].lo < raw[i].hi))
      throw ParseError("empty piece: boundaries must increase", raw[i].pos);
    if (i > 0) {
      if (raw[i].lo < raw[i - 1].hi)
        throw ParseError("pieces overlap: piece starts at " + format_number(raw[i].lo) +
                             " before the previous piece ends at " + format_number(raw[i - 1].hi),
                         raw[i].pos);
      if (raw[i].lo > raw[i - 1].hi)
        throw ParseError("pieces leave a gap between " + format_number(raw[i - 1].hi) + " and " +
                             format_number(raw[i].lo),
                         raw[i].pos);
    }
  }
  if (raw.back().hi != b)
    throw ParseError("last piece must end at the interval right endpoint " + format_number(b),
                     raw.back().pos);

  std::vector<Piece> pieces;
  pieces.reserve(raw.size());
  for (const RawPiece& p : raw)
    pieces.push_back(Piece{p.lo, p.hi, rewrite_abs(p.expr, p.lo, p.hi)});
  return FunctionSpec(iv, std::move(pieces), k);
}

double FunctionSpec::evaluate_at(double x, Side side) const {
  // Tolerate endpoint rounding at the same relative scale as the reference map.
  const double slack = 1e-12 * std::max({1.0, std::abs(interval_.a), std::abs(interval_.b)});
  if (x < interval_.a || x > interval_.b) {
    if (x >= interval_.a - slack && x <= interval_.a) x = interval_.a;
    else if (x <= interval_.b + slack && x >= interval_.b) x = interval_.b;
    else
      throw std::domain_error("evaluate_at: x = " + std::to_string(x) + " outside [" +
                              std::to_string(interval_.a) + ", " + std::to_string(interval_.b) +
                              "]");
  }

  // Last piece whose lo <= x; at a shared boundary, Side::left selects the
  // piece ending there.
  std::size_t idx = 0;
  {
    std::size_t lo = 0, hi = pieces_.size();
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (pieces_[mid].lo <= x) lo = mid;
      else hi = mid;
    }
    idx = lo;
  }
  if (side == Side::left && idx > 0 && x == pieces_[idx].lo) --idx;

  try {
    return eval_expr(*pieces_[idx].expr, x);
  } catch (const EvalError& err) {
    throw EvalError(std::string(err.what()) + " (in piece " + std::to_string(idx + 1) + " [" +
                    format_number(pieces_[idx].lo) + ", " + format_number(pieces_[idx].hi) + "])");
  }
}

DerivativeResult FunctionSpec::derivative(int r) const {
  if (r < 0) throw std::invalid_argument("derivative: order must be nonnegative");
  if (r > smoothness_ + 1)
    throw std::invalid_argument("derivative: order " + std::to_string(r) +
                                " exceeds k+1 = " + std::to_string(smoothness_ + 1) +
                                " supported by the declared smoothness class");

  std::vector<Piece> dr_pieces;       // order r
  std::vector<Piece> drm1_pieces;     // order r-1, for the jump table
  dr_pieces.reserve(pieces_.size());
  drm1_pieces.reserve(pieces_.size());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    ExprPtr d = pieces_[i].expr;
    ExprPtr dm1 = d;
    try {
      for (int o = 0; o < r; ++o) {
        dm1 = d;
        d = diff_expr(d);
      }
    } catch (const std::runtime_error& err) {
      throw std::runtime_error(std::string(err.what()) + " (in piece " + std::to_string(i + 1) +
                               ")");
    }
    dr_pieces.push_back(Piece{pieces_[i].lo, pieces_[i].hi, d});
    drm1_pieces.push_back(Piece{pieces_[i].lo, pieces_[i].hi, dm1});
  }

  DerivativeResult result{
      FunctionSpec(interval_, std::move(dr_pieces), std::max(smoothness_ - r, 0)), {}, {}};

  if (r == 0) return result;

  // One-sided values of f^(r-1) at each breakpoint.
  for (std::size_t i = 0; i + 1 < drm1_pieces.size(); ++i) {
    const double xbp = drm1_pieces[i + 1].lo;
    const double left = eval_expr(*drm1_pieces[i].expr, xbp);
    const double right = eval_expr(*drm1_pieces[i + 1].expr, xbp);
    const double jump = right - left;
    if (r == smoothness_ + 1) {
      result.jumps.push_back(JumpEntry{xbp, jump});
    } else if (std::abs(jump) > 1e-9 * std::max({1.0, std::abs(left), std::abs(right)})) {
      result.warnings.push_back("derivative of order " + std::to_string(r - 1) +
                                " jumps by " + format_number(jump) + " at breakpoint " +
                                format_number(xbp) +
                                ", violating the declared absolute continuity (k = " +
                                std::to_string(smoothness_) + ")");
    }
  }
  return result;
}

std::string FunctionSpec::print() const {
  std::string out = "on [" + format_number(interval_.a) + "," + format_number(interval_.b) + "]: ";
  if (pieces_.size() == 1) {
    out += expr_to_string(*pieces_[0].expr) + ";";
  } else {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (i > 0) out += " ";
      const bool last = i + 1 == pieces_.size();
      out += "piece [" + format_number(pieces_[i].lo) + "," + format_number(pieces_[i].hi) +
             (last ? "]: " : "): ") + expr_to_string(*pieces_[i].expr) + ";";
    }
  }
  out += " k=" + std::to_string(smoothness_);
  return out;
}

}  // namespace chebbv
