#include "nonufd/expr.hpp"

#include <cctype>
#include <charconv>

namespace nonufd {

namespace {

enum class Tok { Plus, Star, Caret, LParen, RParen, Number, Ident, Var, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view src, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < src.size(); ++i) {
    if (src[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail(std::string_view src, std::size_t offset, const std::string& message) {
  offset = std::min(offset, src.size());
  const auto [line, column] = line_column(src, offset);
  throw ParseError(message, offset, line, column);
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, {}, start};
    const char c = src_[pos_];
    switch (c) {
      case '+': ++pos_; return {Tok::Plus, src_.substr(start, 1), start};
      case '*': ++pos_; return {Tok::Star, src_.substr(start, 1), start};
      case '^': ++pos_; return {Tok::Caret, src_.substr(start, 1), start};
      case '(': ++pos_; return {Tok::LParen, src_.substr(start, 1), start};
      case ')': ++pos_; return {Tok::RParen, src_.substr(start, 1), start};
      default: break;
    }
    if (is_digit(c)) {
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' && is_digit(src_[pos_ + 1])) {
        ++pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      }
      return {Tok::Number, src_.substr(start, pos_ - start), start};
    }
    if (is_alpha(c)) {
      while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_]))) ++pos_;
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "T") return {Tok::Var, word, start};
      // t(r) and m(q) are single literal tokens.
      if ((word == "t" || word == "m") && pos_ < src_.size() && src_[pos_] == '(') {
        const auto close = src_.find(')', pos_);
        if (close == std::string_view::npos) fail(src_, start, "unterminated literal '" + std::string(word) + "('");
        pos_ = close + 1;
        return {Tok::Ident, src_.substr(start, pos_ - start), start};
      }
      return {Tok::Ident, word, start};
    }
    fail(src_, start, std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), lexer_(src) { advance(); }

  ExprAst parse_all() {
    if (cur_.kind == Tok::End) fail(src_, cur_.offset, "empty expression");
    ExprAst e = expr();
    if (cur_.kind != Tok::End) fail(src_, cur_.offset, "unexpected '" + std::string(cur_.text) + "'");
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  static bool starts_atom(Tok t) {
    return t == Tok::Var || t == Tok::Number || t == Tok::Ident || t == Tok::LParen;
  }

  static bool parenthesized(const ExprAst& e) {
    if (e.kind == ExprAst::Kind::Paren) return true;
    return e.kind == ExprAst::Kind::Pow && e.children.front().kind == ExprAst::Kind::Paren;
  }

  ExprAst expr() {
    ExprAst first = term();
    if (cur_.kind != Tok::Plus) return first;
    ExprAst sum{ExprAst::Kind::Add, {}, 0, {}, first.offset};
    sum.children.push_back(std::move(first));
    while (cur_.kind == Tok::Plus) {
      advance();
      sum.children.push_back(term());
    }
    return sum;
  }

  ExprAst term() {
    ExprAst first = power();
    ExprAst product{ExprAst::Kind::Mul, {}, 0, {}, first.offset};
    product.children.push_back(std::move(first));
    for (;;) {
      if (cur_.kind == Tok::Star) {
        advance();
        product.children.push_back(power());
      } else if (starts_atom(cur_.kind) && parenthesized(product.children.back())) {
        product.children.push_back(power());
      } else {
        break;
      }
    }
    if (product.children.size() == 1) return std::move(product.children.front());
    return product;
  }

  ExprAst power() {
    ExprAst base = atom();
    if (cur_.kind != Tok::Caret) return base;
    advance();
    if (cur_.kind != Tok::Number || cur_.text.find('/') != std::string_view::npos) {
      fail(src_, cur_.offset, "expected a natural exponent after '^'");
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), value);
    if (ec != std::errc() || value > kMaxExponent) {
      fail(src_, cur_.offset, "exponent overflow (limit " + std::to_string(kMaxExponent) + ")");
    }
    ExprAst pow{ExprAst::Kind::Pow, {}, static_cast<std::uint32_t>(value), {}, base.offset};
    pow.children.push_back(std::move(base));
    advance();
    return pow;
  }

  ExprAst atom() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Var:
        advance();
        return ExprAst{ExprAst::Kind::Var, std::string(t.text), 0, {}, t.offset};
      case Tok::Number:
      case Tok::Ident:
        advance();
        return ExprAst{ExprAst::Kind::Literal, std::string(t.text), 0, {}, t.offset};
      case Tok::LParen: {
        advance();
        ExprAst inner = expr();
        if (cur_.kind != Tok::RParen) fail(src_, cur_.offset, "expected ')'");
        advance();
        ExprAst paren{ExprAst::Kind::Paren, {}, 0, {}, t.offset};
        paren.children.push_back(std::move(inner));
        return paren;
      }
      case Tok::End:
        fail(src_, t.offset, "expected a term, found end of input");
      default:
        fail(src_, t.offset, "expected a term, found '" + std::string(t.text) + "'");
    }
  }

  std::string_view src_;
  Lexer lexer_;
  Token cur_{Tok::End, {}, 0};
};

std::size_t degree_or_zero(const Polynomial& p) { return p.degree().value_or(0); }

}  // namespace

ExprAst parse_ast(std::string_view src) { return Parser(src).parse_all(); }

Polynomial evaluate(const ExprAst& ast, const SemiringRef& r, std::string_view src) {
  switch (ast.kind) {
    case ExprAst::Kind::Literal: {
      auto e = r->parse_literal(ast.text);
      if (!e) fail(src, ast.offset, "unknown literal '" + ast.text + "' for semiring '" + std::string(r->id()) + "'");
      return Polynomial::constant(r, std::move(*e));
    }
    case ExprAst::Kind::Var:
      return Polynomial::monomial(r, r->one(), 1);
    case ExprAst::Kind::Paren:
      return evaluate(ast.children.front(), r, src);
    case ExprAst::Kind::Add: {
      Polynomial acc(r);
      for (const auto& c : ast.children) acc = poly_add(acc, evaluate(c, r, src));
      return acc;
    }
    case ExprAst::Kind::Mul: {
      Polynomial acc = Polynomial::constant(r, r->one());
      for (const auto& c : ast.children) {
        Polynomial next = evaluate(c, r, src);
        if (degree_or_zero(acc) + degree_or_zero(next) > kMaxDegree) fail(src, c.offset, "degree overflow");
        acc = poly_mul(acc, next);
      }
      return acc;
    }
    case ExprAst::Kind::Pow: {
      Polynomial base = evaluate(ast.children.front(), r, src);
      if (degree_or_zero(base) * ast.exponent > kMaxDegree) fail(src, ast.offset, "degree overflow");
      return poly_pow(base, ast.exponent);
    }
  }
  fail(src, ast.offset, "malformed expression");
}

Polynomial parse(std::string_view src, const SemiringRef& r) { return evaluate(parse_ast(src), r, src); }

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const Semiring& r = p.semiring();
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Element& c = coeffs[k];
    if (r.is_zero(c)) continue;
    if (!out.empty()) out += '+';
    std::string lit = r.render_literal(c);
    if (k == 0) {
      out += lit;
      continue;
    }
    if (!r.is_one(c)) {
      out += lit.find('+') != std::string::npos ? "(" + lit + ")" : lit;
      out += '*';
    }
    out += 'T';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace nonufd
