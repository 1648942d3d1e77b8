#ifndef PFRES_PARSER_HPP
#define PFRES_PARSER_HPP

// Text form of polynomials.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*        '/' only by a nonzero constant
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
//
// Juxtaposition ("2x", "x y") is rejected.

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pfres/polynomial.hpp"

namespace pfres {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

template <Field F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

  Polynomial<F> parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    auto acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial<F> term() {
    auto acc = unary();
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        auto d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        acc = acc.scaled(ring_->field().inv(d.leading_term().coeff));
      } else {
        skip_ws();
        if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' ||
                                    text_[pos_] == '_'))
          throw ParseError("implicit multiplication is not allowed", pos_);
        return acc;
      }
    }
  }

  Polynomial<F> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial<F> power() {
    auto base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      if (pos_ - start > 6) throw ParseError("exponent too large", start);
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial<F> primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial<F>::constant(ring_, ring_->field().from_decimal(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->variable_index(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial<F>::variable(ring_, *idx);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Field F>
Polynomial<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyParser<F>(text, ring).parse();
}

template <Field F>
std::string to_string(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  const F& k = f.field();
  const auto& names = f.ring()->variables();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = k.is_negative(t.coeff);
    auto mag = neg ? k.neg(t.coeff) : t.coeff;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit = k.is_one(mag);
    if (!unit || t.mono.is_one()) {
      out += k.to_string(mag);
      if (!t.mono.is_one()) out += "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_var) out += "*";
      first_var = false;
      out += names[i];
      if (t.mono[i] > 1) out += "^" + std::to_string(t.mono[i]);
    }
  }
  return out;
}

template <Field F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& f) {
  return os << to_string(f);
}

}  // namespace pfres

#endif  // PFRES_PARSER_HPP
